#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hyptom/tomography.hpp"

namespace hyptom {

Body disc_body(HPoint center, double r);

struct ReuleauxSpec {
    HPoint center;
    double circumradius = 1.0;
};
Body reuleaux(const ReuleauxSpec& spec);

// rho(theta) = c + eps * f(theta) with f given by unit-scale Fourier terms.
Body perturbed_radial(double c, double eps, std::vector<FourierTerm> f, HPoint center);

// Intersection of translated slabs: for each direction, the slab over L_u is
// shifted along L_u by eps*f(u). f must be odd: f(theta+pi) = -f(theta).
Body slab_body(double r0, double eps, const std::function<double(double)>& f, int m);

struct GardnerReport {
    double max_row_diff = 0.0;      // pencil projection rows, P1 vs P2
    bool outside_rows_equal = true; // rows clear of swapped-plane vertex cones, bitwise
    double congruence_mismatch = 0.0;
};
std::pair<Body, Body> gardner_pair(HPoint p, const HalfPlaneBody& base, const Geodesic& G1,
                                   const Geodesic& G2, GardnerReport* report = nullptr);

// Smallest boundary mismatch over a grid of candidate isometries fixing the
// neighborhood of p (rotations, reflections, small recenterings).
double congruence_mismatch(const Body& K1, const Body& K2, HPoint p);

struct ProjectionDatum {
    double theta = 0.0;
    Geodesic L;
    double ell = 0.0;
    double ell_prime = 0.0;
    double t = 0.0;
};

std::vector<ProjectionDatum> measure_projections(const Body& K, const Pencil& P);
Body reconstruct_from_projections(const std::vector<ProjectionDatum>& data);

} // namespace hyptom
