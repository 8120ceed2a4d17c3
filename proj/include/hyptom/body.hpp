#pragma once

#include <array>
#include <variant>
#include <vector>

#include "hyptom/geodesic.hpp"

namespace hyptom {

struct BoundarySample {
    HPoint x;
    Geodesic tangent; // supporting geodesic at x
    Geodesic normal;  // n_K(x), tangent u oriented inward
    double theta = 0.0; // polar angle about the interior anchor
    bool corner = false;
    int piece = -1; // arc / plane index that generated the sample
};

struct FourierTerm {
    int k = 1;
    double cos_amp = 0.0, sin_amp = 0.0;
};

// rho(theta) = c0 + sum_k (cos_amp*cos(k theta) + sin_amp*sin(k theta)),
// measured from `center` with angles in the (e1,e2) tangent frame.
struct RadialBody {
    HPoint center;
    V3 e1, e2;
    double c0 = 1.0;
    std::vector<FourierTerm> terms;
    std::vector<HPoint> grid;   // cached boundary points
    std::vector<double> grid_theta;

    double rho(double theta) const;
    double drho(double theta) const;
};

struct Disc {
    HPoint center;
    double radius = 1.0;
};

struct ArcBody {
    std::vector<Disc> discs;
    HPoint interior;
    struct ArcInfo {
        V3 e1, e2;          // tangent frame at the disc center
        double phi_lo = 0.0; // active arc is phi in [phi_lo, phi_lo + phi_len]
        double phi_len = 0.0;
    };
    std::vector<ArcInfo> arcs;
};

struct HalfPlaneBody {
    std::vector<Geodesic> planes; // body lies on the <x,n> <= 0 side of each
    HPoint interior;
    std::vector<HPoint> verts;    // counterclockwise
    std::vector<int> edge_plane;  // edge i joins verts[i] -> verts[i+1 mod n]
};

using Body = std::variant<RadialBody, HalfPlaneBody, ArcBody>;

RadialBody make_radial_body(HPoint center, double c0, std::vector<FourierTerm> terms,
                            int grid_m = 2048);
ArcBody make_arc_body(std::vector<Disc> discs);
HalfPlaneBody make_halfplane_body(std::vector<Geodesic> planes);

HPoint interior_of(const Body& K);
bool contains(const Body& K, HPoint p, double tol = 1e-9);
// Positive inside; smallest slack over the active constraints.
double interior_margin(const Body& K, HPoint p);

// Exit of the ray from the interior anchor in tangent direction theta.
struct RayHit {
    HPoint x;
    double t = 0.0; // distance from the anchor
    int piece = -1;
};
RayHit boundary_hit(const Body& K, double theta);
BoundarySample boundary_sample_at(const Body& K, double theta);

// Ordered counterclockwise; corners contribute two one-sided samples.
std::vector<BoundarySample> boundary(const Body& K, int m);

struct SupportSlab {
    Geodesic g_lo, g_hi; // perpendiculars to L at t_lo / t_hi
    double t_lo = 0.0, t_hi = 0.0;
    double length() const { return t_hi - t_lo; }
};
SupportSlab support_slab(const Body& K, const Geodesic& L);

// Distance from p to the boundary along direction theta (bisection, 1e-10).
double radial_profile(const Body& K, HPoint p, double theta);

// Radius of a ball about the interior anchor that contains the body.
double radius_bound(const Body& K);

// Polar angle of x about the interior anchor, in [0, 2pi).
double anchor_angle(const Body& K, HPoint x);

// Exact support interval of a hyperbolic disc on L.
SupportSlab disc_support(const Geodesic& L, HPoint center, double radius);

} // namespace hyptom
