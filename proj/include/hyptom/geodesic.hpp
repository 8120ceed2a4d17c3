#pragma once

#include <optional>

#include "hyptom/hpoint.hpp"

namespace hyptom {

// Complete geodesic line. n is the unit spacelike normal, c a base point on
// the line, u the unit tangent at c; frame kept right-handed: n = mcross(c,u).
// Parametrization: gamma(t) = c*cosh(t) + u*sinh(t).
struct Geodesic {
    V3 n;
    HPoint c;
    V3 u;
};

Geodesic geodesic_through(HPoint p, HPoint q);   // base p, tangent toward q
Geodesic geodesic_dir(HPoint p, V3 w);           // base p, unit tangent w

HPoint point_at(const Geodesic& g, double t);
V3 tangent_at(const Geodesic& g, double t);
double coord(const Geodesic& g, HPoint q);       // q must lie on g

double signed_dist(HPoint p, const Geodesic& g); // arcsinh(<p,n>)
HPoint foot(HPoint p, const Geodesic& g);

// Coordinate along g of the foot of p; exact closed form.
double foot_coord(HPoint p, const Geodesic& g);

Geodesic perpendicular_at(const Geodesic& g, HPoint x); // tangent at x is g.n

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2);
double angle_at(const Geodesic& g1, const Geodesic& g2, HPoint x);
Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2);

HPoint reflect(const Geodesic& g, HPoint p);
V3 reflect_vec(const Geodesic& g, V3 v);
Geodesic reflect_geodesic(const Geodesic& mirror, const Geodesic& g);

inline Geodesic reversed(const Geodesic& g) { return {-g.n, g.c, -g.u}; }

// Interval of arclength coordinates on a geodesic.
struct Interval {
    Geodesic g;
    double t_lo = 0.0, t_hi = 0.0;
    double length() const { return t_hi - t_lo; }
};

} // namespace hyptom
