#include "hyptom/geodesic.hpp"

namespace hyptom {

Geodesic geodesic_through(HPoint p, HPoint q) {
    if (dist(p, q) < 1e-12) throw std::invalid_argument("degenerate geodesic");
    V3 u = normalize_space(q + mink_inner(q, p) * p);
    V3 n = normalize_space(mcross(p, u));
    return {n, p, u};
}

Geodesic geodesic_dir(HPoint p, V3 w) {
    V3 u = normalize_space(w + mink_inner(w, p) * p);
    V3 n = normalize_space(mcross(p, u));
    return {n, p, u};
}

HPoint point_at(const Geodesic& g, double t) {
    return normalize_point(std::cosh(t) * g.c + std::sinh(t) * g.u);
}

V3 tangent_at(const Geodesic& g, double t) {
    return std::sinh(t) * g.c + std::cosh(t) * g.u;
}

double coord(const Geodesic& g, HPoint q) {
    if (std::fabs(mink_inner(q, g.n)) > 1e-7)
        throw std::invalid_argument("coord: point is not on the geodesic");
    return std::atanh(mink_inner(q, g.u) / -mink_inner(q, g.c));
}

double signed_dist(HPoint p, const Geodesic& g) {
    return std::asinh(mink_inner(p, g.n));
}

HPoint foot(HPoint p, const Geodesic& g) {
    return normalize_point(p - mink_inner(p, g.n) * g.n);
}

double foot_coord(HPoint p, const Geodesic& g) {
    return std::atanh(mink_inner(p, g.u) / -mink_inner(p, g.c));
}

Geodesic perpendicular_at(const Geodesic& g, HPoint x) {
    if (std::fabs(mink_inner(x, g.n)) > 1e-7)
        throw std::invalid_argument("perpendicular_at: point is not on the geodesic");
    HPoint xs = normalize_point(x - mink_inner(x, g.n) * g.n);
    return geodesic_dir(xs, g.n);
}

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2) {
    double d = std::fabs(mink_inner(g1.n, g2.n));
    if (d > 1.0 - 1e-12 && d < 1.0 + 1e-12) {
        // coincident lines have +-identical normals; asymptotic pairs share an
        // ideal point and |<n1,n2>| = 1
        V3 w = mcross(g1.n, g2.n);
        double wn = std::sqrt(std::fabs(mink_inner(w, w)));
        if (wn < 1e-9 && std::fabs(signed_dist(g1.c, g2)) < 1e-9)
            throw std::domain_error("intersect: coincident geodesics");
        throw std::domain_error("intersect: asymptotic geodesics");
    }
    if (d > 1.0) return std::nullopt; // ultraparallel
    return normalize_point(mcross(g1.n, g2.n));
}

double angle_at(const Geodesic& g1, const Geodesic& g2, HPoint x) {
    V3 t1 = tangent_at(g1, coord(g1, x));
    V3 t2 = tangent_at(g2, coord(g2, x));
    double c = mink_inner(t1, t2);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
    double d = std::fabs(mink_inner(g1.n, g2.n));
    if (d <= 1.0 + 1e-12) {
        if (d > 1.0 - 1e-12) throw std::domain_error("no common perpendicular: asymptotic");
        throw std::domain_error("no common perpendicular: intersecting");
    }
    V3 np = normalize_space(mcross(g1.n, g2.n));
    HPoint c = normalize_point(mcross(np, g1.n)); // meets g1 perpendicularly there
    V3 u = normalize_space(mcross(np, c));
    if (mink_inner(mcross(c, u), np) < 0.0) u = -u;
    return {np, c, u};
}

HPoint reflect(const Geodesic& g, HPoint p) {
    return normalize_point(p - 2.0 * mink_inner(p, g.n) * g.n);
}

V3 reflect_vec(const Geodesic& g, V3 v) {
    return v - 2.0 * mink_inner(v, g.n) * g.n;
}

Geodesic reflect_geodesic(const Geodesic& mirror, const Geodesic& g) {
    HPoint c = normalize_point(reflect_vec(mirror, g.c));
    V3 u = reflect_vec(mirror, g.u);
    return geodesic_dir(c, u);
}

} // namespace hyptom
