#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyptom {

// Minkowski 3-vector with signature (-,+,+). Also used for points of the
// hyperbolic plane in the hyperboloid model: <p,p> = -1, x0 >= 1.
struct V3 {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0;
};
using HPoint = V3;

inline V3 operator+(V3 a, V3 b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
inline V3 operator-(V3 a, V3 b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
inline V3 operator*(double s, V3 a) { return {s * a.x0, s * a.x1, s * a.x2}; }
inline V3 operator-(V3 a) { return {-a.x0, -a.x1, -a.x2}; }

inline double mink_inner(V3 p, V3 q) {
    return -p.x0 * q.x0 + p.x1 * q.x1 + p.x2 * q.x2;
}

// eta * (a x b); Minkowski-orthogonal to both arguments.
inline V3 mcross(V3 a, V3 b) {
    return {-(a.x1 * b.x2 - a.x2 * b.x1),
            a.x2 * b.x0 - a.x0 * b.x2,
            a.x0 * b.x1 - a.x1 * b.x0};
}

// Rescale a timelike vector onto the upper hyperboloid sheet.
inline HPoint normalize_point(V3 p) {
    double s = -mink_inner(p, p);
    if (s <= 0.0) throw std::domain_error("normalize_point: vector is not timelike");
    V3 r = (1.0 / std::sqrt(s)) * p;
    return r.x0 < 0.0 ? -r : r;
}

inline V3 normalize_space(V3 v) {
    double s = mink_inner(v, v);
    if (s <= 0.0) throw std::domain_error("normalize_space: vector is not spacelike");
    return (1.0 / std::sqrt(s)) * v;
}

inline double dist(HPoint p, HPoint q) {
    double c = -mink_inner(p, q);
    return std::acosh(c < 1.0 ? 1.0 : c);
}

enum class Model { disc, uhp, klein };

struct ModelPoint {
    Model model = Model::disc;
    double u = 0.0, v = 0.0;
};

HPoint from_model(const ModelPoint& mp);
ModelPoint to_model(HPoint p, Model m);

inline HPoint from_disc(double u, double v) { return from_model({Model::disc, u, v}); }
inline HPoint from_uhp(double u, double v) { return from_model({Model::uhp, u, v}); }
inline HPoint from_klein(double u, double v) { return from_model({Model::klein, u, v}); }

// Orthonormal basis of the tangent plane at c, right-handed: mcross(c,e1)=e2.
std::pair<V3, V3> tangent_basis(HPoint c);

// Orientation-preserving rotation by alpha about c.
HPoint rotate_about(HPoint c, double alpha, HPoint p);

std::string model_name(Model m);
Model model_from_name(const std::string& s);

} // namespace hyptom
