#include "hyptom/hpoint.hpp"

namespace hyptom {

HPoint from_model(const ModelPoint& mp) {
    switch (mp.model) {
        case Model::disc: {
            double r2 = mp.u * mp.u + mp.v * mp.v;
            if (r2 >= 1.0) throw std::domain_error("from_model: disc point outside unit disc");
            double d = 1.0 - r2;
            return {(1.0 + r2) / d, 2.0 * mp.u / d, 2.0 * mp.v / d};
        }
        case Model::klein: {
            double r2 = mp.u * mp.u + mp.v * mp.v;
            if (r2 >= 1.0) throw std::domain_error("from_model: klein point outside unit disc");
            double x0 = 1.0 / std::sqrt(1.0 - r2);
            return {x0, x0 * mp.u, x0 * mp.v};
        }
        case Model::uhp: {
            if (mp.v <= 0.0) throw std::domain_error("from_model: uhp point must have v > 0");
            // Cayley map w = (z - i)/(z + i), then disc -> hyperboloid.
            double x = mp.u, y = mp.v;
            double den = x * x + (y + 1.0) * (y + 1.0);
            double wu = (x * x + y * y - 1.0) / den;
            double wv = -2.0 * x / den;
            return from_model({Model::disc, wu, wv});
        }
    }
    throw std::logic_error("from_model: bad model tag");
}

ModelPoint to_model(HPoint p, Model m) {
    switch (m) {
        case Model::disc:
            return {Model::disc, p.x1 / (1.0 + p.x0), p.x2 / (1.0 + p.x0)};
        case Model::klein:
            return {Model::klein, p.x1 / p.x0, p.x2 / p.x0};
        case Model::uhp: {
            ModelPoint d = to_model(p, Model::disc);
            double den = (1.0 - d.u) * (1.0 - d.u) + d.v * d.v;
            double r2 = d.u * d.u + d.v * d.v;
            return {Model::uhp, -2.0 * d.v / den, (1.0 - r2) / den};
        }
    }
    throw std::logic_error("to_model: bad model tag");
}

std::pair<V3, V3> tangent_basis(HPoint c) {
    V3 a{0.0, 1.0, 0.0};
    V3 e1 = normalize_space(a + mink_inner(a, c) * c);
    V3 b{0.0, 0.0, 1.0};
    V3 bt = b + mink_inner(b, c) * c;
    V3 e2 = normalize_space(bt - mink_inner(bt, e1) * e1);
    if (mink_inner(mcross(c, e1), e2) < 0.0) e2 = -e2;
    return {e1, e2};
}

HPoint rotate_about(HPoint c, double alpha, HPoint p) {
    double d = dist(c, p);
    if (d < 1e-15) return p;
    V3 w = (1.0 / std::sinh(d)) * (p - std::cosh(d) * c);
    auto [e1, e2] = tangent_basis(c);
    double w1 = mink_inner(w, e1), w2 = mink_inner(w, e2);
    double ca = std::cos(alpha), sa = std::sin(alpha);
    V3 wr = (ca * w1 - sa * w2) * e1 + (sa * w1 + ca * w2) * e2;
    return normalize_point(std::cosh(d) * c + std::sinh(d) * wr);
}

std::string model_name(Model m) {
    switch (m) {
        case Model::disc: return "disc";
        case Model::uhp: return "uhp";
        case Model::klein: return "klein";
    }
    return "?";
}

Model model_from_name(const std::string& s) {
    if (s == "disc") return Model::disc;
    if (s == "uhp") return Model::uhp;
    if (s == "klein") return Model::klein;
    throw std::invalid_argument("unknown model name: " + s);
}

} // namespace hyptom
