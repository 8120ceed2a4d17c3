#include "hyptom/body.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyptom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Direction at `from` toward `to`, as a unit tangent vector.
V3 dir_toward(HPoint from, HPoint to) {
    return normalize_space(to + mink_inner(to, from) * from);
}

double polar_angle(HPoint anchor, const V3& e1, const V3& e2, HPoint x) {
    V3 w = dir_toward(anchor, x);
    return wrap_angle(std::atan2(mink_inner(w, e2), mink_inner(w, e1)));
}

} // namespace

double RadialBody::rho(double theta) const {
    double r = c0;
    for (const auto& t : terms)
        r += t.cos_amp * std::cos(t.k * theta) + t.sin_amp * std::sin(t.k * theta);
    return r;
}

double RadialBody::drho(double theta) const {
    double r = 0.0;
    for (const auto& t : terms)
        r += t.k * (-t.cos_amp * std::sin(t.k * theta) + t.sin_amp * std::cos(t.k * theta));
    return r;
}

namespace {

HPoint radial_point(const RadialBody& B, double theta) {
    V3 w = std::cos(theta) * B.e1 + std::sin(theta) * B.e2;
    double r = B.rho(theta);
    return normalize_point(std::cosh(r) * B.center + std::sinh(r) * w);
}

V3 radial_tangent_dir(const RadialBody& B, double theta) {
    V3 w = std::cos(theta) * B.e1 + std::sin(theta) * B.e2;
    V3 wp = -std::sin(theta) * B.e1 + std::cos(theta) * B.e2;
    double r = B.rho(theta), rp = B.drho(theta);
    V3 dx = rp * (std::sinh(r) * B.center + std::cosh(r) * w) + std::sinh(r) * wp;
    return normalize_space(dx);
}

} // namespace

RadialBody make_radial_body(HPoint center, double c0, std::vector<FourierTerm> terms,
                            int grid_m) {
    RadialBody B;
    B.center = center;
    auto [e1, e2] = tangent_basis(center);
    B.e1 = e1;
    B.e2 = e2;
    B.c0 = c0;
    B.terms = std::move(terms);
    if (grid_m < 16) grid_m = 16;
    B.grid.reserve(grid_m);
    B.grid_theta.reserve(grid_m);
    for (int i = 0; i < grid_m; ++i) {
        double th = kTwoPi * i / grid_m;
        if (B.rho(th) <= 0.0) throw std::invalid_argument("radial body: rho must stay positive");
        B.grid_theta.push_back(th);
        B.grid.push_back(radial_point(B, th));
    }
    // probabilistic convexity check: chords must stay inside (1e-7 slack)
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    for (int i = 0; i < 2000; ++i) {
        HPoint a = radial_point(B, U(rng));
        HPoint b = radial_point(B, U(rng));
        double d = dist(a, b);
        if (d < 1e-9) continue;
        Geodesic ch = geodesic_through(a, b);
        for (double f : {0.25, 0.5, 0.75}) {
            HPoint m = point_at(ch, f * d);
            double th = polar_angle(B.center, B.e1, B.e2, m);
            if (dist(B.center, m) > B.rho(th) + 1e-7)
                throw std::invalid_argument("radial body: not convex");
        }
    }
    return B;
}

ArcBody make_arc_body(std::vector<Disc> discs) {
    if (discs.size() < 2) throw std::invalid_argument("arc body needs at least two discs");
    ArcBody A;
    A.discs = std::move(discs);
    V3 acc{0, 0, 0};
    for (const auto& d : A.discs) acc = acc + d.center;
    A.interior = normalize_point(acc);
    for (const auto& d : A.discs)
        if (dist(d.center, A.interior) >= d.radius)
            throw std::invalid_argument("arc body: disc intersection empty or anchor outside");

    for (size_t i = 0; i < A.discs.size(); ++i) {
        const Disc& di = A.discs[i];
        auto [e1, e2] = tangent_basis(di.center);
        // forbidden angular zones on circle i imposed by the other discs
        std::vector<std::pair<double, double>> forb; // [lo, hi], may wrap
        for (size_t j = 0; j < A.discs.size(); ++j) {
            if (j == i) continue;
            const Disc& dj = A.discs[j];
            double D = -mink_inner(dj.center, di.center);
            double G1 = -mink_inner(dj.center, e1);
            double G2 = -mink_inner(dj.center, e2);
            double C = (std::cosh(dj.radius) - D * std::cosh(di.radius)) / std::sinh(di.radius);
            double R = std::hypot(G1, G2);
            if (R < 1e-15) continue; // concentric
            double q = C / R;
            if (q >= 1.0) continue; // no restriction
            if (q <= -1.0)
                throw std::invalid_argument("arc body: disc contributes no boundary arc");
            double psi = std::atan2(G2, G1);
            double a = std::acos(q);
            forb.push_back({wrap_angle(psi - a), wrap_angle(psi + a)});
        }
        // unwrap forbidden zones into linear segments over [0, 4pi)
        std::vector<std::pair<double, double>> seg;
        for (auto [lo, hi] : forb) {
            if (hi < lo) hi += kTwoPi;
            seg.push_back({lo, hi});
            seg.push_back({lo + kTwoPi, hi + kTwoPi});
        }
        std::sort(seg.begin(), seg.end());
        std::vector<std::pair<double, double>> merged;
        for (auto s : seg) {
            if (!merged.empty() && s.first <= merged.back().second + 1e-13)
                merged.back().second = std::max(merged.back().second, s.second);
            else
                merged.push_back(s);
        }
        // allowed arcs are the gaps between consecutive merged zones
        std::vector<std::pair<double, double>> gaps; // (wrapped start, length)
        if (merged.empty()) {
            gaps.push_back({0.0, kTwoPi});
        } else {
            for (size_t k = 0; k + 1 < merged.size(); ++k) {
                double len = merged[k + 1].first - merged[k].second;
                if (len <= 1e-12) continue;
                double lo = wrap_angle(merged[k].second);
                bool dup = false;
                for (auto& g : gaps) {
                    double dl = std::fabs(g.first - lo);
                    if (std::min(dl, kTwoPi - dl) < 1e-9) dup = true;
                }
                if (!dup) gaps.push_back({lo, std::min(len, kTwoPi)});
            }
        }
        if (gaps.empty())
            throw std::invalid_argument("arc body: disc contributes no boundary arc");
        if (gaps.size() > 1)
            throw std::invalid_argument("arc body: boundary arc disconnected");
        A.arcs.push_back({e1, e2, gaps[0].first, gaps[0].second});
    }
    return A;
}

namespace {

double klein_line_eval(const Geodesic& g, double u, double v) {
    return g.n.x1 * u + g.n.x2 * v - g.n.x0;
}

} // namespace

HalfPlaneBody make_halfplane_body(std::vector<Geodesic> planes) {
    if (planes.size() < 3) throw std::invalid_argument("half-plane body needs >= 3 planes");
    HalfPlaneBody H;
    H.planes = std::move(planes);

    std::vector<std::pair<double, double>> poly = {
        {-1.5, -1.5}, {1.5, -1.5}, {1.5, 1.5}, {-1.5, 1.5}};
    for (const auto& g : H.planes) {
        std::vector<std::pair<double, double>> out;
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            auto a = poly[i];
            auto b = poly[(i + 1) % n];
            double da = klein_line_eval(g, a.first, a.second);
            double db = klein_line_eval(g, b.first, b.second);
            if (da <= 0.0) out.push_back(a);
            if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
                double t = da / (da - db);
                out.push_back({a.first + t * (b.first - a.first),
                               a.second + t * (b.second - a.second)});
            }
        }
        poly = std::move(out);
        if (poly.size() < 3) throw std::invalid_argument("half-plane body: empty interior");
    }
    // drop duplicate consecutive vertices
    std::vector<std::pair<double, double>> clean;
    for (auto& p : poly) {
        if (clean.empty() || std::hypot(p.first - clean.back().first,
                                        p.second - clean.back().second) > 1e-13)
            clean.push_back(p);
    }
    while (clean.size() > 1 && std::hypot(clean.front().first - clean.back().first,
                                          clean.front().second - clean.back().second) < 1e-13)
        clean.pop_back();
    if (clean.size() < 3) throw std::invalid_argument("half-plane body: degenerate polygon");

    double area2 = 0.0, cu = 0.0, cv = 0.0;
    for (size_t i = 0; i < clean.size(); ++i) {
        auto a = clean[i], b = clean[(i + 1) % clean.size()];
        area2 += a.first * b.second - b.first * a.second;
        cu += a.first;
        cv += a.second;
    }
    if (area2 < 0.0) std::reverse(clean.begin(), clean.end());
    cu /= clean.size();
    cv /= clean.size();

    for (auto [u, v] : clean) {
        if (u * u + v * v >= 1.0 - 1e-12)
            throw std::invalid_argument("half-plane body: unbounded");
        H.verts.push_back(from_klein(u, v));
    }
    H.interior = from_klein(cu, cv);

    for (size_t i = 0; i < clean.size(); ++i) {
        auto a = clean[i], b = clean[(i + 1) % clean.size()];
        double mu = 0.5 * (a.first + b.first), mv = 0.5 * (a.second + b.second);
        int best = -1;
        double bestv = 1e9;
        for (size_t k = 0; k < H.planes.size(); ++k) {
            double val = std::fabs(klein_line_eval(H.planes[k], mu, mv));
            if (val < bestv) {
                bestv = val;
                best = static_cast<int>(k);
            }
        }
        H.edge_plane.push_back(best);
    }

    // snap each vertex to the exact intersection of its two adjacent planes,
    // so equal plane pairs give bitwise-equal vertices regardless of clip order
    size_t nv = H.verts.size();
    for (size_t i = 0; i < nv; ++i) {
        int kp = H.edge_plane[(i + nv - 1) % nv], kc = H.edge_plane[i];
        if (kp == kc) continue;
        try {
            auto x = intersect(H.planes[kp], H.planes[kc]);
            if (x && dist(*x, H.verts[i]) < 1e-6) H.verts[i] = *x;
        } catch (const std::domain_error&) {
        }
    }
    return H;
}

HPoint interior_of(const Body& K) {
    return std::visit([](const auto& b) -> HPoint {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) return b.center;
        else return b.interior;
    }, K);
}

double interior_margin(const Body& K, HPoint p) {
    return std::visit([&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            double d = dist(b.center, p);
            if (d < 1e-12) {
                double m = 1e300;
                for (double th : b.grid_theta) m = std::min(m, b.rho(th));
                return m;
            }
            double th = polar_angle(b.center, b.e1, b.e2, p);
            return b.rho(th) - d;
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            double m = 1e300;
            for (const auto& d : b.discs) m = std::min(m, d.radius - dist(d.center, p));
            return m;
        } else {
            double m = 1e300;
            for (const auto& g : b.planes) m = std::min(m, -signed_dist(p, g));
            return m;
        }
    }, K);
}

bool contains(const Body& K, HPoint p, double tol) {
    return interior_margin(K, p) >= -tol;
}

RayHit boundary_hit(const Body& K, double theta) {
    return std::visit([&](const auto& b) -> RayHit {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            return {radial_point(b, theta), b.rho(theta), 0};
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            auto [e1, e2] = tangent_basis(b.interior);
            V3 w = std::cos(theta) * e1 + std::sin(theta) * e2;
            double best = 1e300;
            int piece = -1;
            for (size_t i = 0; i < b.discs.size(); ++i) {
                double A = -mink_inner(b.discs[i].center, b.interior);
                double Bc = -mink_inner(b.discs[i].center, w);
                double M = std::sqrt(A * A - Bc * Bc);
                double arg = std::cosh(b.discs[i].radius) / M;
                double t = std::acosh(arg < 1.0 ? 1.0 : arg) - std::atanh(Bc / A);
                if (t < best) {
                    best = t;
                    piece = static_cast<int>(i);
                }
            }
            Geodesic ray = geodesic_dir(b.interior, w);
            return {point_at(ray, best), best, piece};
        } else {
            auto [e1, e2] = tangent_basis(b.interior);
            V3 w = std::cos(theta) * e1 + std::sin(theta) * e2;
            double best = 1e300;
            int piece = -1;
            for (size_t i = 0; i < b.planes.size(); ++i) {
                double a = mink_inner(b.interior, b.planes[i].n);
                double c = mink_inner(w, b.planes[i].n);
                if (c <= std::fabs(a)) continue; // ray never reaches this wall
                double t = std::atanh(-a / c);
                if (t < best) {
                    best = t;
                    piece = static_cast<int>(i);
                }
            }
            if (piece < 0) throw std::runtime_error("boundary_hit: unbounded direction");
            Geodesic ray = geodesic_dir(b.interior, w);
            return {point_at(ray, best), best, piece};
        }
    }, K);
}

BoundarySample boundary_sample_at(const Body& K, double theta) {
    RayHit h = boundary_hit(K, theta);
    HPoint anchor = interior_of(K);
    BoundarySample s;
    s.x = h.x;
    s.piece = h.piece;
    s.corner = false;
    return std::visit([&](const auto& b) -> BoundarySample {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            s.theta = wrap_angle(theta);
            V3 Td = radial_tangent_dir(b, theta);
            s.tangent = geodesic_dir(s.x, Td);
            V3 N = normalize_space(mcross(s.x, Td));
            if (mink_inner(N, dir_toward(s.x, b.center)) < 0.0) N = -N;
            s.normal = geodesic_dir(s.x, N);
            return s;
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            auto [e1, e2] = tangent_basis(anchor);
            s.theta = polar_angle(anchor, e1, e2, s.x);
            s.normal = geodesic_through(s.x, b.discs[h.piece].center);
            V3 Td = normalize_space(mcross(s.x, s.normal.u));
            // orient counterclockwise about the anchor
            HPoint nx = boundary_hit(K, theta + 1e-5).x;
            if (dist(s.x, nx) > 1e-12 && mink_inner(Td, dir_toward(s.x, nx)) < 0.0) Td = -Td;
            s.tangent = geodesic_dir(s.x, Td);
            return s;
        } else {
            auto [e1, e2] = tangent_basis(anchor);
            s.theta = polar_angle(anchor, e1, e2, s.x);
            Geodesic edge = b.planes[h.piece];
            V3 Td = tangent_at(edge, coord(edge, s.x));
            // orient counterclockwise about the anchor
            HPoint nx = boundary_hit(K, theta + 1e-5).x;
            if (dist(s.x, nx) > 1e-12 && mink_inner(Td, dir_toward(s.x, nx)) < 0.0) Td = -Td;
            s.tangent = geodesic_dir(s.x, Td);
            Geodesic nrm = perpendicular_at(edge, s.x);
            if (mink_inner(nrm.u, dir_toward(s.x, anchor)) < 0.0) nrm = reversed(nrm);
            s.normal = nrm;
            return s;
        }
    }, K);
}

namespace {

std::vector<BoundarySample> boundary_radial(const RadialBody& b, int m) {
    std::vector<BoundarySample> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        double th = kTwoPi * i / m;
        BoundarySample s;
        s.x = radial_point(b, th);
        s.theta = th;
        s.piece = 0;
        V3 Td = radial_tangent_dir(b, th);
        s.tangent = geodesic_dir(s.x, Td);
        V3 N = normalize_space(mcross(s.x, Td));
        if (mink_inner(N, dir_toward(s.x, b.center)) < 0.0) N = -N;
        s.normal = geodesic_dir(s.x, N);
        out.push_back(s);
    }
    return out;
}

HPoint arc_point(const ArcBody& b, size_t i, double phi) {
    const Disc& d = b.discs[i];
    const auto& a = b.arcs[i];
    V3 w = std::cos(phi) * a.e1 + std::sin(phi) * a.e2;
    return normalize_point(std::cosh(d.radius) * d.center + std::sinh(d.radius) * w);
}

V3 arc_tangent_dir(const ArcBody& b, size_t i, double phi) {
    const auto& a = b.arcs[i];
    V3 wp = -std::sin(phi) * a.e1 + std::cos(phi) * a.e2;
    return normalize_space(std::sinh(b.discs[i].radius) * wp);
}

BoundarySample arc_sample(const ArcBody& b, const Body& K, size_t i, double phi, bool ccw,
                          bool corner, HPoint anchor, const V3& ae1, const V3& ae2) {
    BoundarySample s;
    s.x = arc_point(b, i, phi);
    s.theta = polar_angle(anchor, ae1, ae2, s.x);
    s.corner = corner;
    s.piece = static_cast<int>(i);
    V3 Td = arc_tangent_dir(b, i, phi);
    if (!ccw) Td = -Td;
    s.tangent = geodesic_dir(s.x, Td);
    s.normal = geodesic_through(s.x, b.discs[i].center);
    (void)K;
    return s;
}

std::vector<BoundarySample> boundary_arc(const ArcBody& b, const Body& K, int m) {
    HPoint anchor = b.interior;
    auto [ae1, ae2] = tangent_basis(anchor);
    struct ArcOrd {
        size_t i;
        bool ccw;
        double key;
    };
    std::vector<ArcOrd> order;
    double total_len = 0.0;
    for (size_t i = 0; i < b.arcs.size(); ++i) {
        double mid = b.arcs[i].phi_lo + 0.5 * b.arcs[i].phi_len;
        double pa0 = polar_angle(anchor, ae1, ae2, arc_point(b, i, mid));
        double pa1 = polar_angle(anchor, ae1, ae2, arc_point(b, i, mid + 1e-4));
        double dpa = pa1 - pa0;
        if (dpa > 3.141592653589793) dpa -= kTwoPi;
        if (dpa < -3.141592653589793) dpa += kTwoPi;
        order.push_back({i, dpa > 0.0, pa0});
        total_len += b.arcs[i].phi_len * std::sinh(b.discs[i].radius);
    }
    std::sort(order.begin(), order.end(), [](const ArcOrd& a, const ArcOrd& c) {
        return a.key < c.key;
    });
    std::vector<BoundarySample> out;
    for (const auto& ao : order) {
        const auto& arc = b.arcs[ao.i];
        double len = arc.phi_len * std::sinh(b.discs[ao.i].radius);
        int ni = std::max(2, static_cast<int>(std::lround(m * len / total_len)));
        double p0 = ao.ccw ? arc.phi_lo : arc.phi_lo + arc.phi_len;
        double p1 = ao.ccw ? arc.phi_lo + arc.phi_len : arc.phi_lo;
        out.push_back(arc_sample(b, K, ao.i, p0, ao.ccw, true, anchor, ae1, ae2));
        for (int j = 1; j < ni; ++j) {
            double phi = p0 + (p1 - p0) * j / ni;
            out.push_back(arc_sample(b, K, ao.i, phi, ao.ccw, false, anchor, ae1, ae2));
        }
        out.push_back(arc_sample(b, K, ao.i, p1, ao.ccw, true, anchor, ae1, ae2));
    }
    return out;
}

std::vector<BoundarySample> boundary_halfplane(const HalfPlaneBody& b, int m) {
    HPoint anchor = b.interior;
    auto [ae1, ae2] = tangent_basis(anchor);
    size_t n = b.verts.size();
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) total += dist(b.verts[i], b.verts[(i + 1) % n]);
    std::vector<BoundarySample> out;
    for (size_t i = 0; i < n; ++i) {
        HPoint a = b.verts[i], c = b.verts[(i + 1) % n];
        double len = dist(a, c);
        Geodesic edge = geodesic_through(a, c);
        int ni = std::max(1, static_cast<int>(std::lround(m * len / total)));
        for (int j = 0; j <= ni; ++j) {
            double t = len * j / ni;
            BoundarySample s;
            s.x = j == 0 ? a : (j == ni ? c : point_at(edge, t));
            s.theta = polar_angle(anchor, ae1, ae2, s.x);
            s.corner = (j == 0 || j == ni);
            s.piece = b.edge_plane[i];
            s.tangent = edge;
            Geodesic nrm = perpendicular_at(edge, s.x);
            if (mink_inner(nrm.u, dir_toward(s.x, anchor)) < 0.0) nrm = reversed(nrm);
            s.normal = nrm;
            out.push_back(s);
        }
    }
    return out;
}

} // namespace

std::vector<BoundarySample> boundary(const Body& K, int m) {
    if (m < 3) throw std::invalid_argument("boundary: m must be >= 3");
    return std::visit([&](const auto& b) -> std::vector<BoundarySample> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) return boundary_radial(b, m);
        else if constexpr (std::is_same_v<T, ArcBody>) return boundary_arc(b, K, m);
        else return boundary_halfplane(b, m);
    }, K);
}

SupportSlab disc_support(const Geodesic& L, HPoint center, double radius) {
    double A = mink_inner(center, L.c);
    double B = mink_inner(center, L.u);
    double coshd = std::sqrt(A * A - B * B);
    double tau = std::atanh(-B / A);
    double h = std::asinh(std::sinh(radius) / coshd);
    SupportSlab s;
    s.t_lo = tau - h;
    s.t_hi = tau + h;
    s.g_lo = perpendicular_at(L, point_at(L, s.t_lo));
    s.g_hi = perpendicular_at(L, point_at(L, s.t_hi));
    return s;
}

namespace {

SupportSlab slab_radial(const RadialBody& b, const Geodesic& L) {
    size_t n = b.grid.size();
    std::vector<double> vals(n);
    for (size_t i = 0; i < n; ++i) vals[i] = foot_coord(b.grid[i], L);
    size_t ilo = std::min_element(vals.begin(), vals.end()) - vals.begin();
    size_t ihi = std::max_element(vals.begin(), vals.end()) - vals.begin();
    auto fv = [&](double th) { return foot_coord(radial_point(b, th), L); };
    auto refine = [&](size_t i0, double sign) {
        double a = b.grid_theta[(i0 + n - 1) % n];
        double bb = b.grid_theta[(i0 + 1) % n];
        if (bb < a) bb += kTwoPi;
        double best = sign * vals[i0];
        for (int it = 0; it < 90; ++it) {
            double m1 = a + (bb - a) / 3.0, m2 = bb - (bb - a) / 3.0;
            if (sign * fv(m1) < sign * fv(m2)) bb = m2;
            else a = m1;
        }
        return sign * std::min(best, sign * fv(0.5 * (a + bb)));
    };
    SupportSlab s;
    s.t_lo = refine(ilo, +1.0);
    s.t_hi = refine(ihi, -1.0);
    s.g_lo = perpendicular_at(L, point_at(L, s.t_lo));
    s.g_hi = perpendicular_at(L, point_at(L, s.t_hi));
    return s;
}

SupportSlab slab_arc(const ArcBody& b, const Geodesic& L) {
    std::vector<double> lo_c, hi_c;
    for (size_t i = 0; i < b.arcs.size(); ++i) {
        const auto& arc = b.arcs[i];
        for (double phi : {arc.phi_lo, arc.phi_lo + arc.phi_len}) {
            double tau = foot_coord(arc_point(b, i, phi), L);
            lo_c.push_back(tau);
            hi_c.push_back(tau);
        }
        SupportSlab ds = disc_support(L, b.discs[i].center, b.discs[i].radius);
        for (auto [text, bucket] : {std::pair{ds.t_hi, &hi_c}, std::pair{ds.t_lo, &lo_c}}) {
            Geodesic P = perpendicular_at(L, point_at(L, text));
            HPoint xt = foot(b.discs[i].center, P);
            V3 w = dir_toward(b.discs[i].center, xt);
            double phi = wrap_angle(std::atan2(mink_inner(w, arc.e2), mink_inner(w, arc.e1)));
            double off = wrap_angle(phi - arc.phi_lo);
            if (off <= arc.phi_len) bucket->push_back(text);
        }
    }
    SupportSlab s;
    s.t_lo = *std::min_element(lo_c.begin(), lo_c.end());
    s.t_hi = *std::max_element(hi_c.begin(), hi_c.end());
    s.g_lo = perpendicular_at(L, point_at(L, s.t_lo));
    s.g_hi = perpendicular_at(L, point_at(L, s.t_hi));
    return s;
}

SupportSlab slab_halfplane(const HalfPlaneBody& b, const Geodesic& L) {
    SupportSlab s;
    s.t_lo = 1e300;
    s.t_hi = -1e300;
    for (const auto& v : b.verts) {
        double tau = foot_coord(v, L);
        s.t_lo = std::min(s.t_lo, tau);
        s.t_hi = std::max(s.t_hi, tau);
    }
    s.g_lo = perpendicular_at(L, point_at(L, s.t_lo));
    s.g_hi = perpendicular_at(L, point_at(L, s.t_hi));
    return s;
}

} // namespace

SupportSlab support_slab(const Body& K, const Geodesic& L) {
    return std::visit([&](const auto& b) -> SupportSlab {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) return slab_radial(b, L);
        else if constexpr (std::is_same_v<T, ArcBody>) return slab_arc(b, L);
        else return slab_halfplane(b, L);
    }, K);
}

double radius_bound(const Body& K) {
    return std::visit([&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            double r = 0.0;
            for (double th : b.grid_theta) r = std::max(r, b.rho(th));
            return r + 1e-6;
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            double r = 1e300;
            for (const auto& d : b.discs)
                r = std::min(r, dist(b.interior, d.center) + d.radius);
            return r + 1e-9;
        } else {
            double r = 0.0;
            for (const auto& v : b.verts) r = std::max(r, dist(b.interior, v));
            return r + 1e-9;
        }
    }, K);
}

double anchor_angle(const Body& K, HPoint x) {
    HPoint a = interior_of(K);
    auto [e1, e2] = tangent_basis(a);
    return polar_angle(a, e1, e2, x);
}

double radial_profile(const Body& K, HPoint p, double theta) {
    if (interior_margin(K, p) <= 0.0)
        throw std::invalid_argument("radial_profile: point is not interior");
    auto [e1, e2] = tangent_basis(p);
    V3 w = std::cos(theta) * e1 + std::sin(theta) * e2;
    Geodesic ray = geodesic_dir(p, w);
    double hi = radius_bound(K) + dist(p, interior_of(K)) + 1.0;
    double lo = 0.0;
    if (contains(K, point_at(ray, hi), 0.0)) throw std::runtime_error("radial_profile: bad bracket");
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (contains(K, point_at(ray, mid), 0.0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace hyptom
