#include "hyptom/tomography.hpp"

#include <algorithm>
#include <cmath>

namespace hyptom {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

V3 tangent_dir_at(const Geodesic& g, HPoint x) {
    return tangent_at(g, coord(g, x));
}

} // namespace

Interval projection(const Body& K, const Geodesic& G) {
    SupportSlab s = support_slab(K, G);
    return {G, s.t_lo, s.t_hi};
}

SectionResult section(const Body& K, const Geodesic& G) {
    SupportSlab slab = support_slab(K, G);
    auto margin = [&](double t) { return interior_margin(K, point_at(G, t)); };

    double t_in = foot_coord(interior_of(K), G);
    t_in = std::clamp(t_in, slab.t_lo, slab.t_hi);
    double m_in = margin(t_in);
    if (m_in <= 1e-12) {
        int n = 512;
        double best = m_in, best_t = t_in;
        for (int i = 0; i <= n; ++i) {
            double t = slab.t_lo + (slab.t_hi - slab.t_lo) * i / n;
            double m = margin(t);
            if (m > best) {
                best = m;
                best_t = t;
            }
        }
        double a = best_t - (slab.t_hi - slab.t_lo) / n;
        double b = best_t + (slab.t_hi - slab.t_lo) / n;
        for (int it = 0; it < 70; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (margin(m1) < margin(m2)) a = m1;
            else b = m2;
        }
        t_in = 0.5 * (a + b);
        m_in = margin(t_in);
        if (m_in <= 0.0) return {};
    }

    auto endpoint = [&](double out) {
        double a = t_in, b = out; // margin(a) > 0 >= margin(b)
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (a + b);
            if (margin(mid) > 0.0) a = mid;
            else b = mid;
        }
        return 0.5 * (a + b);
    };
    double lo = endpoint(slab.t_lo - 1e-7);
    double hi = endpoint(slab.t_hi + 1e-7);
    SectionResult r;
    r.chord = {G, lo, hi};
    if (hi - lo < 1e-8) {
        r.grazing = true;
        return r;
    }
    r.hit = true;
    return r;
}

double width_at(const Body& K, const BoundarySample& s) {
    return projection(K, s.normal).length();
}

bool is_double_normal(const Body& K, const Geodesic& G, double tol) {
    Interval P = projection(K, G);
    SectionResult S = section(K, G);
    if (!S.hit) throw std::invalid_argument("is_double_normal: geodesic misses the body");
    return std::fabs(P.length() - S.chord.length()) < tol &&
           std::fabs(P.t_lo - S.chord.t_lo) < tol && std::fabs(P.t_hi - S.chord.t_hi) < tol;
}

double diameter(const Body& K, int m) {
    if (m < 3) throw std::invalid_argument("diameter: m must be >= 3");
    std::vector<HPoint> pts(m);
    for (int i = 0; i < m; ++i) pts[i] = boundary_hit(K, kTwoPi * i / m).x;
    double best = 0.0;
    int bi = 0, bj = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            double d = dist(pts[i], pts[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    double ta = kTwoPi * bi / m, tb = kTwoPi * bj / m;
    double h = kTwoPi / m;
    auto f = [&](double a, double b) { return dist(boundary_hit(K, a).x, boundary_hit(K, b).x); };
    for (int round = 0; round < 40; ++round) {
        double a0 = ta - h, a1 = ta + h;
        for (int it = 0; it < 30; ++it) {
            double m1 = a0 + (a1 - a0) / 3.0, m2 = a1 - (a1 - a0) / 3.0;
            if (f(m1, tb) < f(m2, tb)) a0 = m1;
            else a1 = m2;
        }
        ta = 0.5 * (a0 + a1);
        double b0 = tb - h, b1 = tb + h;
        for (int it = 0; it < 30; ++it) {
            double m1 = b0 + (b1 - b0) / 3.0, m2 = b1 - (b1 - b0) / 3.0;
            if (f(ta, m1) < f(ta, m2)) b0 = m1;
            else b1 = m2;
        }
        tb = 0.5 * (b0 + b1);
        h *= 0.5;
        if (h < 1e-10) break;
    }
    return std::max(best, f(ta, tb));
}

WidthProfile width_profile(const Body& K, int m) {
    WidthProfile W;
    W.min_w = 1e300;
    W.max_w = -1e300;
    auto samples = boundary(K, m);
    size_t arg_min = 0, arg_max = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.corner) continue;
        double w = width_at(K, s);
        if (w < W.min_w) arg_min = W.samples.size();
        if (w > W.max_w) arg_max = W.samples.size();
        W.samples.push_back({s.theta, w});
        W.min_w = std::min(W.min_w, w);
        W.max_w = std::max(W.max_w, w);
    }
    // the sampled extremes miss smooth peaks by O(spacing^2); refine them
    if (W.samples.size() >= 3) {
        auto wat = [&](double th) {
            th = std::fmod(th, 2.0 * kPi);
            if (th < 0.0) th += 2.0 * kPi;
            return width_at(K, boundary_sample_at(K, th));
        };
        auto refine = [&](size_t idx, double sign) {
            size_t n = W.samples.size();
            double t0 = W.samples[(idx + n - 1) % n].first;
            double tc = W.samples[idx].first;
            double t1 = W.samples[(idx + 1) % n].first;
            while (t0 > tc) t0 -= 2.0 * kPi;
            while (t1 < tc) t1 += 2.0 * kPi;
            for (int it = 0; it < 70; ++it) {
                double m1 = t0 + (t1 - t0) / 3.0, m2 = t1 - (t1 - t0) / 3.0;
                if (sign * wat(m1) < sign * wat(m2))
                    t0 = m1;
                else
                    t1 = m2;
            }
            return wat(0.5 * (t0 + t1));
        };
        W.max_w = std::max(W.max_w, refine(arg_max, 1.0));
        W.min_w = std::min(W.min_w, refine(arg_min, -1.0));
    }
    // corners: fan of directions across the normal cone between the one-sided normals
    for (size_t i = 0; i < samples.size(); ++i) {
        size_t j = (i + 1) % samples.size();
        if (!samples[i].corner || !samples[j].corner) continue;
        if (dist(samples[i].x, samples[j].x) > 1e-9) continue;
        HPoint x = samples[i].x;
        V3 u1 = tangent_dir_at(samples[i].normal, x);
        V3 u2 = tangent_dir_at(samples[j].normal, x);
        for (int k = 0; k <= 8; ++k) {
            double s = k / 8.0;
            V3 u = (1.0 - s) * u1 + s * u2;
            if (mink_inner(u, u) < 1e-18) continue;
            double w = projection(K, geodesic_dir(x, normalize_space(u))).length();
            W.corner_widths.push_back(w);
            W.min_w = std::min(W.min_w, w);
            W.max_w = std::max(W.max_w, w);
        }
    }
    return W;
}

Geodesic pencil_line(const Pencil& P, int k) {
    auto [e1, e2] = tangent_basis(P.p);
    double th = kPi * k / P.m;
    return geodesic_dir(P.p, std::cos(th) * e1 + std::sin(th) * e2);
}

std::vector<Geodesic> pencil_lines(const Pencil& P) {
    std::vector<Geodesic> out;
    out.reserve(P.m);
    for (int k = 0; k < P.m; ++k) out.push_back(pencil_line(P, k));
    return out;
}

MeasurementTable pencil_profile(const Body& K, const Pencil& P, bool with_sections) {
    MeasurementTable T;
    bool inside = contains(K, P.p, 0.0) && interior_margin(K, P.p) > 0.0;
    for (int k = 0; k < P.m; ++k) {
        Geodesic L = pencil_line(P, k);
        MeasurementRow row;
        row.theta = kPi * k / P.m;
        row.projection = projection(K, L).length();
        if (with_sections) {
            SectionResult S = section(K, L);
            if (S.hit) {
                row.section = S.chord.length();
                row.double_normal = is_double_normal(K, L);
            }
        }
        if (inside) {
            double t = radial_profile(K, P.p, row.theta);
            auto [e1, e2] = tangent_basis(P.p);
            V3 w = std::cos(row.theta) * e1 + std::sin(row.theta) * e2;
            HPoint x = point_at(geodesic_dir(P.p, w), t);
            row.width = width_at(K, boundary_sample_at(K, anchor_angle(K, x)));
        }
        T.rows.push_back(row);
    }
    return T;
}

double equichordal_defect(const Body& K, HPoint p, int m) {
    if (interior_margin(K, p) <= 0.0)
        throw std::invalid_argument("equichordal_defect: point is not interior");
    std::vector<double> chords(m);
    for (int k = 0; k < m; ++k) {
        double th = kPi * k / m;
        chords[k] = radial_profile(K, p, th) + radial_profile(K, p, th + kPi);
    }
    std::vector<double> srt = chords;
    std::nth_element(srt.begin(), srt.begin() + m / 2, srt.end());
    double med = srt[m / 2];
    double defect = 0.0;
    for (double c : chords) defect = std::max(defect, std::fabs(c - med));
    return defect;
}

Geodesic small_projection(const Body& K, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("small_projection: delta must be positive");
    HPoint a = interior_of(K);
    auto [e1, e2] = tangent_basis(a);
    Geodesic L = geodesic_dir(a, e1);
    SupportSlab slab = support_slab(K, L);
    double t = slab.t_hi + 0.5;
    for (int it = 0; it < 200; ++it) {
        Geodesic M = perpendicular_at(L, point_at(L, t));
        if (projection(K, M).length() < delta) return M;
        t = slab.t_hi + 2.0 * (t - slab.t_hi);
    }
    throw std::runtime_error("small_projection: did not converge");
}

Geodesic projection_of_length(const Body& K, const Geodesic& L, double target, double tol) {
    auto plen = [&](double t) {
        return projection(K, perpendicular_at(L, point_at(L, t))).length();
    };
    SupportSlab slab = support_slab(K, L);
    // coarse scan for the family's peak
    double lo = slab.t_lo - 1.0, hi = slab.t_hi + 1.0;
    double best_t = lo, best = -1.0;
    for (int i = 0; i <= 256; ++i) {
        double t = lo + (hi - lo) * i / 256;
        double p = plen(t);
        if (p > best) {
            best = p;
            best_t = t;
        }
    }
    {
        double a = best_t - (hi - lo) / 256, b = best_t + (hi - lo) / 256;
        for (int it = 0; it < 60; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (plen(m1) < plen(m2)) a = m1;
            else b = m2;
        }
        best_t = 0.5 * (a + b);
        best = plen(best_t);
    }
    if (target > best + tol)
        throw std::invalid_argument("projection_of_length: target exceeds the family's maximum");
    if (target >= best) return perpendicular_at(L, point_at(L, best_t));
    double a = best_t, b = best_t + 0.5;
    while (plen(b) > target) b = best_t + 2.0 * (b - best_t);
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (a + b);
        if (plen(mid) > target) a = mid;
        else b = mid;
    }
    return perpendicular_at(L, point_at(L, 0.5 * (a + b)));
}

namespace {

// Signed angle of T against W in the oriented tangent plane at x, in [0, 2pi).
double signed_angle(HPoint x, const V3& W, const V3& T) {
    V3 J = normalize_space(mcross(x, W));
    double a = std::atan2(mink_inner(J, T), mink_inner(W, T));
    if (a < 0.0) a += kTwoPi;
    return a;
}

} // namespace

std::vector<AngleEntry> normal_angle_profile(const Body& K, const Geodesic& G, int m,
                                             int side) {
    if (!is_double_normal(K, G, 1e-6))
        throw std::invalid_argument("normal_angle_profile: geodesic is not a double normal");
    SectionResult S = section(K, G);
    HPoint M = point_at(G, S.chord.t_lo);
    HPoint N = point_at(G, S.chord.t_hi);

    auto member_dir_at = [&](HPoint x) {
        Geodesic mem = perpendicular_at(G, point_at(G, foot_coord(x, G)));
        return tangent_dir_at(mem, x);
    };

    int dense = std::max(4 * m, 512);
    auto B = boundary(K, dense);
    int n = static_cast<int>(B.size());
    int iM = 0, iN = 0;
    double dM = 1e300, dN = 1e300;
    for (int i = 0; i < n; ++i) {
        double a = dist(B[i].x, M), b = dist(B[i].x, N);
        if (a < dM) {
            dM = a;
            iM = i;
        }
        if (b < dN) {
            dN = b;
            iN = i;
        }
    }
    int step = side == 0 ? 1 : -1;
    std::vector<int> chain;
    for (int i = (iM + step + n) % n; i != iN; i = (i + step + n) % n) {
        if (dist(B[i].x, M) < 1e-9 || dist(B[i].x, N) < 1e-9) continue;
        chain.push_back(i);
    }
    int stride = std::max<size_t>(1, chain.size() / std::max(1, m));

    // boundary tangents follow the counterclockwise order; side 1 walks clockwise
    double flip = side == 0 ? 1.0 : -1.0;

    // chain-consistent sign for the member tangents, fixed at the M end
    BoundarySample sM = boundary_sample_at(K, anchor_angle(K, M));
    V3 TM = flip * tangent_dir_at(sM.tangent, sM.x);
    double sigma = mink_inner(TM, G.n) >= 0.0 ? 1.0 : -1.0;
    // at M the member direction is G.n itself

    auto alpha_of = [&](HPoint x, const V3& T) {
        double c = mink_inner(T, sigma * member_dir_at(x));
        return std::acos(std::clamp(c, -1.0, 1.0));
    };

    std::vector<AngleEntry> out;
    HPoint prev = M;
    double s_acc = 0.0;
    out.push_back({0.0, alpha_of(sM.x, TM), sM.corner, sM.piece});
    for (size_t idx = 0; idx < chain.size(); ++idx) {
        const auto& bs = B[chain[idx]];
        if (idx % stride != 0 && !bs.corner && idx + 1 != chain.size()) continue;
        V3 T = flip * tangent_dir_at(bs.tangent, bs.x);
        s_acc += dist(prev, bs.x);
        prev = bs.x;
        out.push_back({s_acc, alpha_of(bs.x, T), bs.corner, bs.piece});
    }

    s_acc += dist(prev, N);
    BoundarySample sN = boundary_sample_at(K, anchor_angle(K, N));
    V3 WN = sigma * member_dir_at(N);
    V3 TN = flip * tangent_dir_at(sN.tangent, sN.x);
    bool completed = false;
    if (!out.empty()) {
        // corner-cone completion: if the one-sided tangents straddle angle pi
        // around W, the cone contains the direction with alpha = pi exactly.
        std::vector<V3> tangents{TN};
        for (size_t i = 0; i < B.size(); ++i) {
            if (!B[i].corner || dist(B[i].x, N) > 1e-9) continue;
            tangents.push_back(flip * tangent_dir_at(B[i].tangent, B[i].x));
        }
        double lo = 1e300, hi = -1e300;
        for (const auto& T : tangents) {
            double a = signed_angle(N, WN, T);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        if (tangents.size() > 1 && lo <= kPi && kPi <= hi) {
            out.push_back({s_acc, kPi, true, sN.piece});
            completed = true;
        }
    }
    if (!completed) out.push_back({s_acc, alpha_of(sN.x, TN), sN.corner, sN.piece});
    return out;
}

NormalsReport normals_intersect_check(const Body& K, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    NormalsReport R;
    for (int i = 0; i < trials; ++i) {
        BoundarySample a = boundary_sample_at(K, U(rng));
        BoundarySample b = boundary_sample_at(K, U(rng));
        std::optional<HPoint> x;
        try {
            x = intersect(a.normal, b.normal);
        } catch (const std::domain_error& e) {
            if (std::string(e.what()).find("coincident") != std::string::npos)
                ++R.coincident; // same normal line twice: not a counterexample
            else
                ++R.violations; // asymptotic
            continue;
        }
        if (!x) {
            ++R.violations;
            continue;
        }
        double mrg = interior_margin(K, *x);
        R.min_margin = std::min(R.min_margin, mrg);
        // normals touching a common boundary corner meet exactly on the boundary
        if (mrg < -1e-9) ++R.violations;
    }
    return R;
}

HPoint random_interior_point(const Body& K, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double th = kTwoPi * U(rng);
    double f = 0.05 + 0.9 * U(rng);
    RayHit h = boundary_hit(K, th);
    HPoint a = interior_of(K);
    auto [e1, e2] = tangent_basis(a);
    Geodesic ray = geodesic_dir(a, std::cos(th) * e1 + std::sin(th) * e2);
    return point_at(ray, f * h.t);
}

Geodesic random_geodesic_meeting(const Body& K, std::mt19937_64& rng) {
    for (int it = 0; it < 100; ++it) {
        HPoint p = random_interior_point(K, rng);
        HPoint q = random_interior_point(K, rng);
        if (dist(p, q) < 1e-6) continue;
        return geodesic_through(p, q);
    }
    throw std::runtime_error("random_geodesic_meeting: degenerate body");
}

CoverReport normal_field_covers(const Body& K, int trials, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto B = boundary(K, m);
    CoverReport R;
    for (int i = 0; i < trials; ++i) {
        HPoint x = random_interior_point(K, rng);
        size_t ibest = 0;
        double dbest = 1e300;
        for (size_t j = 0; j < B.size(); ++j) {
            double d = dist(x, B[j].x);
            if (d < dbest) {
                dbest = d;
                ibest = j;
            }
        }
        auto angle_err = [&](const BoundarySample& s) {
            if (dist(x, s.x) < 1e-9) return 0.0;
            double ang = angle_at(geodesic_through(s.x, x), s.tangent, s.x);
            return std::fabs(ang - 0.5 * kPi);
        };
        R.worst_unrefined = std::max(R.worst_unrefined, angle_err(B[ibest]));

        double th0 = B[ibest].theta;
        double h = kTwoPi / m;
        double a = th0 - h, b = th0 + h;
        for (int it = 0; it < 60; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (dist(x, boundary_hit(K, m1).x) < dist(x, boundary_hit(K, m2).x)) b = m2;
            else a = m1;
        }
        BoundarySample ref = boundary_sample_at(K, 0.5 * (a + b));
        R.worst_refined = std::max(R.worst_refined, angle_err(ref));
    }
    return R;
}

IsoFrame random_iso(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double u = 0.6 * U(rng), v = 0.6 * U(rng);
    double phi = kPi * U(rng);
    IsoFrame F;
    F.q = from_disc(u, v);
    auto [f1, f2] = tangent_basis(F.q);
    F.f1 = std::cos(phi) * f1 + std::sin(phi) * f2;
    F.f2 = -std::sin(phi) * f1 + std::cos(phi) * f2;
    return F;
}

V3 apply_vec(const IsoFrame& F, const V3& v) {
    HPoint O = from_disc(0.0, 0.0);
    auto [e1, e2] = tangent_basis(O);
    double c0 = -mink_inner(v, O);
    double c1 = mink_inner(v, e1);
    double c2 = mink_inner(v, e2);
    return c0 * F.q + c1 * F.f1 + c2 * F.f2;
}

HPoint apply(const IsoFrame& F, HPoint p) { return normalize_point(apply_vec(F, p)); }

Geodesic apply(const IsoFrame& F, const Geodesic& g) {
    HPoint c = apply(F, g.c);
    return geodesic_dir(c, normalize_space(apply_vec(F, g.u)));
}

Body apply(const IsoFrame& F, const Body& K) {
    return std::visit([&](const auto& b) -> Body {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RadialBody>) {
            RadialBody r = b;
            r.center = apply(F, b.center);
            r.e1 = apply_vec(F, b.e1);
            r.e2 = apply_vec(F, b.e2);
            for (auto& g : r.grid) g = apply(F, g);
            return r;
        } else if constexpr (std::is_same_v<T, ArcBody>) {
            ArcBody a = b;
            a.interior = apply(F, b.interior);
            for (auto& d : a.discs) d.center = apply(F, d.center);
            for (auto& arc : a.arcs) {
                arc.e1 = apply_vec(F, arc.e1);
                arc.e2 = apply_vec(F, arc.e2);
            }
            return a;
        } else {
            HalfPlaneBody h = b;
            h.interior = apply(F, b.interior);
            for (auto& g : h.planes) g = apply(F, g);
            for (auto& v : h.verts) v = apply(F, v);
            return h;
        }
    }, K);
}

} // namespace hyptom
