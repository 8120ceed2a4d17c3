#include "hyptom/suites.hpp"

#include <algorithm>
#include <cmath>

namespace hyptom {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kAppendixWidth = 1.78774413;
constexpr double kAppendixSection = 1.67461854;
constexpr double kAppendixProjection = 1.7133762;

struct Checker {
    std::vector<CheckResult> checks;
    void add(const std::string& name, bool pass, double value, double tol,
             std::string detail = "") {
        checks.push_back({name, pass, value, tol, std::move(detail)});
    }
    // value must stay below tol
    void below(const std::string& name, double value, double tol, std::string detail = "") {
        add(name, value < tol, value, tol, std::move(detail));
    }
    // value must exceed tol
    void above(const std::string& name, double value, double tol, std::string detail = "") {
        add(name, value > tol, value, tol, std::move(detail));
    }
};

// deviation of the chord from the boundary's normal cone at one endpoint.
// W is the outward chord direction; the incoming/outgoing one-sided boundary
// tangents are probed just before and after the endpoint, so corners resolve
// to their cone: admissible iff angle(W, t_in) >= pi/2 >= angle(W, t_out).
double endpoint_angle_defect(const Body& K, const Geodesic& G, double t_end, double out_sign) {
    HPoint x = point_at(G, t_end);
    V3 W = out_sign * tangent_at(G, t_end);
    double th = anchor_angle(K, x);
    const double eps = 1e-7;
    auto wrap = [](double a) {
        a = std::fmod(a, 2.0 * kPi);
        return a < 0.0 ? a + 2.0 * kPi : a;
    };
    BoundarySample sm = boundary_sample_at(K, wrap(th - eps));
    BoundarySample sp = boundary_sample_at(K, wrap(th + eps));
    auto ang = [&](const BoundarySample& s) {
        return std::acos(std::clamp(mink_inner(W, s.tangent.u), -1.0, 1.0));
    };
    // outward W lies in the corner's normal cone iff the ccw one-sided
    // tangents satisfy angle(W, t_in) <= pi/2 <= angle(W, t_out)
    double a_in = ang(sm), a_out = ang(sp);
    return std::max(std::max(0.0, a_in - 0.5 * kPi), std::max(0.0, 0.5 * kPi - a_out));
}

// largest deviation of both endpoint angles from pi/2 on the chord of G
double chord_angle_defect(const Body& K, const Geodesic& G, const SectionResult& S) {
    double a1 = endpoint_angle_defect(K, G, S.chord.t_lo, -1.0);
    double a2 = endpoint_angle_defect(K, G, S.chord.t_hi, 1.0);
    return std::max(a1, a2);
}

double interval_gap(const Interval& P, const Interval& S) {
    return std::max(std::fabs(P.t_lo - S.t_lo), std::fabs(P.t_hi - S.t_hi));
}

std::vector<FourierTerm> fterm(int k, double cos_amp, double sin_amp = 0.0) {
    return {FourierTerm{k, cos_amp, sin_amp}};
}

Body fix_perturbed(double c, double eps, int k, bool sine = false) {
    return perturbed_radial(c, eps, sine ? fterm(k, 0.0, 1.0) : fterm(k, 1.0), fix_origin());
}

Body thin_rectangle() {
    HPoint O = fix_origin();
    auto [e1, e2] = tangent_basis(O);
    Geodesic lx = geodesic_dir(O, e1);
    Geodesic ly = geodesic_dir(O, e2);
    std::vector<Geodesic> planes;
    for (double t : {-1.2, 1.2}) {
        Geodesic P = perpendicular_at(lx, point_at(lx, t));
        if (mink_inner(O, P.n) > 0.0) P = reversed(P);
        planes.push_back(P);
    }
    for (double t : {-0.15, 0.15}) {
        Geodesic P = perpendicular_at(ly, point_at(ly, t));
        if (mink_inner(O, P.n) > 0.0) P = reversed(P);
        planes.push_back(P);
    }
    return make_halfplane_body(planes);
}

std::vector<Geodesic> reuleaux_double_normals(int n) {
    // every normal through an arc point passes through the opposite vertex
    // (the arc's center), and the chord lands inside that vertex's normal cone
    std::vector<Geodesic> out;
    Body R = fix_reuleaux();
    const ArcBody& A = std::get<ArcBody>(R);
    for (int i = 0; i < n; ++i) {
        const Disc& d = A.discs[i % 3];
        const auto& arc = A.arcs[i % 3];
        double f = 0.15 + 0.7 * (double(i / 3) + 0.5) / (double(n / 3) + 1.0);
        double phi = arc.phi_lo + f * arc.phi_len;
        HPoint y = normalize_point(std::cosh(d.radius) * d.center +
                                   std::sinh(d.radius) * (std::cos(phi) * arc.e1 +
                                                          std::sin(phi) * arc.e2));
        out.push_back(geodesic_through(d.center, y));
    }
    return out;
}

void suite_appendix(Checker& C, std::uint64_t) {
    Body T = fix_reuleaux();
    WidthProfile W = width_profile(T, 360);
    double worst = 0.0;
    for (const auto& [th, w] : W.samples) worst = std::max(worst, std::fabs(w - kAppendixWidth));
    C.below("width_value", worst, 1e-5, "widths at non-corner samples vs 1.78774413");
    C.below("width_spread", W.max_w - W.min_w, 1e-5);
    SectionResult S = section(T, fix_gamma());
    C.add("section_hits", S.hit, S.hit ? 1.0 : 0.0, 1.0);
    C.below("section_value", std::fabs(S.chord.length() - kAppendixSection), 1e-5);
    C.below("projection_value",
            std::fabs(projection(T, fix_gamma()).length() - kAppendixProjection), 1e-4);
    C.add("axis_double_normal", is_double_normal(T, fix_axis()), 1.0, 1.0);
    C.add("gamma_not_double_normal", !is_double_normal(T, fix_gamma()), 1.0, 1.0,
          "projection exceeds section on the perpendicular at the center");
    // normals of each arc pass through the opposite vertex
    const auto& A = std::get<ArcBody>(T);
    double worst_v = 0.0;
    for (int i = 0; i < 24; ++i) {
        BoundarySample s = boundary_sample_at(T, 2.0 * kPi * i / 24);
        worst_v = std::max(worst_v, std::fabs(signed_dist(A.discs[s.piece].center, s.normal)));
    }
    C.below("normals_hit_opposite_vertex", worst_v, 1e-9);
}

void suite_lemma35(Checker& C, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 0x35);
    struct Fixture {
        const char* name;
        Body K;
        std::vector<Geodesic> normals;
    };
    HPoint O = fix_origin();
    std::vector<Fixture> fixtures;
    {
        Body D = disc_body(O, 0.9);
        std::vector<Geodesic> dn;
        Pencil P{O, 8};
        for (int k = 0; k < 8; ++k) dn.push_back(pencil_line(P, k));
        fixtures.push_back({"disc", D, dn});
    }
    fixtures.push_back({"reuleaux", fix_reuleaux(), reuleaux_double_normals(8)});
    {
        Body K = fix_perturbed(0.8, 0.05, 2);
        auto [e1, e2] = tangent_basis(O);
        std::vector<Geodesic> dn;
        for (double th : {0.0, kPi / 2}) // drho = 0 there and at th + pi
            dn.push_back(geodesic_dir(O, std::cos(th) * e1 + std::sin(th) * e2));
        fixtures.push_back({"perturbed_cos2", K, dn});
    }

    for (auto& F : fixtures) {
        double worst_gap = 0.0, worst_ang = 0.0;
        for (const auto& G : F.normals) {
            SectionResult S = section(F.K, G);
            if (!S.hit) {
                worst_gap = 1e9;
                continue;
            }
            worst_gap = std::max(worst_gap, interval_gap(projection(F.K, G), S.chord));
            worst_ang = std::max(worst_ang, chord_angle_defect(F.K, G, S));
        }
        C.below(std::string(F.name) + "_binormal_interval_gap", worst_gap, 1e-6,
                "constructed double normals: projection and section intervals coincide");
        C.below(std::string(F.name) + "_binormal_angle_defect", worst_ang, 1e-5,
                "both endpoint angles at pi/2");
    }

    // near a double normal of a smooth body the interval gap is second order
    // in the chord offset while the angle defect is first order, so the two
    // thresholds must be coupled: a gap below 1e-11 forces defects below 1e-5,
    // and defects below 1e-5 force gaps below 1e-6
    int mismatches = 0;
    for (auto& F : fixtures) {
        for (int i = 0; i < 150; ++i) {
            Geodesic G = random_geodesic_meeting(F.K, rng);
            SectionResult S = section(F.K, G);
            if (!S.hit) continue;
            double gap = interval_gap(projection(F.K, G), S.chord);
            double defect = chord_angle_defect(F.K, G, S);
            if (gap < 1e-11 && defect >= 1e-5) ++mismatches;
            if (defect < 1e-5 && gap >= 1e-6) ++mismatches;
        }
    }
    C.below("random_biconditional_mismatches", mismatches, 0.5,
            "coincidence (gap < 1e-11) forces perpendicularity (1e-5) and back "
            "(gap < 1e-6), 450 random chords");

    // measurement scalars are isometry invariant
    Body T = fix_reuleaux();
    IsoFrame F = random_iso(rng);
    Body Tm = hyptom::apply(F, T);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        Geodesic G = random_geodesic_meeting(T, rng);
        Geodesic Gm = apply(F, G);
        worst = std::max(worst, std::fabs(projection(T, G).length() -
                                          projection(Tm, Gm).length()));
        SectionResult S = section(T, G), Sm = section(Tm, Gm);
        if (S.hit != Sm.hit) worst = 1e9;
        else if (S.hit)
            worst = std::max(worst, std::fabs(S.chord.length() - Sm.chord.length()));
    }
    C.below("isometry_invariance", worst, 1e-9);
}

void suite_lemma37(Checker& C, std::uint64_t) {
    HPoint O = fix_origin();
    struct Entry {
        const char* name;
        Body K;
    };
    std::vector<Entry> bodies;
    bodies.push_back({"disc", disc_body(O, 0.9)});
    bodies.push_back({"reuleaux", fix_reuleaux()});
    bodies.push_back({"perturbed_cos2_small", fix_perturbed(0.8, 0.01, 2)});
    bodies.push_back({"perturbed_cos2", fix_perturbed(0.8, 0.05, 2)});
    bodies.push_back({"perturbed_sin3", fix_perturbed(0.8, 0.05, 3, true)});
    for (auto& e : bodies) {
        WidthProfile W = width_profile(e.K, 512);
        double d = diameter(e.K, 1024);
        C.below(std::string(e.name) + "_diameter_vs_max_width", std::fabs(d - W.max_w), 1e-6);
    }
    // monotone under inclusion
    double d_small = diameter(disc_body(O, 0.5), 512);
    double d_large = diameter(disc_body(O, 0.9), 512);
    C.add("diameter_monotone", d_small <= d_large, d_large - d_small, 0.0);
    Body small = disc_body(O, 0.5), large = fix_reuleaux();
    double worst = -1e9;
    Pencil P{from_disc(0.2, 0.1), 16};
    for (int k = 0; k < P.m; ++k) {
        Geodesic L = pencil_line(P, k);
        worst = std::max(worst, projection(small, L).length() - projection(large, L).length());
    }
    C.below("projection_monotone_under_inclusion", worst, 1e-12,
            "disc(0.5) inside the constant-width body");
}

void suite_lemma38(Checker& C, std::uint64_t seed) {
    HPoint O = fix_origin();
    struct Entry {
        const char* name;
        Body K;
    };
    std::vector<Entry> bodies;
    bodies.push_back({"disc", disc_body(O, 0.9)});
    bodies.push_back({"perturbed_cos2", fix_perturbed(0.8, 0.05, 2)});
    bodies.push_back({"perturbed_sin3", fix_perturbed(0.7, 0.04, 3, true)});
    for (auto& e : bodies) {
        CoverReport R = normal_field_covers(e.K, 200, 1024, seed + 0x38);
        C.below(std::string(e.name) + "_refined_perpendicularity", R.worst_refined, 1e-6,
                "nearest boundary point realizes a normal through the interior point");
    }
    Body K = fix_perturbed(0.8, 0.05, 2);
    double w256 = normal_field_covers(K, 100, 256, seed + 1).worst_unrefined;
    double w1024 = normal_field_covers(K, 100, 1024, seed + 1).worst_unrefined;
    double w4096 = normal_field_covers(K, 100, 4096, seed + 1).worst_unrefined;
    C.add("unrefined_error_decreases_with_m", w256 > w1024 && w1024 > w4096, w4096, w256,
          "violation magnitude shrinks as the sampling grows");
}

void suite_lemma39(Checker& C, std::uint64_t seed) {
    NormalsReport R = normals_intersect_check(fix_reuleaux(), 1000, seed + 0x39);
    C.below("reuleaux_violations", R.violations, 0.5, "all normal pairs meet inside");
    C.above("reuleaux_min_margin", R.min_margin, -1e-9);
    NormalsReport D = normals_intersect_check(disc_body(fix_origin(), 0.9), 500, seed + 0x39);
    C.below("disc_violations", D.violations, 0.5, "all normals meet at the center");
    NormalsReport T = normals_intersect_check(thin_rectangle(), 1000, seed + 0x39);
    C.above("thin_rectangle_control_violations", T.violations, 0.5,
            "constant width is necessary: a thin rectangle has ultraparallel normals");
}

void check_angle_profile(Checker& C, const std::string& tag,
                         const std::vector<AngleEntry>& prof) {
    double descent = 0.0;
    for (size_t i = 1; i < prof.size(); ++i) {
        if (prof[i].piece == prof[i - 1].piece && !prof[i - 1].corner && !prof[i].corner)
            descent = std::max(descent, prof[i - 1].alpha - prof[i].alpha);
    }
    C.below(tag + "_max_descent_within_arc", descent, 1e-9, "alpha increases along each arc");
    C.below(tag + "_starts_near_zero", prof.front().alpha, 1e-3);
    C.above(tag + "_ends_near_pi", prof.back().alpha, kPi - 1e-3);
    int crossings = 0;
    bool below_band = prof.front().alpha < 0.5 * kPi - 1e-6;
    for (const auto& e : prof) {
        if (below_band && e.alpha > 0.5 * kPi + 1e-6) {
            ++crossings;
            below_band = false;
        } else if (!below_band && e.alpha < 0.5 * kPi - 1e-6) {
            below_band = true;
        }
    }
    C.add(tag + "_single_half_pi_crossing", crossings == 1, crossings, 1.0);
}

void suite_lemma310(Checker& C, std::uint64_t) {
    Body T = fix_reuleaux();
    for (int side : {0, 1})
        check_angle_profile(C, "reuleaux_side" + std::to_string(side),
                            normal_angle_profile(T, fix_axis(), 400, side));
    Body D = disc_body(fix_origin(), 0.9);
    auto prof = normal_angle_profile(D, fix_axis(), 200, 0);
    double descent = 0.0;
    for (size_t i = 1; i < prof.size(); ++i)
        descent = std::max(descent, prof[i - 1].alpha - prof[i].alpha);
    C.below("disc_strictly_increasing", descent, 1e-9);
    C.below("disc_starts_near_zero", prof.front().alpha, 1e-3);
    C.above("disc_ends_near_pi", prof.back().alpha, kPi - 1e-3);
}

void suite_prop43(Checker& C, std::uint64_t seed) {
    Body T = fix_reuleaux();
    WidthProfile W = width_profile(T, 256);
    double w = 0.5 * (W.min_w + W.max_w);
    std::mt19937_64 rng(seed + 0x43);
    double worst_excess = -1e9;
    int near_no_dn = 0, dn_not_near = 0, near = 0;
    for (int i = 0; i < 1000; ++i) {
        Geodesic G = random_geodesic_meeting(T, rng);
        double p = projection(T, G).length();
        worst_excess = std::max(worst_excess, p - w);
        bool near_eq = std::fabs(p - w) < 1e-4;
        bool dn = is_double_normal(T, G, 1e-4);
        if (near_eq) ++near;
        if (near_eq && !dn) ++near_no_dn;
        if (dn && !near_eq) ++dn_not_near;
    }
    C.below("projection_at_most_width", worst_excess, 1e-6,
            "|P_M(K)| <= w over 1000 random lines");
    double worst_dn_gap = 0.0;
    for (const auto& G : reuleaux_double_normals(12))
        worst_dn_gap = std::max(worst_dn_gap,
                                std::fabs(projection(T, G).length() - w));
    C.below("double_normals_attain_width", worst_dn_gap, 1e-4);
    C.below("equality_implies_double_normal", near_no_dn, 0.5,
            std::to_string(near) + " near-equality lines; near-equality at 1e-4 leaves "
            "endpoint gaps that is_double_normal(1e-4) rejects — the forward coupling "
            "of the two tolerances fails at this scale");
    C.below("double_normal_implies_equality", dn_not_near, 0.5);
}

void suite_remark44(Checker& C, std::uint64_t) {
    Body D = disc_body(fix_origin(), 1.0);
    double worst = -1e9;
    for (double delta : {0.5, 0.1, 0.01})
        worst = std::max(worst, projection(D, small_projection(D, delta)).length() - delta);
    C.below("disc_small_projection", worst, 0.0,
            "returned lines have projection below each requested bound");
    Body T = fix_reuleaux();
    double diam = diameter(T, 512);
    double worst_match = 0.0;
    for (int i = 1; i <= 6; ++i) {
        double target = 0.05 + (diam - 0.05) * i / 6.0;
        Geodesic M = projection_of_length(T, fix_axis(), target, 1e-6);
        worst_match = std::max(worst_match,
                               std::fabs(projection(T, M).length() - target));
    }
    C.below("spectrum_targets_matched", worst_match, 1e-3,
            "projection lengths span (0, diam]: every target is attained");
}

void suite_thm41(Checker& C, std::uint64_t) {
    HPoint O = fix_origin();
    Body T = fix_reuleaux();
    WidthProfile W = width_profile(T, 256);
    MeasurementTable M = pencil_profile(T, Pencil{O, 64}, false);
    double pmin = 1e300, pmax = -1e300;
    for (const auto& r : M.rows) {
        pmin = std::min(pmin, r.projection);
        pmax = std::max(pmax, r.projection);
    }
    C.below("reuleaux_constant_width", W.max_w - W.min_w, 1e-5);
    C.above("reuleaux_nonconstant_projections", pmax - pmin, 1e-2,
            "constant width does not force constant projections");

    // base radius 1.2: cos(4 theta) at the top epsilon needs the extra
    // curvature headroom to stay convex
    double min_nondisc_spread = 1e300;
    for (int i = 0; i < 12; ++i) {
        double lam = i / 11.0;
        double eps = 0.01 + 0.09 * (i % 4) / 3.0;
        std::vector<FourierTerm> f{{2, lam, 0.0}, {4, 1.0 - lam, 0.0}};
        Body K = perturbed_radial(1.2, eps, f, O);
        WidthProfile WK = width_profile(K, 96);
        min_nondisc_spread = std::min(min_nondisc_spread, WK.max_w - WK.min_w);
    }
    C.above("nondisc_width_spread_positive", min_nondisc_spread, 1e-6,
            "symmetric non-disc bodies never have constant width");
    Body D = disc_body(O, 1.2);
    WidthProfile WD = width_profile(D, 96);
    C.below("disc_control_constant", WD.max_w - WD.min_w, 1e-9);
}

void suite_example33(Checker& C, std::uint64_t) {
    HPoint O = fix_origin();
    auto [e1, e2] = tangent_basis(O);
    auto deg = [](double d) { return d * kPi / 180.0; };
    std::vector<Geodesic> planes;
    auto tangent_plane = [&](double ang, double r) {
        Geodesic L = geodesic_dir(O, std::cos(ang) * e1 + std::sin(ang) * e2);
        Geodesic P = perpendicular_at(L, point_at(L, r));
        if (mink_inner(O, P.n) > 0.0) P = reversed(P);
        return P;
    };
    // ring: centrally symmetric across the cap region (60/240, 120/300),
    // asymmetric far from it (the pushed 0-degree plane) so the pair cannot
    // be congruent via the point reflection itself
    planes.push_back(tangent_plane(0.0, 0.74));
    for (double a : {30.0, 60.0, 120.0, 150.0, 180.0, 210.0, 240.0, 270.0, 300.0, 330.0})
        planes.push_back(tangent_plane(deg(a), 0.8));
    planes.push_back(tangent_plane(deg(80.0), 0.72)); // asymmetric cap plane
    planes.push_back(tangent_plane(deg(100.0), 0.8));
    HalfPlaneBody base = make_halfplane_body(planes);

    // the cap boundary has to pass through vertices of the polygon, so the
    // cap chain starts and ends exactly where ring edges take over
    auto vang = [&](HPoint x) {
        double a = std::atan2(mink_inner(x, e2), mink_inner(x, e1));
        return a < 0.0 ? a + 2.0 * kPi : a;
    };
    auto vert_near = [&](double lo_deg, double hi_deg) {
        for (const HPoint& v : base.verts) {
            double a = vang(v) * 180.0 / kPi;
            if (a > lo_deg && a < hi_deg) return v;
        }
        throw std::runtime_error("fixture vertex not found");
    };
    Geodesic G1 = geodesic_through(O, vert_near(50.0, 65.0));   // vertex of edges 60/80
    Geodesic G2 = geodesic_through(O, vert_near(105.0, 115.0)); // vertex of edges 100/120
    GardnerReport R;
    auto [P1, P2] = gardner_pair(O, base, G1, G2, &R);
    C.below("equal_projection_rows", R.max_row_diff, 1e-6,
            "projections on the pencil through the base point agree row-wise");
    C.add("rows_outside_cap_bitwise_equal", R.outside_rows_equal,
          R.outside_rows_equal ? 1.0 : 0.0, 1.0);
    C.above("non_congruent", R.congruence_mismatch, 1e-3,
            "no isometry in the search grid matches the bodies");
    // degenerate cap: symmetric base => the pair coincides
    std::vector<Geodesic> sym;
    for (double a : {0.0, 30.0, 60.0, 90.0, 120.0, 150.0, 180.0,
                     210.0, 240.0, 270.0, 300.0, 330.0})
        sym.push_back(tangent_plane(deg(a), 0.8));
    HalfPlaneBody symbase = make_halfplane_body(sym);
    auto symvert = [&](double lo_deg, double hi_deg) {
        for (const HPoint& v : symbase.verts) {
            double a = vang(v) * 180.0 / kPi;
            if (a > lo_deg && a < hi_deg) return v;
        }
        throw std::runtime_error("fixture vertex not found");
    };
    Geodesic S1 = geodesic_through(O, symvert(40.0, 50.0));
    Geodesic S2 = geodesic_through(O, symvert(100.0, 110.0));
    GardnerReport RS;
    auto [Q1, Q2] = gardner_pair(O, symbase, S1, S2, &RS);
    C.below("degenerate_cap_identical", RS.congruence_mismatch, 1e-9);
    (void)P1;
    (void)Q1;
    (void)Q2;
}

void suite_example34(Checker& C, std::uint64_t) {
    HPoint O = fix_origin();
    auto f = [](double th) { return std::sin(th); };
    Body K = slab_body(0.7, 0.03, f, 180);
    Pencil P{O, 180};
    double pmin = 1e300, pmax = -1e300;
    for (int k = 0; k < P.m; ++k) {
        double p = projection(K, pencil_line(P, k)).length();
        pmin = std::min(pmin, p);
        pmax = std::max(pmax, p);
    }
    C.below("slab_projection_constant", pmax - pmin, 1e-4,
            "projections on the central pencil all equal 2*r0");
    double worst_end = 0.0;
    for (int k = 0; k < P.m; k += 15) {
        double th = kPi * k / P.m;
        Interval I = projection(K, pencil_line(P, k));
        worst_end = std::max(worst_end, std::fabs(I.t_lo - (-0.7 + 0.03 * f(th))));
        worst_end = std::max(worst_end, std::fabs(I.t_hi - (0.7 + 0.03 * f(th))));
    }
    C.below("slab_projection_endpoints", worst_end, 1e-6,
            "each slab realizes its own translated interval");
    double asym = 0.0;
    for (int k = 0; k < 90; ++k) {
        double th = 2.0 * kPi * k / 90;
        asym = std::max(asym, std::fabs(radial_profile(K, O, th) -
                                        radial_profile(K, O, th + kPi)));
    }
    C.above("slab_point_asymmetry", asym, 1e-2, "the body is not centrally symmetric");

    Body Keq = fix_perturbed(0.8, 0.05, 3, true);
    C.below("equichordal_defect_odd_f", equichordal_defect(Keq, O, 90), 1e-9,
            "odd perturbations keep all central chords equal");
    double wspread = 0.0;
    {
        WidthProfile W = width_profile(Keq, 128);
        wspread = W.max_w - W.min_w;
    }
    C.above("equichordal_width_nonconstant", wspread, 1e-3);
    C.above("reuleaux_equichordal_defect", equichordal_defect(fix_reuleaux(), O, 90), 0.05,
            "constant width does not give an equichordal point");
    Body D = disc_body(O, 0.7);
    C.below("disc_equichordal", equichordal_defect(D, O, 45), 1e-9);
}

void suite_sec42(Checker& C, std::uint64_t) {
    // algebraic round trip: R = e, r = 1, t = 0.5
    {
        double R = std::exp(1.0), r = 1.0, t = 0.5;
        double ell = std::log(R / r);
        double ellp = 0.5 * std::log((R * R - t * t) / (r * r - t * t));
        double a = std::exp(ell), b = std::exp(2.0 * ellp);
        double r2 = t * t * (b - 1.0) / (b - a * a);
        double err = std::max(std::fabs(std::sqrt(r2) - r), std::fabs(a * std::sqrt(r2) - R));
        C.below("algebraic_round_trip", err, 1e-10);
    }
    HPoint O = fix_origin();
    Pencil P{O, 180};
    Body K = fix_perturbed(0.8, 0.05, 2);
    Body K2 = reconstruct_from_projections(measure_projections(K, P));
    double worst = 0.0;
    for (int i = 0; i < 180; ++i) {
        double th = 2.0 * kPi * i / 180;
        worst = std::max(worst, std::fabs(radial_profile(K, O, th) -
                                          radial_profile(K2, O, th)));
    }
    C.below("measure_reconstruct_radial_discrepancy", worst, 1e-3);

    Body H = slab_body(0.6, 0.02, [](double th) { return std::sin(th); }, 90);
    Body H2 = reconstruct_from_projections(measure_projections(H, Pencil{O, 90}));
    double worst_h = 0.0;
    for (int i = 0; i < 180; ++i) {
        double th = 2.0 * kPi * i / 180;
        worst_h = std::max(worst_h, std::fabs(radial_profile(H, O, th) -
                                              radial_profile(H2, O, th)));
    }
    C.below("halfplane_exact_round_trip", worst_h, 1e-6,
            "support data of a polygon rebuild it up to slab regularization");

    // circumscribed-polygon corners shrink like the pencil spacing squared,
    // so recovering the disc to 1e-6 needs a fine pencil
    Body D = disc_body(O, 0.75);
    Body D2 = reconstruct_from_projections(measure_projections(D, Pencil{O, 2048}));
    double worst_d = 0.0;
    for (int i = 0; i < 720; ++i)
        worst_d = std::max(worst_d, std::fabs(radial_profile(D2, O, 2.0 * kPi * i / 720) - 0.75));
    C.below("disc_data_give_disc", worst_d, 1e-6,
            "identical ell on every line reconstructs the disc itself");
    WidthProfile WD = width_profile(D2, 64);
    C.below("disc_reconstruction_constant_width", WD.max_w - WD.min_w, 1e-6);
    double dmin = 1e300, dmax = -1e300;
    for (int k = 0; k < 180; ++k) {
        double p = projection(D2, pencil_line(Pencil{O, 180}, k)).length();
        dmin = std::min(dmin, p);
        dmax = std::max(dmax, p);
    }
    C.below("disc_reconstruction_constant_projection", dmax - dmin, 1e-6);
}

using SuiteFn = void (*)(Checker&, std::uint64_t);

struct SuiteDef {
    const char* name;
    const char* anchor;
    const char* statement;
    SuiteFn fn;
};

const SuiteDef kSuites[] = {
    {"appendix", "Appendix",
     "Reuleaux triangle: width 1.78774413, section 1.67461854, projection 1.7133762",
     suite_appendix},
    {"lemma3.5", "Lemma 3.5",
     "a chord is a double normal iff its projection and section intervals coincide",
     suite_lemma35},
    {"lemma3.7", "Lemma 3.7", "the diameter equals the maximal width", suite_lemma37},
    {"lemma3.8", "Lemma 3.8", "the normal field covers the interior", suite_lemma38},
    {"lemma3.9", "Lemma 3.9",
     "normals of a constant-width body intersect at interior points", suite_lemma39},
    {"lemma3.10", "Lemma 3.10",
     "the angle between the perpendicular family and the boundary grows from 0 to pi",
     suite_lemma310},
    {"prop4.3", "Proposition 4.3",
     "projections never exceed the width; equality marks double normals", suite_prop43},
    {"remark4.4", "Remark 4.4", "arbitrarily small projections exist", suite_remark44},
    {"thm4.1", "Theorem 4.1",
     "constant width with constant projections forces a disc (falsification grid)",
     suite_thm41},
    {"example3.3", "Example 3.3",
     "non-congruent polygons with equal projections on a pencil", suite_example33},
    {"example3.4", "Example 3.4",
     "slab bodies: constant projections without symmetry; odd radial perturbations keep "
     "central chords constant",
     suite_example34},
    {"sec4.2", "Section 4.2",
     "a body is recovered from orthogonal and offset projection lengths", suite_sec42},
};

} // namespace

HPoint fix_origin() { return from_disc(0.0, 0.0); }

Geodesic fix_axis() {
    auto [e1, e2] = tangent_basis(fix_origin());
    return geodesic_dir(fix_origin(), e1);
}

Geodesic fix_gamma() { return perpendicular_at(fix_axis(), fix_origin()); }

Body fix_reuleaux() { return reuleaux({fix_origin(), 1.0}); }

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.push_back(s.name);
    out.push_back("all");
    return out;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& s : kSuites) {
        if (name != s.name) continue;
        Checker C;
        s.fn(C, seed);
        return {s.name, s.anchor, s.statement, std::move(C.checks)};
    }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteReport> out;
    for (const auto& s : kSuites) out.push_back(run_suite(s.name, seed));
    return out;
}

json to_json(const SuiteReport& R) {
    json checks = json::array();
    for (const auto& c : R.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"value", c.value},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
    }
    return json{{"suite", R.suite},
                {"anchor", R.anchor},
                {"statement", R.statement},
                {"pass", R.pass()},
                {"checks", checks}};
}

} // namespace hyptom
