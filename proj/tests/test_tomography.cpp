#include "doctest.h"

#include <cmath>

#include "hyptom/constructions.hpp"
#include "hyptom/suites.hpp"
#include "hyptom/tomography.hpp"

using namespace hyptom;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kWidth = 1.7877441356071933;
} // namespace

TEST_CASE("reuleaux frozen appendix numbers") {
    Body R = fix_reuleaux();
    Geodesic axis = fix_axis();
    Geodesic gamma = fix_gamma();
    CHECK(projection(R, axis).length() == doctest::Approx(kWidth).epsilon(1e-9));
    SectionResult S = section(R, axis);
    REQUIRE(S.hit);
    CHECK(S.chord.length() == doctest::Approx(kWidth).epsilon(1e-9));
    CHECK(is_double_normal(R, axis));
    CHECK(projection(R, gamma).length() == doctest::Approx(1.7133762594645443).epsilon(1e-7));
    SectionResult G = section(R, gamma);
    REQUIRE(G.hit);
    CHECK(G.chord.length() == doctest::Approx(1.6746185434993972).epsilon(1e-7));
    CHECK_FALSE(is_double_normal(R, gamma));
}

TEST_CASE("projection contains section for random chords") {
    Body R = fix_reuleaux();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        Geodesic L = random_geodesic_meeting(R, rng);
        Interval P = projection(R, L);
        SectionResult S = section(R, L);
        REQUIRE(S.hit);
        CHECK(S.chord.t_lo >= P.t_lo - 1e-7);
        CHECK(S.chord.t_hi <= P.t_hi + 1e-7);
        CHECK(P.length() <= kWidth + 1e-6);
    }
}

TEST_CASE("disc measurements are constant on a central pencil") {
    HPoint O = fix_origin();
    Body D = disc_body(O, 0.5);
    MeasurementTable T = pencil_profile(D, Pencil{O, 48});
    REQUIRE(T.rows.size() == 48);
    for (const MeasurementRow& r : T.rows) {
        CHECK(r.projection == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(r.section.has_value());
        CHECK(*r.section == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(r.width.has_value());
        CHECK(*r.width == doctest::Approx(1.0).epsilon(1e-7));
        CHECK(r.double_normal);
    }
    CHECK(equichordal_defect(D, O, 32) < 1e-9);
}

TEST_CASE("diameter equals maximal width on the reuleaux triangle") {
    Body R = fix_reuleaux();
    double d = diameter(R, 512);
    CHECK(d == doctest::Approx(kWidth).epsilon(1e-6));
    WidthProfile W = width_profile(R, 90);
    CHECK(W.max_w <= d + 1e-6);
    CHECK(W.min_w == doctest::Approx(kWidth).epsilon(1e-4));
}

TEST_CASE("small projections exist down to tiny delta") {
    Body R = fix_reuleaux();
    for (double delta : {0.5, 0.1, 0.02}) {
        Geodesic L = small_projection(R, delta);
        double p = projection(R, L).length();
        CHECK(p < delta);
        CHECK(p > 0.0);
        CHECK_FALSE(section(R, L).hit);
    }
}

TEST_CASE("projection_of_length finds intermediate lines") {
    Body R = fix_reuleaux();
    Geodesic axis = fix_axis();
    for (double target : {0.3, 0.9, 1.4, 1.7}) {
        Geodesic L = projection_of_length(R, axis, target, 1e-8);
        CHECK(projection(R, L).length() == doctest::Approx(target).epsilon(1e-6));
    }
    CHECK_THROWS(projection_of_length(R, axis, 10.0));
}

TEST_CASE("measurements are isometry invariant") {
    Body R = fix_reuleaux();
    Geodesic axis = fix_axis();
    std::mt19937_64 rng(11);
    IsoFrame F = random_iso(rng);
    Body R2 = hyptom::apply(F, R);
    Geodesic axis2 = apply(F, axis);
    CHECK(projection(R2, axis2).length() ==
          doctest::Approx(projection(R, axis).length()).epsilon(1e-9));
    SectionResult s1 = section(R, axis), s2 = section(R2, axis2);
    REQUIRE(s1.hit);
    REQUIRE(s2.hit);
    CHECK(s1.chord.length() == doctest::Approx(s2.chord.length()).epsilon(1e-9));
    CHECK(diameter(R, 256) == doctest::Approx(diameter(R2, 256)).epsilon(1e-7));
}

TEST_CASE("normal angle profile spans 0 to pi along the reuleaux boundary") {
    Body R = fix_reuleaux();
    Geodesic axis = fix_axis();
    for (int side : {0, 1}) {
        auto prof = normal_angle_profile(R, axis, 160, side);
        REQUIRE(prof.size() > 10);
        CHECK(prof.front().alpha < 1e-3);
        CHECK(prof.back().alpha > kPi - 1e-3);
        int crossings = 0;
        bool below = prof.front().alpha < kPi / 2 - 1e-6;
        for (const auto& e : prof) {
            if (below && e.alpha > kPi / 2 + 1e-6) {
                ++crossings;
                below = false;
            } else if (!below && e.alpha < kPi / 2 - 1e-6) {
                below = true;
            }
        }
        CHECK(crossings == 1);
    }
}

TEST_CASE("normals of a constant width body meet inside") {
    Body R = fix_reuleaux();
    NormalsReport rep = normals_intersect_check(R, 150, 3);
    CHECK(rep.violations == 0);
    CHECK(rep.min_margin > -1e-9);
}
