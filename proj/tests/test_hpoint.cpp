#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyptom/hpoint.hpp"

using namespace hyptom;

TEST_CASE("minkowski inner product") {
    HPoint a = from_disc(0.0, 0.0);
    HPoint b = from_uhp(0.0, std::exp(1.0));
    CHECK(mink_inner(a, a) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(mink_inner(a, b) == doctest::Approx(-std::cosh(1.0)).epsilon(1e-12));
    CHECK(dist(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disc radius 0.5 lies at distance ln 3") {
    HPoint a = from_disc(0.0, 0.0);
    HPoint b = from_disc(0.5, 0.0);
    CHECK(dist(a, b) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("model round trips") {
    HPoint p = from_uhp(0.3, 1.7);
    for (Model m : {Model::disc, Model::uhp, Model::klein}) {
        ModelPoint mp = to_model(p, m);
        HPoint q = from_model(mp);
        CHECK(dist(p, q) < 1e-12);
    }
    HPoint o = from_uhp(0.0, 1.0);
    CHECK(std::fabs(o.x0 - 1.0) < 1e-12);
    CHECK(std::fabs(o.x1) < 1e-12);
    CHECK(std::fabs(o.x2) < 1e-12);
    HPoint w = from_uhp(1.0, 1.0);
    CHECK(w.x0 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(w.x1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.x2 == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("uhp vertical axis passes through the origin's e1 direction") {
    HPoint o = from_uhp(0.0, 1.0);
    auto [e1, e2] = tangent_basis(o);
    HPoint up = from_uhp(0.0, std::exp(0.5));
    HPoint expect = normalize_point(std::cosh(0.5) * o + std::sinh(0.5) * e1);
    CHECK(dist(up, expect) < 1e-12);
    (void)e2;
}

TEST_CASE("tangent basis is right handed and orthonormal") {
    HPoint p = from_disc(0.2, -0.4);
    auto [e1, e2] = tangent_basis(p);
    CHECK(std::fabs(mink_inner(e1, e1) - 1.0) < 1e-12);
    CHECK(std::fabs(mink_inner(e2, e2) - 1.0) < 1e-12);
    CHECK(std::fabs(mink_inner(e1, e2)) < 1e-12);
    CHECK(std::fabs(mink_inner(p, e1)) < 1e-12);
    V3 e2c = mcross(p, e1);
    CHECK(std::fabs(e2c.x0 - e2.x0) < 1e-12);
    CHECK(std::fabs(e2c.x1 - e2.x1) < 1e-12);
    CHECK(std::fabs(e2c.x2 - e2.x2) < 1e-12);
}

TEST_CASE("rotate_about preserves distance and is periodic") {
    HPoint c = from_disc(0.1, 0.2);
    HPoint x = from_disc(-0.3, 0.25);
    HPoint y = rotate_about(c, 2.0 * 3.14159265358979323846 / 3.0, x);
    CHECK(dist(c, x) == doctest::Approx(dist(c, y)).epsilon(1e-12));
    HPoint z = rotate_about(c, 2.0 * 3.14159265358979323846, x);
    CHECK(dist(x, z) < 1e-9);
}
