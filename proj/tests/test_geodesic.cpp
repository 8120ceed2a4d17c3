#include "doctest.h"

#include <cmath>

#include "hyptom/geodesic.hpp"

using namespace hyptom;

namespace {
Geodesic uhp_axis() {
    return geodesic_through(from_uhp(0.0, 1.0), from_uhp(0.0, std::exp(1.0)));
}
} // namespace

TEST_CASE("points on a geodesic satisfy the unit-speed parametrization") {
    Geodesic g = uhp_axis();
    HPoint a = point_at(g, 0.7);
    CHECK(dist(from_uhp(0.0, std::exp(0.7)), a) < 1e-12);
    CHECK(std::fabs(coord(g, a) - 0.7) < 1e-12);
    CHECK(std::fabs(mink_inner(a, g.n)) < 1e-12);
}

TEST_CASE("foot of uhp(1,1) on the vertical axis is uhp(0,sqrt 2)") {
    Geodesic g = uhp_axis();
    HPoint p = from_uhp(1.0, 1.0);
    HPoint f = foot(p, g);
    CHECK(dist(f, from_uhp(0.0, std::sqrt(2.0))) < 1e-12);
    CHECK(std::fabs(foot_coord(p, g) - 0.5 * std::log(2.0)) < 1e-12);
    // the foot minimizes distance along the axis
    double d0 = dist(p, f);
    for (double dt : {-1e-3, 1e-3}) {
        CHECK(dist(p, point_at(g, foot_coord(p, g) + dt)) > d0);
    }
}

TEST_CASE("signed distance from uhp(0,e) to the unit semicircle is 1") {
    Geodesic semi = geodesic_through(from_uhp(std::tanh(0.5), 1.0 / std::cosh(0.5)),
                                     from_uhp(-std::tanh(0.5), 1.0 / std::cosh(0.5)));
    double sd = signed_dist(from_uhp(0.0, std::exp(1.0)), semi);
    CHECK(std::fabs(std::fabs(sd) - 1.0) < 1e-12);
}

TEST_CASE("perpendicular_at is an involution on the base line") {
    Geodesic g = uhp_axis();
    HPoint x = point_at(g, 0.3);
    Geodesic h = perpendicular_at(g, x);
    CHECK(std::fabs(angle_at(g, h, x) - 1.5707963267948966) < 1e-12);
    Geodesic g2 = perpendicular_at(h, x);
    CHECK(std::fabs(std::fabs(mink_inner(g.n, g2.n)) - 1.0) < 1e-9);
}

TEST_CASE("intersect distinguishes crossing, asymptotic, coincident") {
    Geodesic g = uhp_axis();
    Geodesic h = perpendicular_at(g, point_at(g, 0.2));
    auto x = intersect(g, h);
    REQUIRE(x.has_value());
    CHECK(dist(*x, point_at(g, 0.2)) < 1e-12);
    CHECK_THROWS(intersect(g, g));
    // two vertical uhp lines share an ideal endpoint
    Geodesic v2 = geodesic_through(from_uhp(1.0, 1.0), from_uhp(1.0, 2.0));
    CHECK_THROWS(intersect(g, v2));
    // disjoint with a common perpendicular
    Geodesic far = geodesic_through(from_uhp(5.0, 1.0), from_uhp(7.0, 1.0));
    CHECK_FALSE(intersect(g, far).has_value());
    Geodesic cp = common_perpendicular(g, far);
    CHECK(std::fabs(angle_at(g, cp, *intersect(g, cp)) - 1.5707963267948966) < 1e-9);
    CHECK(std::fabs(angle_at(far, cp, *intersect(far, cp)) - 1.5707963267948966) < 1e-9);
}

TEST_CASE("reflection across a geodesic is an isometric involution") {
    Geodesic g = geodesic_through(from_disc(0.1, 0.0), from_disc(0.3, 0.2));
    HPoint p = from_disc(-0.2, 0.4);
    HPoint q = reflect(g, p);
    CHECK(std::fabs(signed_dist(p, g) + signed_dist(q, g)) < 1e-12);
    CHECK(dist(reflect(g, q), p) < 1e-7); // acosh floor: sqrt(2 ulp)
    HPoint r = from_disc(0.5, -0.1);
    CHECK(dist(p, r) == doctest::Approx(dist(q, reflect(g, r))).epsilon(1e-12));
}

TEST_CASE("foot_coord matches the slab ends of a reversed line") {
    Geodesic g = uhp_axis();
    HPoint p = from_disc(0.2, 0.3);
    Geodesic r = reversed(g);
    CHECK(std::fabs(foot_coord(p, g) + foot_coord(p, r)) < 1e-12);
}
