#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "hyptom/io.hpp"
#include "hyptom/suites.hpp"
#include "hyptom/svg.hpp"

using namespace hyptom;

TEST_CASE("model point json carries model and coordinates") {
    ModelPoint mp{Model::uhp, 0.25, 1.5};
    json j = to_json(mp);
    CHECK(j["model"] == "uhp");
    CHECK(j["u"] == doctest::Approx(0.25));
    CHECK(j["v"] == doctest::Approx(1.5));
    ModelPoint back = modelpoint_from_json(j);
    CHECK(dist(from_model(mp), from_model(back)) < 1e-7); // acosh floor: sqrt(2 ulp)
}

TEST_CASE("geodesic json round trip") {
    Geodesic g = geodesic_through(from_uhp(0.3, 1.2), from_disc(-0.2, 0.1));
    json j = to_json(g);
    CHECK(j["kind"] == "geodesic");
    Geodesic back = geodesic_from_json(j);
    CHECK(std::fabs(std::fabs(mink_inner(g.n, back.n)) - 1.0) < 1e-9);
    CHECK(std::fabs(signed_dist(point_at(g, 0.4), back)) < 1e-9);
}

TEST_CASE("body json round trips for all three kinds") {
    HPoint O = fix_origin();
    Body bodies[] = {
        perturbed_radial(0.8, 0.05, {{2, 1.0, 0.0}, {3, 0.0, 0.3}}, O),
        fix_reuleaux(),
        slab_body(0.6, 0.02, [](double th) { return std::sin(th); }, 24),
    };
    const char* kinds[] = {"radial", "arcs", "halfplanes"};
    for (int i = 0; i < 3; ++i) {
        json j = to_json(bodies[i]);
        CHECK(j["kind"] == kinds[i]);
        Body back = body_from_json(j);
        for (int k = 0; k < 48; ++k) {
            double th = 2.0 * 3.14159265358979323846 * k / 48;
            CHECK(radial_profile(bodies[i], O, th) ==
                  doctest::Approx(radial_profile(back, O, th)).epsilon(1e-9));
        }
    }
    CHECK_THROWS(body_from_json(json{{"kind", "mystery"}}));
}

TEST_CASE("measurement table csv round trip") {
    Body R = fix_reuleaux();
    MeasurementTable T = pencil_profile(R, Pencil{fix_origin(), 24});
    std::string csv = to_csv(T);
    CHECK(csv.rfind("theta,projection,section,width,double_normal", 0) == 0);
    MeasurementTable back = table_from_csv(csv);
    REQUIRE(back.rows.size() == T.rows.size());
    for (std::size_t i = 0; i < T.rows.size(); ++i) {
        CHECK(back.rows[i].theta == doctest::Approx(T.rows[i].theta).epsilon(1e-10));
        CHECK(back.rows[i].projection ==
              doctest::Approx(T.rows[i].projection).epsilon(1e-10));
        CHECK(back.rows[i].section.has_value() == T.rows[i].section.has_value());
        CHECK(back.rows[i].double_normal == T.rows[i].double_normal);
    }
    CHECK_THROWS(table_from_csv("theta,projection\n0,1\n"));
}

TEST_CASE("projection data csv round trip rebuilds pencil lines") {
    HPoint O = fix_origin();
    Body K = disc_body(O, 0.6);
    Pencil P{O, 36};
    auto data = measure_projections(K, P);
    std::string csv = to_csv(data);
    CHECK(csv.rfind("theta,ell,ell_prime,t", 0) == 0);
    auto back = data_from_csv(csv, P);
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(back[i].ell == doctest::Approx(data[i].ell).epsilon(1e-10));
        CHECK(back[i].ell_prime == doctest::Approx(data[i].ell_prime).epsilon(1e-10));
        CHECK(back[i].t == doctest::Approx(data[i].t).epsilon(1e-10));
        CHECK(std::fabs(std::fabs(mink_inner(data[i].L.n, back[i].L.n)) - 1.0) < 1e-9);
    }
}

TEST_CASE("svg output is deterministic and self contained") {
    Body R = fix_reuleaux();
    std::vector<RenderLine> lines;
    RenderLine rl;
    rl.g = fix_axis();
    rl.proj = projection(R, rl.g);
    SectionResult S = section(R, rl.g);
    if (S.hit) rl.sec = S.chord;
    lines.push_back(rl);
    std::string a = render_svg(R, lines);
    std::string b = render_svg(R, lines);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("href") == std::string::npos); // no external references
    std::string empty_lines = render_svg(R, {});
    CHECK(empty_lines.find("<svg") != std::string::npos);
    CHECK(empty_lines != a);
}

TEST_CASE("atomic writes land complete files") {
    std::string path = "io_test_tmp.txt";
    write_file_atomic(path, "alpha\nbeta\n");
    CHECK(read_file(path) == "alpha\nbeta\n");
    write_file_atomic(path, "gamma\n");
    CHECK(read_file(path) == "gamma\n");
    std::remove(path.c_str());
}
