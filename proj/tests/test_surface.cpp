#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("enneper coordinates") {
    // h = 1, g = z: x(1) - x(0) = (1/3, 0, 1/2)
    auto x = path_integral(WData(enneper()), {cplx(0, 0), cplx(1, 0)});
    REQUIRE(x.size() == 3);
    CHECK(x[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::abs(x[1]) < 1e-12);
    CHECK(x[2] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("catenoid height is log|z|") {
    auto x = path_integral(WData(catenoid()), {cplx(1, 0), cplx(0, 2), cplx(-3, 1)});
    CHECK(x[2] == doctest::Approx(std::log(std::abs(cplx(-3, 1)))).epsilon(1e-9));
    CHECK_THROWS_AS(path_integral(WData(catenoid()), {cplx(-1, 0), cplx(1, 0)}), AnalysisError);
}

TEST_CASE("curvature closed forms") {
    CHECK(curvature(WData(enneper()), cplx(0, 0)) == doctest::Approx(-16.0));
    CHECK(curvature(WData(catenoid()), cplx(1, 0)) == doctest::Approx(-1.0));
    cplx z(0.3, -0.7);
    CHECK(curvature_r3_formula(enneper(), z) == doctest::Approx(curvature(WData(enneper()), z)).epsilon(1e-12));
    CHECK(curvature_fd(WData(enneper()), z) == doctest::Approx(curvature(WData(enneper()), z)).epsilon(1e-5));
    auto mo = std::get<WData4>(*catalog_get("mo-osserman-3").data);
    cplx w(0.4, 0.6);
    CHECK(curvature_r4_formula(mo, w) == doctest::Approx(curvature(WData(mo), w)).epsilon(1e-12));
}

TEST_CASE("metric and isothermal coordinates") {
    cplx z(0.5, 0.25);
    double l2 = metric_numeric(WData(enneper()), z);
    CHECK(l2 == doctest::Approx(0.25 * std::pow(1 + std::norm(z), 2)).epsilon(1e-12));
    CHECK(isothermal_defect(WData(enneper()), z) < 1e-6);
    CHECK(isothermal_defect(WData(catenoid()), cplx(1.2, 0.3)) < 1e-6);
}

TEST_CASE("total curvature") {
    const double pi = std::numbers::pi;
    CHECK(total_curvature(WData(enneper())).value == doctest::Approx(-4 * pi).epsilon(1e-6));
    CHECK(total_curvature(WData(catenoid())).value == doctest::Approx(-4 * pi).epsilon(1e-6));
    CHECK(total_curvature(*catalog_get("jorge-meeks").data).value == doctest::Approx(-8 * pi).epsilon(1e-6));
}

TEST_CASE("catenoid mesh") {
    GridSpec gs;
    gs.radial = 16;
    gs.angular = 24;
    Mesh m = immerse(WData(catenoid()), std::nullopt, gs);
    CHECK_FALSE(m.slit);
    CHECK(m.vertices.size() == 16 * 24);
    double worst = 0;
    for (const auto& v : m.vertices) {
        worst = std::max(worst, std::abs(v.x[2] - std::log(std::abs(v.z)) + std::log(std::abs(m.base))));
        CHECK(v.K <= 0.0);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("voss mesh is slit") {
    GridSpec gs;
    gs.radial = 12;
    gs.angular = 16;
    Mesh m = immerse(*catalog_get("voss").data, std::nullopt, gs);
    CHECK(m.slit);
    CHECK(m.faces.size() < size_t(2 * 11 * 16));
}

TEST_CASE("export formats") {
    GridSpec gs;
    gs.radial = 6;
    gs.angular = 8;
    Mesh m = immerse(WData(enneper()), std::nullopt, gs);
    auto ply = export_mesh(m, "ply");
    auto pts = parse_ply_positions(ply.data);
    REQUIRE(pts.size() == m.vertices.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (int c = 0; c < 3; ++c) CHECK(pts[i][c] == m.vertices[i].x[c]);
    auto obj = export_mesh(m, "obj");
    CHECK(obj.data.rfind("# minsurf mesh", 0) == 0);
    auto js = parse_json_text(export_mesh(m, "json").data);
    CHECK(js["coords"].size() == m.vertices.size());
    CHECK(js["faces"].size() == m.faces.size());
    CHECK_THROWS_AS(export_mesh(m, "stl"), std::invalid_argument);
    Mesh empty;
    CHECK(export_mesh(empty, "obj").data.find("# minsurf mesh") == 0);
}

TEST_CASE("four-dimensional mesh writes a sidecar") {
    GridSpec gs;
    gs.radial = 6;
    gs.angular = 8;
    Mesh m = immerse(*catalog_get("mo-osserman-3").data, std::nullopt, gs);
    CHECK(m.dim == 4);
    auto obj = export_mesh(m, "obj");
    CHECK_FALSE(obj.sidecar.empty());
}
