#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("catalog listing") {
    auto all = catalog_list();
    CHECK(all.size() >= 12);
    for (const auto& s : all) {
        auto e = catalog_get(s.name);
        CHECK(e.name == s.name);
        if (s.flag.empty()) CHECK(e.data.has_value());
    }
    CHECK_THROWS_AS(catalog_get("no-such-surface"), std::invalid_argument);
}

TEST_CASE("catalog parameters") {
    auto jm = catalog_get("jorge-meeks", {{"r", "5"}});
    CHECK(domain_of(*jm.data).k() == 5);
    CHECK_THROWS_AS(catalog_get("jorge-meeks", {{"r", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("miyaoka-sato", {{"a", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("miyaoka-sato", {{"t", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("fujimoto", {{"n", "4"}}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("enneper", {{"bogus", "1"}}), std::invalid_argument);
}

TEST_CASE("miyaoka-sato normalized form agrees on invariants") {
    auto exact = std::get<WData3>(*catalog_get("miyaoka-sato").data);
    auto norm = miyaoka_sato_normalized(-1, 2);
    auto a = profile_r3(exact), b = profile_r3(norm);
    CHECK(a.D_g == b.D_g);
    CHECK(a.nu_g == b.nu_g);
    CHECK(a.l == b.l);
}

TEST_CASE("torus series") {
    auto rows = torus_series(4);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) CHECK(r.G == 1);
}

TEST_CASE("scalar json") {
    Scalar s(ExactComplex(mpq_class(1, 3), mpq_class(-2)));
    CHECK(same(scalar_from_json(scalar_to_json(s)), s));
    Scalar r = Scalar(ExactComplex::sqrt_rational(mpq_class(15)));
    CHECK(same(scalar_from_json(scalar_to_json(r)), r));
    Scalar f(cplx(0.25, -1.5));
    CHECK(same(scalar_from_json(scalar_to_json(f)), f));
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/0", "0"])")), SchemaError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["x", "0"])")), SchemaError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"([1])")), SchemaError);
}

TEST_CASE("data round trip through json for every catalog entry") {
    for (const auto& s : catalog_list()) {
        auto e = catalog_get(s.name);
        if (!e.data) continue;
        WData back = data_from_json(parse_json_text(data_to_json(*e.data).dump()));
        CHECK(kind_name(back) == kind_name(*e.data));
        auto fa = forms(*e.data), fb = forms(back);
        REQUIRE(fa.size() == fb.size());
        for (size_t i = 0; i < fa.size(); ++i) CHECK(fa[i].coeff.equals(fb[i].coeff, 1e-14));
        CHECK(domain_of(back).k() == domain_of(*e.data).k());
    }
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_json_text("{\"kind\": "), SchemaError);
    CHECK_THROWS_AS(data_from_json(Json::parse(R"({"kind":"r5"})")), SchemaError);
    CHECK_THROWS_AS(data_from_json(Json::parse(R"({"kind":"r3","punctures":["inf"],"h":[["1","0"]]})")),
                    SchemaError);
    CHECK(point_from_json(Json("inf")).is_infinity());
}

TEST_CASE("curve and hyperplane json") {
    ProjectiveCurve f({Polynomial(1), Polynomial::z(), Polynomial::monomial(Scalar(1), 4)});
    auto g = curve_from_json(curve_to_json(f));
    CHECK(g.degree() == 4);
    std::vector<Hyperplane> H{{{Scalar(1), Scalar(0)}, ""}, {{Scalar(1), Scalar(2)}, ""}};
    auto back = hyperplanes_from_json(hyperplanes_to_json(H));
    REQUIRE(back.size() == 2);
    CHECK(same(back[1].a[1], Scalar(2)));
}

TEST_CASE("analysis report") {
    auto rep = analyze(WData(catenoid()));
    CHECK(rep.pass());
    auto j = analysis_to_json(rep);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["classification"]["class"] == "algebraic");
    CHECK(analysis_markdown(rep, WData(catenoid())).find("| point | in M | ord g | ord hdz | ord ghdz |") !=
          std::string::npos);
    auto bad = data_from_json(parse_json_text(R"({"kind":"r3","punctures":[["0","0"],"inf"],"genus":0,
        "h":[["1","0"]],"g":{"num":[["1","0"]],"den":[["-1","0"],["1","0"]]}})"));
    auto b = analyze(bad);
    CHECK_FALSE(b.regularity.pass);
    CHECK_FALSE(b.pass());
}
