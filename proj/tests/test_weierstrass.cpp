#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("forms of the catenoid") {
    auto phis = forms(WData(catenoid()));
    REQUIRE(phis.size() == 3);
    CHECK(quadric(phis).is_zero());
    CHECK(phis[2].coeff.equals(C(1) / Z()));
}

TEST_CASE("forms of an R4 datum are null") {
    WData4 d{PuncturedSphere{{Inf()}, 0}, MeromorphicForm(C(1)), Z(), Z() * Z()};
    CHECK(quadric(forms(WData(d))).is_zero());
}

TEST_CASE("data recovered from forms") {
    WData3 c = catenoid();
    WData3 back = data3_from_forms(forms(WData(c)), c.domain);
    CHECK(back.g.equals(c.g));
    CHECK(back.h.coeff.equals(c.h.coeff));
}

TEST_CASE("metric factor") {
    CHECK(same(metric_factor(WData(catenoid()), P(1)), Scalar(1)));
    CHECK(same(metric_factor(WData(enneper()), P(0)), Scalar(mpq_class(1, 4))));
    CHECK(same(metric_factor_product(WData(catenoid()), P(1)), Scalar(1)));
    CHECK_THROWS_AS(metric_factor(WData(catenoid()), P(0)), AnalysisError);
}

TEST_CASE("regularity") {
    CHECK(regularity_check(WData(catenoid())).pass);
    CHECK(regularity_check(WData(enneper())).pass);
    WData3 bad{PuncturedSphere{{P(0), Inf()}, 0}, MeromorphicForm(C(1)), C(1) / (Z() - C(1))};
    auto r = regularity_check(WData(bad));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(regularity_from_forms(WData(bad)).pass);
}

TEST_CASE("ends and completeness") {
    auto e = end_orders(WData(catenoid()));
    CHECK(e.complete);
    CHECK(e.algebraic_ends);
    for (const auto& en : e.ends) CHECK(en.mu == 2);
    auto k = end_orders(*catalog_get("cubic-pole-r4").data);
    CHECK_FALSE(k.complete);
}

TEST_CASE("flat data") {
    WData3 f{PuncturedSphere{{Inf()}, 0}, MeromorphicForm(C(1)), C(2)};
    CHECK(is_flat(WData(f)));
    CHECK(classify(WData(f)).tag == SurfaceClass::flat);
}

TEST_CASE("rotation keeps regularity") {
    WData r = rotate_angle(WData(catenoid()), std::acos(-1.0) / 2);
    CHECK(is_exact(r));
    CHECK(regularity_check(r).pass);
}

TEST_CASE("genus must be zero") {
    WData3 c = catenoid();
    c.domain.genus = 1;
    CHECK_THROWS_AS(require_genus0(WData(c)), AnalysisError);
}
