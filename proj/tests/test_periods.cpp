#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("residues") {
    MeromorphicForm w(C(1) / Z());
    CHECK(same(residue(w, P(0)), Scalar(1)));
    CHECK(same(residue(w, Inf()), Scalar(-1)));
    CHECK(residue_sum(w).is_zero(1e-12));
    MeromorphicForm v(C(1) / ((Z() - C(1)) * (Z() - C(2))));
    CHECK(same(residue(v, P(1)), Scalar(-1)));
    CHECK(same(residue(v, P(2)), Scalar(1)));
    CHECK(std::abs(residue_quadrature(v, P(2)) - cplx(1, 0)) < 1e-9);
}

TEST_CASE("catenoid periods vanish") {
    auto rep = period_condition(WData(catenoid()));
    CHECK(rep.pass);
    CHECK(rep.exact);
    auto c = classify(WData(catenoid()));
    CHECK(c.tag == SurfaceClass::algebraic);
}

TEST_CASE("voss periods fail") {
    auto e = catalog_get("voss");
    auto rep = period_condition(*e.data);
    CHECK_FALSE(rep.pass);
    CHECK(classify(*e.data).tag == SurfaceClass::pseudo_algebraic);
}

TEST_CASE("miyaoka-sato periods pass in the sqrt(15) field") {
    auto e = catalog_get("miyaoka-sato");
    CHECK(is_exact(*e.data));
    CHECK(period_condition(*e.data).pass);
}
