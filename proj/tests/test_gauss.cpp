#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("degree and preimages") {
    RationalFunction g = (Z() * Z() - C(1)) / (Z() - C(2));
    CHECK(degree(g) == 2);
    CHECK(preimages(g, Inf()).total() == 2);
    CHECK(preimages(g, Inf()).at(P(2)) == 1);
    CHECK(preimages(g, Inf()).at(Inf()) == 1);
    CHECK(preimages(Z() * Z() * Z(), P(0)).at(P(0)) == 3);
    CHECK_THROWS_AS(degree(C(3)), AnalysisError);
}

TEST_CASE("branch divisor of z^n and z + 1/z") {
    Divisor b = branch_divisor(Z() * Z() * Z());
    CHECK(b.total() == 4);
    CHECK(b.at(P(0)) == 2);
    CHECK(b.at(Inf()) == 2);
    Divisor c = branch_divisor(Z() + C(1) / Z());
    CHECK(c.total() == 2);
    CHECK(c.at(P(1)) == 1);
    CHECK(c.at(P(-1)) == 1);
}

TEST_CASE("exceptional values") {
    PuncturedSphere dom{{P(0), Inf()}, 0};
    auto ex = exceptional_values(Z(), dom);
    REQUIRE(ex.size() == 2);
    PuncturedSphere one{{Inf()}, 0};
    CHECK(exceptional_values(Z(), one).size() == 1);
    // z^2 on C minus {1}: the value 1 is still taken at -1
    PuncturedSphere two{{P(1), Inf()}, 0};
    CHECK(exceptional_values(Z() * Z(), two).size() == 1);
}

TEST_CASE("profile of the catenoid") {
    auto p = profile_r3(catenoid());
    CHECK(p.d == 1);
    CHECK(p.k == 2);
    CHECK(p.D_g == 2);
    CHECK(p.n_g == 0);
    CHECK(p.nu_g == 2);
}

TEST_CASE("jorge-meeks profile") {
    auto e = catalog_get("jorge-meeks");
    auto p = profile_r3(std::get<WData3>(*e.data));
    CHECK(p.d == 2);
    CHECK(p.k == 3);
    CHECK(p.D_g == 0);
    CHECK(p.n_g == 2);
    CHECK(p.l == 2);
    CHECK(p.nu_g == 1);
}

TEST_CASE("totally ramified values raise nu") {
    // z^2 on C minus {0}: 0 and inf exceptional; every other value simple
    PuncturedSphere dom{{P(0), Inf()}, 0};
    auto p = ramification_profile(Z() * Z(), dom);
    CHECK(p.D_g == 2);
    CHECK(p.l == 0);
    CHECK(p.nu_g == 2);
    // z^2 on C minus {1, -1}: 1 and inf exceptional, 0 totally ramified
    PuncturedSphere dom2{{P(1), P(-1), Inf()}, 0};
    auto q = ramification_profile(Z() * Z(), dom2);
    CHECK(q.D_g == 2);
    CHECK(q.l0 >= 1);
    CHECK(q.nu_g == mpq_class(5, 2));
}

TEST_CASE("profile_r4 flags constant components") {
    auto e = catalog_get("mo-osserman-2");
    auto p = profile_r4(std::get<WData4>(*e.data));
    CHECK(p.g2_constant);
    CHECK_FALSE(p.g1_constant);
    REQUIRE(p.p1.has_value());
    CHECK_FALSE(p.p2.has_value());
}
