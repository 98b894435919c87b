#include <doctest.h>

#include "properties.hpp"

// Smaller runs of the acceptance properties, with different seeds.

TEST_CASE("divisor degrees") {
    auto o = props::divisor_degrees(60, 11);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("riemann-hurwitz") {
    auto o = props::riemann_hurwitz(60, 12);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("moebius invariance") {
    auto o = props::moebius_invariance(20, 13);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("covering invariance") {
    auto o = props::covering_invariance(10, 14);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("plucker") {
    auto o = props::plucker(30, 15);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("residue theorem") {
    auto o = props::residue_theorem(40, 16);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("curvature") {
    auto o = props::curvature_checks(40, 17);
    INFO(o.summary());
    CHECK(o.ok());
}

TEST_CASE("smt triples") {
    auto o = props::smt_triples(20, 18);
    INFO(o.corrected.summary());
    CHECK(o.corrected.ok());
}
