#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

namespace {
Polynomial zp(int k) { return Polynomial::monomial(Scalar(1), k); }
}  // namespace

TEST_CASE("reduction removes common factors") {
    ProjectiveCurve f({zp(1), zp(2), zp(3)});
    CHECK(f.degree() == 2);
    CHECK(f.components()[0].degree() == 0);
}

TEST_CASE("rank and span") {
    CHECK(matrix_rank({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
    ProjectiveCurve f({zp(0), zp(1), zp(1) + zp(0)});
    CHECK(span_dimension(f) == 1);
    ProjectiveCurve rnc({zp(0), zp(1), zp(2), zp(3)});
    CHECK(span_dimension(rnc) == 3);
}

TEST_CASE("order sequence of (1 : z : z^4)") {
    ProjectiveCurve f({zp(0), zp(1), zp(4)});
    auto o = order_sequence(f, P(0));
    CHECK(o.delta == std::vector<int>{0, 1, 4});
    CHECK(o.stat_idx == std::vector<int>{0, 2});
    auto oi = order_sequence(f, Inf());
    CHECK(oi.delta == std::vector<int>{0, 3, 4});
    auto st = stationary_totals(f);
    CHECK(st.plucker_ok);
    CHECK(st.plucker_lhs == st.plucker_rhs);
    CHECK(st.plucker_rhs == 3 * 4 - 2 * 3);
    CHECK(st.plucker_rhs_literal != st.plucker_rhs);
}

TEST_CASE("wronskian") {
    Polynomial w = wronskian({zp(0), zp(1), zp(2)});
    CHECK(w.equals(Polynomial(2)));
}

TEST_CASE("general position") {
    std::vector<Hyperplane> H;
    for (auto v : std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})
        H.push_back({{Scalar(v[0]), Scalar(v[1]), Scalar(v[2])}, ""});
    CHECK(general_position(H, 2));
    H.push_back({{Scalar(1), Scalar(1), Scalar(0)}, ""});
    CHECK_FALSE(general_position(H, 2));
}

TEST_CASE("hyperplane ramification") {
    ProjectiveCurve f({zp(0), zp(1), zp(2)});
    Hyperplane H{{Scalar(0), Scalar(0), Scalar(1)}, "z2"};
    auto hr = hyperplane_ramification(f, H, PuncturedSphere{{Inf()}, 0});
    CHECK_FALSE(hr.omitted);
    CHECK(hr.nu == 2);
    auto hi = hyperplane_ramification(f, H, PuncturedSphere{{P(0), Inf()}, 0});
    CHECK(hi.omitted);
    Hyperplane L{{Scalar(1), Scalar(-1), Scalar(0)}, ""};
    ProjectiveCurve line({zp(1), zp(1), zp(0)});
    CHECK_THROWS_AS(hyperplane_ramification(line, L, PuncturedSphere{}), std::domain_error);
}

TEST_CASE("smt check on the twisted cubic") {
    ProjectiveCurve f({zp(0), zp(1), zp(2), zp(3)});
    std::vector<Hyperplane> H;
    for (int i = 0; i < 4; ++i) {
        Hyperplane h;
        for (int j = 0; j < 4; ++j) h.a.push_back(Scalar(i == j ? 1 : 0));
        H.push_back(h);
    }
    H.push_back({{Scalar(1), Scalar(1), Scalar(1), Scalar(1)}, ""});
    auto r = smt3_check(f, H, {P(0), Inf()});
    CHECK(r.get("smt.subspace").pass);
    CHECK_FALSE(r.get("smt.subspace.literal").applicable);
}

TEST_CASE("fujimoto construction") {
    for (int n : {3, 5}) {
        auto F = fujimoto_construction(n);
        CHECK(F.null_certified);
        CHECK(F.general_position);
        CHECK(int(F.hyperplanes.size()) == n * (n + 1) / 2);
        auto r = verify_rn(F.data, F.hyperplanes);
        CHECK(r.pass());
    }
    CHECK_THROWS(fujimoto_construction(4));
}
