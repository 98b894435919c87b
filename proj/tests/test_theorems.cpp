#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("ratio R") {
    CHECK(ratio_r3(2, 0, 3).to_string() == "4");
    CHECK(ratio_r3(1, 0, 2).to_string() == "inf");
    CHECK(ratio_r3(1, 0, 1).non_hyperbolic());
    CHECK(ratio_r4(1, 0, 3).to_string() == "1");
    CHECK(ratio_r3(2, 0, 3).inverse() == mpq_class(1, 4));
}

TEST_CASE("enneper: non-hyperbolic, raw forms with equality") {
    auto r = verify_r3(enneper());
    CHECK(r.non_hyperbolic);
    CHECK(r.pass());
    CHECK(r.fact("R") == "non-hyperbolic");
    CHECK_FALSE(r.get("r3.exceptional.R").applicable);
    CHECK(r.get("r3.exceptional.raw").equality);
    CHECK(r.get("r3.ramified.raw").equality);
}

TEST_CASE("catenoid") {
    auto r = verify_r3(catenoid());
    CHECK(r.pass());
    CHECK(r.fact("D_g") == "2");
    CHECK(r.fact("R") == "inf");
    CHECK(r.fact("class") == "algebraic");
    CHECK(r.get("r3.genus0-algebraic").equality);
}

TEST_CASE("miyaoka-sato attains both R-form bounds") {
    auto e = catalog_get("miyaoka-sato");
    auto r = verify_r3(std::get<WData3>(*e.data));
    CHECK(r.pass());
    CHECK(r.fact("D_g") == "2");
    CHECK(r.fact("nu_g") == "5/2");
    CHECK(r.fact("l") == "1");
    CHECK(r.fact("R") == "4");
    CHECK(r.get("r3.exceptional.R").equality);
    CHECK(r.get("r3.ramified.R").equality);
}

TEST_CASE("r4 cases") {
    auto a = verify_r4(std::get<WData4>(*catalog_get("mo-osserman-3").data));
    CHECK(a.fact("case") == "i");
    CHECK(a.pass());
    CHECK(a.get("r4.ratio-sum-lower").pass);
    auto b = verify_r4(std::get<WData4>(*catalog_get("mo-osserman-2").data));
    CHECK(b.fact("case") == "ii");
    CHECK(b.fact("g2") == "constant");
    CHECK(b.fact("R_g1") == "1");
    CHECK(b.pass());
}

TEST_CASE("cubic pole datum is not complete") {
    auto r = verify_r4(std::get<WData4>(*catalog_get("cubic-pole-r4").data));
    CHECK(r.fact("class") == "not complete");
    CHECK_FALSE(r.get("r4.omission").applicable);
}

TEST_CASE("shared values") {
    PuncturedSphere dom{{P(0), P(2), Pq(1, 2), Inf()}, 0};
    auto sv = shared_values(Z(), C(1) / Z(), dom);
    CHECK(sv.q == 6);
    CHECK(sv.d == 1);
    CHECK(shared_values(Z(), Z(), dom).identical);
}

TEST_CASE("unicity pairs") {
    auto e = catalog_get("unicity-r3");
    auto r = verify_unicity_r3(std::get<WData3>(*e.data), std::get<WData3>(*e.partner));
    CHECK(r.fact("q_g") == "6");
    CHECK(r.fact("R") == "1");
    CHECK(r.pass());
    CHECK(r.get("unicity-r3.g.R").equality);

    auto lit = catalog_get("unicity-r4");
    auto s = verify_unicity_r4(std::get<WData4>(*lit.data), std::get<WData4>(*lit.partner));
    CHECK(s.fact("q_g1") == "4");
    auto cor = catalog_get("unicity-r4-corrected");
    auto t = verify_unicity_r4(std::get<WData4>(*cor.data), std::get<WData4>(*cor.partner));
    CHECK(t.fact("q_g1") == "6");
    CHECK(t.fact("R_g1") == "1/2");
    CHECK(t.pass());
}

TEST_CASE("pullback along z^m") {
    auto d = WData(catenoid());
    auto p = std::get<WData3>(pullback_covering(d, 3));
    CHECK(p.g.degree() == 3);
    CHECK(p.domain.k() == 2);
    PuncturedSphere bad{{P(1), Inf()}, 0};
    WData3 e{bad, MeromorphicForm(C(1)), Z()};
    CHECK_THROWS_AS(pullback_covering(WData(e), 2), AnalysisError);
}
