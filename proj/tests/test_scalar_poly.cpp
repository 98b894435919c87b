#include <doctest.h>

#include "helpers.hpp"

using namespace testdata;

TEST_CASE("gaussian rationals stay exact") {
    Scalar a(ExactComplex(mpq_class(1, 2), mpq_class(3)));
    Scalar b = a * a.conj();
    CHECK(b.is_exact());
    CHECK(b.exact() == ExactComplex(mpq_class(37, 4)));
    CHECK((a / a).exact() == ExactComplex(1));
    CHECK(same(Scalar::i() * Scalar::i(), Scalar(-1)));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar s(ExactComplex::sqrt_rational(mpq_class(-5, 3)));
    CHECK(s.is_exact());
    CHECK((s * s).exact() == ExactComplex(mpq_class(-5, 3)));
    CHECK(s.exact().to_string() == "(0)+i*(1/3*sqrt(15))");
    // different extensions fall back to floating point
    Scalar t(ExactComplex::sqrt_rational(mpq_class(2)));
    Scalar u = s + t;
    CHECK_FALSE(u.is_exact());
    CHECK(std::abs(u.value() - cplx(std::sqrt(2.0), std::sqrt(15.0) / 3)) < 1e-14);
}

TEST_CASE("float contaminates") {
    Scalar x = Scalar(1) + Scalar(0.5);
    CHECK_FALSE(x.is_exact());
    CHECK(x.approx_equal(Scalar(1.5), 1e-15));
}

TEST_CASE("polynomial arithmetic and gcd") {
    Polynomial z = Polynomial::z();
    Polynomial a = (z - Polynomial(1)) * (z - Polynomial(2));
    Polynomial b = (z - Polynomial(1)) * (z + Polynomial(3));
    Polynomial g = gcd(a, b);
    CHECK(g.equals(z - Polynomial(1)));
    auto [q, r] = divmod(a, z - Polynomial(2));
    CHECK(r.is_zero());
    CHECK(q.equals(z - Polynomial(1)));
    CHECK(a.derivative().equals(Polynomial(2) * z - Polynomial(3)));
}

TEST_CASE("square-free decomposition") {
    Polynomial z = Polynomial::z();
    Polynomial p = (z - Polynomial(1)) * (z - Polynomial(1)) * (z - Polynomial(1)) * (z + Polynomial(2));
    auto sf = squarefree(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].second == 1);
    CHECK(sf[1].second == 3);
}

TEST_CASE("roots with multiplicity") {
    Polynomial z = Polynomial::z();
    Polynomial p = (z - Polynomial(1)) * (z - Polynomial(1)) * (z * z + Polynomial(1));
    Divisor d = poly_roots(p);
    CHECK(d.total() == 4);
    CHECK(d.at(P(1)) == 2);
    CHECK(d.at(SpherePoint(Scalar::i())) == 1);
    CHECK(d.at(SpherePoint(-Scalar::i())) == 1);
    CHECK(d.entries()[0].point.is_exact());
}

TEST_CASE("roots of unity are recognized or clustered") {
    Polynomial p = Polynomial::monomial(Scalar(1), 5) - Polynomial(1);
    Divisor d = poly_roots(p);
    CHECK(d.total() == 5);
    CHECK(d.entries().size() == 5);
}

TEST_CASE("rational function orders and values") {
    RationalFunction f = (Z() - C(1)) / (Z() * Z());
    CHECK(f.order_at(P(1)) == 1);
    CHECK(f.order_at(P(0)) == -2);
    CHECK(f.order_at(Inf()) == 1);
    CHECK(f.degree() == 2);
    CHECK(f(Inf()).matches(P(0), 1e-12));
    CHECK(f(P(0)).is_infinity());
    CHECK(same(f.eval(Scalar(2)), Scalar(mpq_class(1, 4))));
}

TEST_CASE("form transported to infinity") {
    MeromorphicForm w(RationalFunction(1));
    CHECK(w.order_at(Inf()) == -2);
    MeromorphicForm v(C(1) / (Z() * Z()));
    CHECK(v.order_at(Inf()) == 0);
    CHECK(divisor_of_form(v).total() == -2);
}

TEST_CASE("sphere points") {
    CHECK(chordal(Inf(), Inf()) == 0.0);
    CHECK(chordal(P(0), Inf()) == doctest::Approx(1.0));
    CHECK(Inf().to_string() == "inf");
    CHECK(P(0) < P(1));
}
