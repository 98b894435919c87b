#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minsurf/scalar.hpp"
#include "minsurf/tolerances.hpp"

namespace minsurf {

/// Univariate polynomial, ascending coefficients, trailing zeros stripped.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> c);
    Polynomial(const Scalar& c) : Polynomial(std::vector<Scalar>{c}) {}
    Polynomial(long c) : Polynomial(Scalar(c)) {}

    static Polynomial z() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    static Polynomial monomial(const Scalar& c, int k);
    /// prod (z - r_i)
    static Polynomial from_roots(const std::vector<Scalar>& roots);

    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_exact() const;
    Scalar coeff(int k) const;
    Scalar lead() const;

    Scalar operator()(const Scalar& z) const;
    cplx eval(cplx z) const;
    Polynomial derivative() const;
    Polynomial to_float() const;
    Polynomial monic() const;
    /// Drop FLOAT coefficients below rel * max|c| at the top end.
    Polynomial trimmed(double rel) const;
    /// Coefficients of p(z0 + t).
    Polynomial shift(const Scalar& z0) const;
    /// z^n p(1/z) with n >= degree.
    Polynomial reversed(int n) const;
    Polynomial compose(const Polynomial& q) const;
    double norm_inf() const;
    std::vector<cplx> numeric() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& s) const;
    /// Quotient and remainder; FLOAT division trims the remainder by eps_zero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Exact-equality check in EXACT mode, coefficient-wise tolerance in FLOAT.
    bool equals(const Polynomial& o, double tol = 0.0) const;

    std::string to_string() const;

private:
    std::vector<Scalar> c_;
    void strip();
};

/// Monic gcd over the coefficient field (EXACT only; FLOAT input throws).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Square-free decomposition p = c * prod a_i^i (EXACT). Returns pairs (a_i, i), a_i monic nonconstant.
std::vector<std::pair<Polynomial, int>> squarefree(const Polynomial& p);

/// A point of the Riemann sphere: infinity or a finite value.
class SpherePoint {
public:
    SpherePoint() : inf_(false), approx_(0.0) {}
    SpherePoint(const Scalar& s);
    static SpherePoint infinity();

    bool is_infinity() const { return inf_; }
    bool is_exact() const { return inf_ || exact_.has_value(); }
    /// Finite value as Scalar (exact if available). Throws at infinity.
    Scalar value() const;
    cplx approx() const { return approx_; }
    /// Chordal distance on the unit sphere, in [0, 1].
    friend double chordal(const SpherePoint& a, const SpherePoint& b);
    /// Exact comparison when both are exact; chordal tolerance otherwise.
    bool matches(const SpherePoint& o, double eps) const;
    std::string to_string() const;
    /// Deterministic total order used for report sorting.
    friend bool operator<(const SpherePoint& a, const SpherePoint& b);

private:
    bool inf_;
    std::optional<ExactComplex> exact_;
    cplx approx_;
};

/// Finite formal sum of points with nonzero integer multiplicities.
class Divisor {
public:
    struct Entry {
        SpherePoint point;
        int mult;
    };
    void add(const SpherePoint& p, int m, double eps = tolerances().eps_match);
    void add(const Divisor& d, int sign = 1);
    const std::vector<Entry>& entries() const { return e_; }
    int total() const;
    int at(const SpherePoint& p, double eps = tolerances().eps_match) const;
    bool empty() const { return e_.empty(); }
    void sort();
    std::string to_string() const;

private:
    std::vector<Entry> e_;
};

/// All roots of a nonzero polynomial with multiplicities.
Divisor poly_roots(const Polynomial& p, const Tolerances& tol = tolerances());

/// Vanishing order of p at a finite point.
int poly_order_at(const Polynomial& p, const SpherePoint& z, const Tolerances& tol = tolerances());
/// All exact coefficients and z share one quadratic extension.
bool field_compatible(const Polynomial& p, const Scalar& z);

/// num/den on the Riemann sphere, reduced, den monic (EXACT) or leading 1 (FLOAT).
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(const Polynomial& num, const Polynomial& den = Polynomial(1));
    RationalFunction(const Scalar& c) : RationalFunction(Polynomial(c)) {}
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}

    static RationalFunction z() { return RationalFunction(Polynomial::z()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_exact() const { return num_.is_exact() && den_.is_exact(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Degree as a map of the sphere.
    int degree() const;

    /// Value at a sphere point (infinity allowed, both as input and output).
    SpherePoint operator()(const SpherePoint& p) const;
    /// Finite value; throws at poles.
    Scalar eval(const Scalar& z) const;
    /// FLOAT value, NaN-free only off poles.
    cplx eval(cplx z) const;
    RationalFunction derivative() const;
    RationalFunction compose(const RationalFunction& q) const;
    RationalFunction to_float() const;
    /// f(1/zeta) as a rational function of zeta.
    RationalFunction at_inverse() const;
    /// Vanishing order (negative for poles) at a point of the sphere.
    int order_at(const SpherePoint& p, const Tolerances& tol = tolerances()) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    bool equals(const RationalFunction& o, double tol = 0.0) const;
    std::string to_string() const;

private:
    Polynomial num_, den_;
    void reduce();
};

/// (a f + b)/(c f + d); throws on ad - bc = 0.
RationalFunction moebius_postcompose(const RationalFunction& f, const Scalar& a, const Scalar& b, const Scalar& c,
                                     const Scalar& d);

/// coeff(z) dz in the standard chart.
struct MeromorphicForm {
    RationalFunction coeff;

    MeromorphicForm() = default;
    MeromorphicForm(RationalFunction c) : coeff(std::move(c)) {}

    bool is_zero() const { return coeff.is_zero(); }
    /// Coefficient in the chart zeta = 1/z: -coeff(1/zeta)/zeta^2.
    RationalFunction chart_at_infinity() const;
    int order_at(const SpherePoint& p, const Tolerances& tol = tolerances()) const;
    MeromorphicForm to_float() const { return MeromorphicForm(coeff.to_float()); }
};

Divisor divisor_of_function(const RationalFunction& f, const Tolerances& tol = tolerances());
Divisor divisor_of_form(const MeromorphicForm& w, const Tolerances& tol = tolerances());

}  // namespace minsurf
