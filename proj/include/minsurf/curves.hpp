#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minsurf/theorems.hpp"

namespace minsurf {

/// Reduced representation (f_0 : ... : f_n) of a map P^1 -> P^n.
class ProjectiveCurve {
public:
    ProjectiveCurve() = default;
    /// Removes common factors (exact gcd, or shared numeric roots in FLOAT mode).
    explicit ProjectiveCurve(std::vector<Polynomial> comps, const Tolerances& tol = tolerances());

    const std::vector<Polynomial>& components() const { return c_; }
    /// Projective dimension n of the target.
    int ambient() const { return int(c_.size()) - 1; }
    int degree() const;
    bool is_exact() const;
    /// Components z^deg f_i(1/z): the curve in the chart at infinity.
    std::vector<Polynomial> at_infinity() const;
    std::string to_string() const;

private:
    std::vector<Polynomial> c_;
};

/// Curve of the Gauss map (phi_1 : ... : phi_n) after clearing denominators.
ProjectiveCurve curve_from_forms(const std::vector<MeromorphicForm>& phis, const Tolerances& tol = tolerances());

/// Rank of a matrix over the scalar field (exact, or relative tolerance in FLOAT mode).
int matrix_rank(std::vector<std::vector<Scalar>> m, double tol = 1e-9);

/// r such that the curve spans an r-dimensional subspace; 0 for constant curves.
int span_dimension(const ProjectiveCurve& f, double tol = 1e-9);
/// Indices of components forming a basis of the span.
std::vector<int> span_basis(const ProjectiveCurve& f, double tol = 1e-9);

struct OrderSequence {
    SpherePoint point;
    std::vector<int> delta;      // delta_0 < ... < delta_r
    std::vector<int> stat_idx;   // delta_{i+1} - delta_i - 1
};

OrderSequence order_sequence(const ProjectiveCurve& f, const SpherePoint& p, const Tolerances& tol = tolerances());

/// Wronskian determinant of the given polynomials.
Polynomial wronskian(const std::vector<Polynomial>& fs);

struct StationaryTotals {
    int r = 0;
    int deg = 0;
    std::vector<int> sigma;               // from pointwise order sequences
    std::vector<OrderSequence> points;    // stationary points only
    std::vector<int> sigma_oracle;        // from gcds of generalized Wronskians (exact curves only)
    bool oracle_available = false;
    long plucker_lhs = 0;                 // sum (r-i) sigma_i
    long plucker_rhs = 0;                 // (r+1) deg + r(r+1)(G-1)
    long plucker_rhs_literal = 0;         // (r+1) deg + r(r+1)
    bool plucker_ok = false;
    bool oracle_ok = false;
};

/// Stationary indices summed over P^1, with the Plucker audit (G = 0).
StationaryTotals stationary_totals(const ProjectiveCurve& f, const Tolerances& tol = tolerances());

struct Hyperplane {
    std::vector<Scalar> a;
    std::string label;
};

/// Every min(q, n+1)-subset of the coefficient vectors is linearly independent.
bool general_position(const std::vector<Hyperplane>& H, int n, double tol = 1e-9);

struct HyperplaneRamification {
    Divisor zeros;       // divisor of L(f) on P^1
    bool omitted = true; // no zero inside M
    int nu = 0;          // min order over zeros in M (meaningful when !omitted)
};

/// Zeros of L(f) = sum a_i f_i; throws domain_error("curve lies in H") when L(f) = 0.
HyperplaneRamification hyperplane_ramification(const ProjectiveCurve& f, const Hyperplane& H,
                                               const PuncturedSphere& dom, const Tolerances& tol = tolerances());

/// Second main theorem type inequality with exceptional set E (G = 0), plus the nondegenerate case.
TheoremReport smt3_check(const ProjectiveCurve& f, const std::vector<Hyperplane>& H, const std::vector<SpherePoint>& E,
                         const Tolerances& tol = tolerances());

/// Hyperplane ramification estimate for the Gauss map of a surface in R^n.
TheoremReport verify_rn(const WDataN& d, const std::vector<Hyperplane>& H, const Tolerances& tol = tolerances());

struct FujimotoData {
    int n = 0;
    WDataN data;
    std::vector<Hyperplane> hyperplanes;
    std::vector<Polynomial> sections;   // f_i = L_i(h)
    std::vector<int> family;            // 0 for the a_0 family
    std::vector<Scalar> a;              // a_0 .. a_k, a_0 = 0
    std::vector<Scalar> b;              // b_1 .. b_k
    bool null_certified = false;        // sum h_i^2 == 0 exactly
    bool general_position = false;
};

/// Null curve in R^n (n odd) whose Gauss map misses hyperplanes from the two-parameter families.
FujimotoData fujimoto_construction(int n, std::uint64_t seed = 1);

}  // namespace minsurf
