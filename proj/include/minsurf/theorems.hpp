#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minsurf/gauss.hpp"
#include "minsurf/periods.hpp"

namespace minsurf {

/// Rational number or +infinity.
struct ExtRational {
    bool infinite = false;
    mpq_class value{0};

    ExtRational() = default;
    ExtRational(mpq_class q) : value(std::move(q)) { value.canonicalize(); }
    ExtRational(long v) : value(v) {}
    template <class T, class U>
    ExtRational(const __gmp_expr<T, U>& e) : value(e) {
        value.canonicalize();
    }
    static ExtRational inf() {
        ExtRational r;
        r.infinite = true;
        return r;
    }
    double to_double() const;
    std::string to_string() const;
    friend int compare(const ExtRational& a, const ExtRational& b);
    friend bool operator==(const ExtRational& a, const ExtRational& b) { return compare(a, b) == 0; }
};

/// R = d / denominator. R3 uses G-1+k/2, R4 and Rn use 2G-2+k.
struct RatioR {
    int d = 0;
    mpq_class denominator{0};

    bool hyperbolic() const { return sgn(denominator) > 0; }
    bool non_hyperbolic() const { return sgn(denominator) < 0; }
    /// +inf when the denominator vanishes; meaningless when non-hyperbolic.
    ExtRational value() const;
    /// 1/R, which stays finite when R is infinite.
    mpq_class inverse() const;
    std::string to_string() const;
};

RatioR ratio_r3(int d, int G, int k);
RatioR ratio_r4(int d, int G, int k);

struct TheoremCheck {
    std::string id;
    std::string form;       // "raw", "R" or "audit"
    std::string statement;  // human readable inequality
    ExtRational lhs, rhs;
    std::string relation;   // "<=", "<", ">=", ">", "="
    bool applicable = true;
    bool pass = true;
    bool equality = false;
    std::string note;
};

struct TheoremReport {
    std::string kind;  // "r3", "r4", "unicity-r3", ...
    std::vector<TheoremCheck> checks;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> warnings;
    bool non_hyperbolic = false;

    bool pass() const;
    const TheoremCheck& get(const std::string& id) const;
    bool has(const std::string& id) const;
    std::string fact(const std::string& key) const;
};

/// Value distribution inequalities for (hdz, g) in R3.
TheoremReport verify_r3(const WData3& d, const Tolerances& tol = tolerances());
/// Value distribution inequalities for (hdz, g1, g2) in R4, case (i) or (ii) by constancy.
TheoremReport verify_r4(const WData4& d, const Tolerances& tol = tolerances());

struct SharedValues {
    bool identical = false;
    int q = 0;
    std::vector<SpherePoint> values;
    int d = 0;
    bool degree_mismatch = false;
};

/// Values c with gA^{-1}(c) = gB^{-1}(c) on M (as sets).
SharedValues shared_values(const RationalFunction& gA, const RationalFunction& gB, const PuncturedSphere& dom,
                           const Tolerances& tol = tolerances());

TheoremReport verify_unicity_r3(const WData3& a, const WData3& b, const Tolerances& tol = tolerances());
TheoremReport verify_unicity_r4(const WData4& a, const WData4& b, const Tolerances& tol = tolerances());

/// Pull back along z -> z^m; requires 0 and infinity among the punctures.
WData pullback_covering(const WData& d, int m, const Tolerances& tol = tolerances());

}  // namespace minsurf
