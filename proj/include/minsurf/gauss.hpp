#pragma once

#include <optional>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

/// Degree of g as a map of the sphere; throws AnalysisError("flat") for constants.
int degree(const RationalFunction& g);

/// g^{-1}(a) with multiplicities, infinity included.
Divisor preimages(const RationalFunction& g, const SpherePoint& a, const Tolerances& tol = tolerances());

/// Points where g branches, weighted by branching order e_p - 1 (infinity included).
Divisor branch_divisor(const RationalFunction& g, const Tolerances& tol = tolerances());

/// Values omitted by g on M; candidates are the values at punctures.
std::vector<SpherePoint> exceptional_values(const RationalFunction& g, const PuncturedSphere& dom,
                                            const Tolerances& tol = tolerances());

struct CriticalValue {
    SpherePoint value;
    Divisor fibre;               // full preimage with multiplicities
    int points_in_M = 0;         // number of distinct preimages in M
    int nu = 0;                  // min multiplicity over preimages in M (0 if none)
    int branching_in_M = 0;      // sum of e-1 over preimages in M
    bool branch_in_M = false;
    bool totally_ramified = false;
};

struct RamificationProfile {
    int d = 0, G = 0, k = 0;
    std::vector<SpherePoint> exceptional;
    int D_g = 0;
    int n0 = 0;                            // branching order over exceptional values
    std::vector<CriticalValue> critical;   // non-exceptional critical values
    int l = 0;                             // non-exceptional values with a branch point in M
    int l0 = 0;                            // totally ramified non-exceptional values
    int n_g = 0;                           // total branching order on the closed sphere
    int n_b = 0;                           // branching over the l ramified values, inside M
    mpq_class nu_g{0};
    Divisor branch;
};

RamificationProfile ramification_profile(const RationalFunction& g, const PuncturedSphere& dom,
                                         const Tolerances& tol = tolerances());
RamificationProfile profile_r3(const WData3& d, const Tolerances& tol = tolerances());

struct ProfileR4 {
    std::optional<RamificationProfile> p1, p2;
    bool g1_constant = false, g2_constant = false;
};

/// Throws AnalysisError("flat") when both components are constant.
ProfileR4 profile_r4(const WData4& d, const Tolerances& tol = tolerances());

}  // namespace minsurf
