#pragma once

#include <string>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

/// Residue of w at p: exact Laurent coefficient when both are exact, circle quadrature otherwise.
Scalar residue(const MeromorphicForm& w, const SpherePoint& p, const Tolerances& tol = tolerances());
/// Always by trapezoidal quadrature on a small circle.
cplx residue_quadrature(const MeromorphicForm& w, const SpherePoint& p, const Tolerances& tol = tolerances());
/// Sum of residues over every pole (including infinity).
Scalar residue_sum(const MeromorphicForm& w, const Tolerances& tol = tolerances());

struct PeriodEntry {
    SpherePoint puncture;
    int form = 0;          // 0-based index of phi
    Scalar residue;
    double real_period = 0.0;  // Re(2 pi i rho) = -2 pi Im(rho)
    bool ok = true;
};

struct PeriodReport {
    std::vector<PeriodEntry> entries;
    std::vector<bool> puncture_ok;  // per puncture, all forms
    bool pass = true;
    bool exact = true;
};

PeriodReport period_condition(const WData& d, const Tolerances& tol = tolerances());

enum class SurfaceClass { flat, not_complete, algebraic, pseudo_algebraic };
std::string class_name(SurfaceClass c);

struct Classification {
    SurfaceClass tag = SurfaceClass::flat;
    EndReport ends;
    PeriodReport periods;
};

Classification classify(const WData& d, const Tolerances& tol = tolerances());

}  // namespace minsurf
