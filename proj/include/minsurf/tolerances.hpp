#pragma once

#include <string>

namespace minsurf {

struct Tolerances {
    double eps_root = 1e-10;   // relative root tolerance (FLOAT clustering)
    double eps_res = 1e-8;     // residual bound for numeric roots
    double eps_match = 1e-8;   // chordal distance for point identity
    double eps_per = 1e-9;     // real-period threshold
    double eps_zero = 1e-12;   // relative zero test for FLOAT coefficients
    double quad_tol = 1e-9;    // line-integral tolerance per segment
    double area_tol = 1e-7;    // relative tolerance for area quadrature
};

/// Process-wide defaults; set once at startup (CLI, env), read-only afterwards.
const Tolerances& tolerances();
void set_tolerances(const Tolerances& t);

/// Apply "key=value" to t; throws std::invalid_argument on unknown keys.
void apply_tolerance_override(Tolerances& t, const std::string& kv);

}  // namespace minsurf
