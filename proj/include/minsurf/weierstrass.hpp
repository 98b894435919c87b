#pragma once

#include <string>
#include <variant>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/poly.hpp"

namespace minsurf {

/// Basic domain P^1 minus finitely many punctures.
struct PuncturedSphere {
    std::vector<SpherePoint> punctures;
    int genus = 0;

    int k() const { return int(punctures.size()); }
    bool is_puncture(const SpherePoint& p, double eps = tolerances().eps_match) const;
    /// Throws if punctures are not pairwise distinct.
    void validate() const;
};

struct WData3 {
    PuncturedSphere domain;
    MeromorphicForm h;
    RationalFunction g;
};

struct WData4 {
    PuncturedSphere domain;
    MeromorphicForm h;
    RationalFunction g1, g2;
};

struct WDataN {
    PuncturedSphere domain;
    std::vector<MeromorphicForm> phis;
};

using WData = std::variant<WData3, WData4, WDataN>;

const PuncturedSphere& domain_of(const WData& d);
PuncturedSphere& domain_of(WData& d);
/// Ambient dimension n of R^n.
int ambient_dim(const WData& d);
std::string kind_name(const WData& d);
bool is_exact(const WData& d);
WData to_float(const WData& d);
/// Throws AnalysisError("unsupported genus") unless G = 0.
void require_genus0(const WData& d);

std::vector<MeromorphicForm> forms_from_data3(const WData3& d);
std::vector<MeromorphicForm> forms_from_data4(const WData4& d);
std::vector<MeromorphicForm> forms(const WData& d);
/// (hdz, g) recovered from the three forms: h = f1 - i f2, g = f3 / h.
WData3 data3_from_forms(const std::vector<MeromorphicForm>& phis, const PuncturedSphere& dom);
/// Sum of squares of the coefficients of the forms.
RationalFunction quadric(const std::vector<MeromorphicForm>& phis);

/// Constant Gauss map: the surface lies in a plane.
bool is_flat(const WData& d);

/// Multiply every form by the unit scalar `phase` (associate family rotation).
WData rotate(const WData& d, const Scalar& phase);
/// Rotation by theta; exact when theta is a multiple of pi/2.
WData rotate_angle(const WData& d, double theta);

struct RegularityPoint {
    SpherePoint point;
    int g_pole_order = 0;   // R3: pole order of g; R4: sum over g1, g2; RN: unused
    int h_order = 0;        // order of hdz (RN: min order of the forms)
    bool ok = true;
    std::string note;
};

struct RegularityReport {
    std::vector<RegularityPoint> points;
    bool pass = true;
};

/// Per-point check over M: R3 ord(h) = 2 pole(g); R4 ord(h) = pole(g1)+pole(g2);
/// RN forms holomorphic without common zeros.
RegularityReport regularity_check(const WData& d, const Tolerances& tol = tolerances());
/// Same verdict computed from the forms alone (holomorphic, no common zero).
RegularityReport regularity_from_forms(const WData& d, const Tolerances& tol = tolerances());

/// lambda^2 = 1/2 sum |f_i|^2 through reduced forms (chart-transported at infinity).
Scalar metric_factor(const WData& d, const SpherePoint& z);
/// The textbook product formula for R3/R4 (finite points off poles of g).
Scalar metric_factor_product(const WData& d, const SpherePoint& z);

struct EndEntry {
    SpherePoint puncture;
    int mu = 0;
};

struct EndReport {
    std::vector<EndEntry> ends;
    bool complete = true;
    bool algebraic_ends = true;
};

EndReport end_orders(const WData& d, const Tolerances& tol = tolerances());

}  // namespace minsurf
