#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/json_io.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// Schema version of every JSON document written by the tools.
inline constexpr const char* kSchemaVersion = "1.0";

struct AnalyzeOptions {
    bool total_curvature = true;
    std::vector<Hyperplane> hyperplanes;  // R^n only
};

struct AnalysisReport {
    std::string kind;
    Json input;
    RegularityReport regularity;
    std::optional<Classification> classification;
    std::optional<TheoremReport> theorems;
    std::optional<QuadratureResult> tau;
    std::vector<std::string> warnings;
    std::string error_code;  // empty when the analysis ran to completion
    std::string error_message;

    bool pass() const;
};

/// Regularity, ends, periods, classification, theorem checks and total curvature.
/// Analysis errors are captured in error_code instead of propagating.
AnalysisReport analyze(const WData& d, const AnalyzeOptions& opt = {}, const Tolerances& tol = tolerances());

/// Theorem suite for two surfaces on one basic domain.
TheoremReport analyze_unicity(const WData& a, const WData& b, const Tolerances& tol = tolerances());

Json check_to_json(const TheoremCheck& c);
Json theorem_report_to_json(const TheoremReport& r);
Json analysis_to_json(const AnalysisReport& r);
Json quadrature_to_json(const QuadratureResult& q);

std::string theorem_report_markdown(const TheoremReport& r);
std::string analysis_markdown(const AnalysisReport& r, const WData& d);

/// Orders of g, hdz and ghdz (R3) at every zero, pole and puncture, as a Markdown table.
std::string order_table_markdown(const WData3& d, const Tolerances& tol = tolerances());

}  // namespace minsurf
