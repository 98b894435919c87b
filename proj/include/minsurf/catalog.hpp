#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minsurf/curves.hpp"

namespace minsurf {

using Params = std::map<std::string, std::string>;

/// Invariants an analyzer run must reproduce. Keys follow TheoremReport facts.
struct ExpectedTable {
    std::vector<std::pair<std::string, std::string>> facts;
    std::optional<bool> periods;
    std::optional<double> tau_over_pi;  // total curvature / pi
    std::string mode = "EXACT";
};

struct CatalogEntry {
    std::string name;
    std::string title;
    Params params;                  // effective parameters, defaults filled in
    std::optional<WData> data;      // absent for bookkeeping-only entries
    std::optional<WData> partner;   // second surface of a unicity pair
    std::vector<Hyperplane> hyperplanes;
    ExpectedTable expected;
    std::string flag;               // "", "transcendental", "genus-1", "documentation"
    std::string note;               // where the datum comes from
};

struct CatalogSummary {
    std::string name;
    std::string title;
    std::string kind;  // r3, r4, rn, unicity-r3, unicity-r4, none
    std::string flag;
};

/// Throws std::invalid_argument for unknown names or parameters out of range.
CatalogEntry catalog_get(const std::string& name, const Params& params = {});
std::vector<CatalogSummary> catalog_list();

/// Miyaoka-Sato data with g divided by sigma (Gaussian rational coefficients).
WData3 miyaoka_sato_normalized(const mpq_class& a, const mpq_class& t);

/// (G, k, d, R) of the torus series g = sigma/(p^j p'), j = 1..jmax.
struct TorusSeriesRow {
    int j, G, k, d;
    mpq_class R;
};
std::vector<TorusSeriesRow> torus_series(int jmax);

}  // namespace minsurf
