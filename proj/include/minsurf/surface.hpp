#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "minsurf/periods.hpp"

namespace minsurf {

struct MeshVertex {
    std::vector<double> x;  // position in R^n
    cplx z;                 // source parameter
    double lambda2 = 0.0;
    double K = 0.0;
};

struct Mesh {
    int dim = 3;
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> faces;
    bool slit = false;  // built on a slit subdomain because some period fails
    cplx base{0.0, 0.0};
};

/// Log-polar grid. Zero radii and an empty center mean "choose automatically".
struct GridSpec {
    int radial = 32;
    int angular = 32;
    std::optional<cplx> center;
    double r_min = 0.0;
    double r_max = 0.0;
    double exclusion = 1e-2;  // relative to the grid scale
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

/// Re of the integral of the forms along a polyline; throws AnalysisError("pole") near a pole.
std::vector<double> path_integral(const WData& d, const std::vector<cplx>& path, const Tolerances& tol = tolerances());

/// x(z) = Re int_{z0}^z phi on a log-polar grid. z0 defaults to the first grid vertex.
Mesh immerse(const WData& d, std::optional<cplx> z0 = std::nullopt, const GridSpec& grid = {},
             const Tolerances& tol = tolerances());

/// lambda^2 = 1/2 sum |f_i|^2, evaluated in floating point.
double metric_numeric(const WData& d, cplx z);

/// K = -4 |f ^ f'|^2 / |f|^6 for the coefficient vector f of the forms.
double curvature(const WData& d, cplx z);
std::vector<double> curvature_field(const WData& d, const std::vector<cplx>& points);
/// -16 |g'|^2 / (|h|^2 (1+|g|^2)^4).
double curvature_r3_formula(const WData3& d, cplx z);
/// -8/(|h|^2 (1+|g1|^2)(1+|g2|^2)) (|g1'|^2/(1+|g1|^2)^2 + |g2'|^2/(1+|g2|^2)^2).
double curvature_r4_formula(const WData4& d, cplx z);
/// -Delta log lambda / lambda^2 by central differences.
double curvature_fd(const WData& d, cplx z, double step = 1e-3);

/// Largest of |<xu,xu>-<xv,xv>| and |<xu,xv>| over lambda^2, with xu, xv from integrated positions.
double isothermal_defect(const WData& d, cplx z, double step = 1e-4, const Tolerances& tol = tolerances());

/// Total curvature by two-chart quadrature of the Gauss map area density.
QuadratureResult total_curvature(const WData& d, const Tolerances& tol = tolerances());

struct ExportResult {
    std::string data;
    std::string sidecar;  // JSON with full coordinates when dim > 3 (OBJ only)
};

/// format: "obj", "ply" or "json". Throws std::invalid_argument otherwise.
ExportResult export_mesh(const Mesh& m, const std::string& format);

/// Vertex positions (x, y, z) read back from ASCII PLY.
std::vector<std::array<double, 3>> parse_ply_positions(const std::string& ply);

}  // namespace minsurf
