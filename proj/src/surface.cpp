#include "minsurf/surface.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include "minsurf/curves.hpp"

namespace minsurf {

namespace {

using CVec = std::vector<cplx>;

cplx horner(const CVec& c, cplx z) {
    cplx s(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
    return s;
}

CVec dcoeffs(const CVec& c) {
    CVec d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * double(k));
    return d;
}

/// Coefficients of the forms as floating point rational functions, with derivatives.
struct NumericForms {
    std::vector<CVec> num, den, dnum, dden;
    std::vector<cplx> poles;
    std::vector<cplx> punctures;  // finite ones
    bool inf_puncture = false;

    explicit NumericForms(const WData& d) {
        for (const auto& f : forms(d)) {
            num.push_back(f.coeff.num().numeric());
            den.push_back(f.coeff.den().numeric());
            dnum.push_back(dcoeffs(num.back()));
            dden.push_back(dcoeffs(den.back()));
            if (f.coeff.den().degree() > 0) {
                for (Divisor dv = poly_roots(f.coeff.den()); const auto& e : dv.entries())
                    if (!e.point.is_infinity()) poles.push_back(e.point.approx());
            }
        }
        for (const auto& p : domain_of(d).punctures) {
            if (p.is_infinity())
                inf_puncture = true;
            else
                punctures.push_back(p.approx());
        }
    }

    size_t n() const { return num.size(); }

    void eval(cplx z, CVec& f) const {
        f.resize(n());
        for (size_t i = 0; i < n(); ++i) f[i] = horner(num[i], z) / horner(den[i], z);
    }

    void eval_with_derivative(cplx z, CVec& f, CVec& fp) const {
        f.resize(n());
        fp.resize(n());
        for (size_t i = 0; i < n(); ++i) {
            cplx N = horner(num[i], z), D = horner(den[i], z);
            cplx Np = horner(dnum[i], z), Dp = horner(dden[i], z);
            f[i] = N / D;
            fp[i] = (Np * D - N * Dp) / (D * D);
        }
    }

    void check_point(cplx z) const {
        for (const auto& p : punctures)
            if (std::abs(z - p) < 1e-12 * std::max(1.0, std::abs(p)))
                throw AnalysisError("end point", "point is a puncture");
        for (const auto& p : poles)
            if (std::abs(z - p) < 1e-12 * std::max(1.0, std::abs(p))) throw AnalysisError("pole", "point is a pole of the forms");
    }
};

double dist_to_segment(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double L2 = std::norm(ab);
    if (L2 == 0.0) return std::abs(p - a);
    double t = std::clamp(std::real((p - a) * std::conj(ab)) / L2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// Re int_a^b phi_i dz for every i, Gauss-Kronrod 7-15 with adaptive bisection.
std::vector<double> segment_integral(const NumericForms& nf, cplx a, cplx b, const Tolerances& tol) {
    double len = std::abs(b - a);
    std::vector<double> out(nf.n(), 0.0);
    if (len == 0.0) return out;
    for (const auto& p : nf.poles)
        if (dist_to_segment(p, a, b) < 1e-9 * std::max(1.0, std::abs(p)))
            throw AnalysisError("pole", "integration path crosses a pole");
    for (const auto& p : nf.punctures)
        if (dist_to_segment(p, a, b) < 1e-9 * std::max(1.0, std::abs(p)))
            throw AnalysisError("pole", "integration path crosses a puncture");
    cplx dz = b - a;
    for (size_t i = 0; i < nf.n(); ++i) {
        auto f = [&](double t) {
            cplx z = a + t * dz;
            return std::real(horner(nf.num[i], z) / horner(nf.den[i], z) * dz);
        };
        double err = 0.0;
        out[i] = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 20, tol.quad_tol, &err);
    }
    return out;
}

void add_into(std::vector<double>& x, const std::vector<double>& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
}

double curvature_from(const CVec& f, const CVec& fp) {
    double f2 = 0.0, w2 = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
        f2 += std::norm(f[i]);
        for (size_t j = i + 1; j < f.size(); ++j) w2 += std::norm(f[i] * fp[j] - f[j] * fp[i]);
    }
    if (f2 == 0.0) throw AnalysisError("branch point", "metric vanishes");
    return -4.0 * w2 / (f2 * f2 * f2);
}

}  // namespace

std::vector<double> path_integral(const WData& d, const std::vector<cplx>& path, const Tolerances& tol) {
    NumericForms nf(d);
    std::vector<double> x(nf.n(), 0.0);
    for (size_t k = 1; k < path.size(); ++k) add_into(x, segment_integral(nf, path[k - 1], path[k], tol));
    return x;
}

double metric_numeric(const WData& d, cplx z) {
    NumericForms nf(d);
    nf.check_point(z);
    CVec f;
    nf.eval(z, f);
    double s = 0.0;
    for (const auto& v : f) s += std::norm(v);
    return 0.5 * s;
}

double curvature(const WData& d, cplx z) {
    NumericForms nf(d);
    nf.check_point(z);
    CVec f, fp;
    nf.eval_with_derivative(z, f, fp);
    return curvature_from(f, fp);
}

std::vector<double> curvature_field(const WData& d, const std::vector<cplx>& points) {
    NumericForms nf(d);
    std::vector<double> out;
    CVec f, fp;
    for (const auto& z : points) {
        nf.check_point(z);
        nf.eval_with_derivative(z, f, fp);
        out.push_back(curvature_from(f, fp));
    }
    return out;
}

double curvature_r3_formula(const WData3& d, cplx z) {
    cplx h = d.h.coeff.eval(z), g = d.g.eval(z), gp = d.g.derivative().eval(z);
    double t = 1.0 + std::norm(g);
    return -16.0 * std::norm(gp) / (std::norm(h) * std::pow(t, 4));
}

double curvature_r4_formula(const WData4& d, cplx z) {
    cplx h = d.h.coeff.eval(z);
    cplx g1 = d.g1.eval(z), g2 = d.g2.eval(z);
    cplx g1p = d.g1.derivative().eval(z), g2p = d.g2.derivative().eval(z);
    double t1 = 1.0 + std::norm(g1), t2 = 1.0 + std::norm(g2);
    return -8.0 / (std::norm(h) * t1 * t2) * (std::norm(g1p) / (t1 * t1) + std::norm(g2p) / (t2 * t2));
}

double curvature_fd(const WData& d, cplx z, double step) {
    NumericForms nf(d);
    nf.check_point(z);
    CVec f;
    auto loglam2 = [&](cplx w) {
        nf.eval(w, f);
        double s = 0.0;
        for (const auto& v : f) s += std::norm(v);
        return std::log(0.5 * s);
    };
    double c = loglam2(z);
    double lap = (loglam2(z + step) + loglam2(z - step) + loglam2(z + cplx(0, step)) + loglam2(z - cplx(0, step)) - 4.0 * c) /
                 (step * step);
    // log lambda = 1/2 log lambda^2
    return -0.5 * lap / std::exp(c);
}

double isothermal_defect(const WData& d, cplx z, double step, const Tolerances& tol) {
    NumericForms nf(d);
    nf.check_point(z);
    auto xu = segment_integral(nf, z - step, z + step, tol);
    auto xv = segment_integral(nf, z - cplx(0, step), z + cplx(0, step), tol);
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (size_t i = 0; i < xu.size(); ++i) {
        double a = xu[i] / (2 * step), b = xv[i] / (2 * step);
        uu += a * a;
        vv += b * b;
        uv += a * b;
    }
    CVec f;
    nf.eval(z, f);
    double lam2 = 0.0;
    for (const auto& v : f) lam2 += std::norm(v);
    lam2 *= 0.5;
    return std::max(std::abs(uu - vv), std::abs(uv)) / lam2;
}

Mesh immerse(const WData& d, std::optional<cplx> z0, const GridSpec& grid, const Tolerances& tol) {
    if (grid.radial < 1 || grid.angular < 3) throw std::invalid_argument("grid needs radial >= 1 and angular >= 3");
    NumericForms nf(d);
    Mesh mesh;
    mesh.dim = int(nf.n());

    // Center: centroid of the finite punctures (0 if there are none).
    cplx c(0.0, 0.0);
    if (grid.center) {
        c = *grid.center;
    } else if (!nf.punctures.empty()) {
        for (const auto& p : nf.punctures) c += p;
        c /= double(nf.punctures.size());
    }
    bool center_is_puncture = false;
    std::vector<cplx> others;
    for (const auto& p : nf.punctures) {
        if (std::abs(p - c) < 1e-12 * std::max(1.0, std::abs(c)))
            center_is_puncture = true;
        else
            others.push_back(p);
    }
    double s_near = 1.0, s_far = 1.0;
    if (!others.empty()) {
        s_near = s_far = std::abs(others[0] - c);
        for (const auto& p : others) {
            s_near = std::min(s_near, std::abs(p - c));
            s_far = std::max(s_far, std::abs(p - c));
        }
    }
    double r_min = grid.r_min > 0 ? grid.r_min : (center_is_puncture ? 0.1 : 0.05) * s_near;
    double r_max = grid.r_max > 0 ? grid.r_max : (!others.empty() ? 2.0 * s_far : (center_is_puncture ? 10.0 : 2.0));
    if (!(r_max > r_min)) throw std::invalid_argument("grid needs r_max > r_min");
    double scale = std::max(1.0, s_far);
    double excl = grid.exclusion * scale;

    // Ray angles offset to stay away from the punctures.
    const int N = grid.angular, R = grid.radial;
    const double two_pi = 2.0 * std::numbers::pi;
    double dtheta = two_pi / N;
    double theta_off = 0.0;
    if (!others.empty()) {
        double best = -1.0;
        for (int t = 0; t < 16; ++t) {
            double off = dtheta * (t + 0.5) / 16.0;
            double worst = dtheta;
            for (const auto& p : others) {
                double a = std::fmod(std::arg(p - c) - off + 4 * two_pi, dtheta);
                worst = std::min(worst, std::min(a, dtheta - a));
            }
            if (worst > best + 1e-12) {
                best = worst;
                theta_off = off;
            }
        }
    }

    PeriodReport per = period_condition(d, tol);
    mesh.slit = !per.pass;
    std::vector<cplx> bad;  // finite punctures with a failing period
    if (!per.pass) {
        const auto& P = domain_of(d).punctures;
        for (size_t k = 0; k < P.size(); ++k)
            if (!per.puncture_ok[k] && !P[k].is_infinity()) bad.push_back(P[k].approx());
        for (const auto& p : bad) {
            double rp = std::abs(p - c);
            if (rp > 1e-12 * std::max(1.0, std::abs(c)) && rp < r_min)
                throw AnalysisError("multivalued", "puncture with nonzero real period inside the inner ring");
        }
    }

    auto node = [&](int i, int j) {
        double r = R == 1 ? r_min : r_min * std::pow(r_max / r_min, double(i) / (R - 1));
        return c + std::polar(r, theta_off + j * dtheta);
    };
    auto near_singular = [&](cplx a, cplx b) {
        for (const auto& p : nf.punctures)
            if (dist_to_segment(p, a, b) < 0.25 * excl) return true;
        for (const auto& p : nf.poles)
            if (dist_to_segment(p, a, b) < 0.25 * excl) return true;
        return false;
    };
    auto excluded = [&](cplx z) {
        for (const auto& p : nf.punctures)
            if (std::abs(z - p) < excl) return true;
        for (const auto& p : nf.poles)
            if (std::abs(z - p) < excl) return true;
        return false;
    };

    cplx base = z0 ? *z0 : node(0, 0);
    mesh.base = base;
    nf.check_point(base);

    std::vector<std::vector<double>> X(size_t(R) * N);
    std::vector<char> valid(size_t(R) * N, 0);
    auto id = [&](int i, int j) { return size_t(i) * N + j; };

    // Inner ring, walked once around without wrapping.
    if (!excluded(node(0, 0)) && !near_singular(base, node(0, 0))) {
        X[id(0, 0)] = segment_integral(nf, base, node(0, 0), tol);
        valid[id(0, 0)] = 1;
    }
    for (int j = 1; j < N; ++j) {
        if (!valid[id(0, j - 1)] || excluded(node(0, j)) || near_singular(node(0, j - 1), node(0, j))) continue;
        X[id(0, j)] = X[id(0, j - 1)];
        add_into(X[id(0, j)], segment_integral(nf, node(0, j - 1), node(0, j), tol));
        valid[id(0, j)] = 1;
    }
    // Rays outward; reroute along the ring only when periods vanish.
    for (int j = 0; j < N; ++j) {
        for (int i = 1; i < R; ++i) {
            cplx z = node(i, j);
            if (excluded(z)) continue;
            if (valid[id(i - 1, j)] && !near_singular(node(i - 1, j), z)) {
                X[id(i, j)] = X[id(i - 1, j)];
                add_into(X[id(i, j)], segment_integral(nf, node(i - 1, j), z, tol));
                valid[id(i, j)] = 1;
            } else if (per.pass && j > 0 && valid[id(i, j - 1)] && !near_singular(node(i, j - 1), z)) {
                X[id(i, j)] = X[id(i, j - 1)];
                add_into(X[id(i, j)], segment_integral(nf, node(i, j - 1), z, tol));
                valid[id(i, j)] = 1;
            }
        }
    }

    std::vector<int> index(size_t(R) * N, -1);
    CVec f, fp;
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < N; ++j) {
            if (!valid[id(i, j)]) continue;
            MeshVertex v;
            v.z = node(i, j);
            v.x = X[id(i, j)];
            nf.eval_with_derivative(v.z, f, fp);
            double s = 0.0;
            for (const auto& w : f) s += std::norm(w);
            v.lambda2 = 0.5 * s;
            v.K = curvature_from(f, fp);
            index[id(i, j)] = int(mesh.vertices.size());
            mesh.vertices.push_back(std::move(v));
        }
    }

    // A cell between rays j and j+1 outside radius |p - c| is cut by the slit from p.
    auto cut_by_slit = [&](int i, int j) {
        if (per.pass) return false;
        if (j == N - 1) return true;  // seam
        double r_out = std::abs(node(i + 1, j) - c);
        for (const auto& p : bad) {
            double rp = std::abs(p - c);
            if (rp < 1e-12 * std::max(1.0, std::abs(c)) || rp > r_out) continue;
            double a = std::fmod(std::arg(p - c) - theta_off - j * dtheta + 4 * two_pi, two_pi);
            if (a < dtheta) return true;
        }
        return false;
    };
    for (int i = 0; i + 1 < R; ++i) {
        for (int j = 0; j < N; ++j) {
            if (cut_by_slit(i, j)) continue;
            int jn = (j + 1) % N;
            int a = index[id(i, j)], b = index[id(i + 1, j)], e = index[id(i + 1, jn)], g = index[id(i, jn)];
            if (a >= 0 && b >= 0 && e >= 0) mesh.faces.push_back({a, b, e});
            if (a >= 0 && e >= 0 && g >= 0) mesh.faces.push_back({a, e, g});
        }
    }
    return mesh;
}

namespace {

/// int over the unit disk of 2 |f ^ f'|^2 / |f|^4 for polynomial components f.
struct DiskIntegrator {
    std::vector<CVec> c, dc;
    double ring_tol;
    int rings = 0;

    double density(cplx z) const {
        double f2 = 0.0, w2 = 0.0;
        CVec f(c.size()), fp(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            f[i] = horner(c[i], z);
            fp[i] = horner(dc[i], z);
            f2 += std::norm(f[i]);
        }
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) w2 += std::norm(f[i] * fp[j] - f[j] * fp[i]);
        return 2.0 * w2 / (f2 * f2);
    }

    /// Periodic trapezoid on the circle |z| = r, doubled until two levels agree.
    double ring(double r, double* err) {
        ++rings;
        const double two_pi = 2.0 * std::numbers::pi;
        int m = 32;
        double prev = 0.0;
        for (int k = 0; k < m; ++k) prev += density(std::polar(r, two_pi * k / m));
        prev *= two_pi / m;
        while (m < (1 << 18)) {
            double add = 0.0;
            for (int k = 0; k < m; ++k) add += density(std::polar(r, two_pi * (k + 0.5) / m));
            add *= two_pi / (2 * m);
            double cur = 0.5 * prev + add;
            m *= 2;
            double diff = std::abs(cur - prev);
            prev = cur;
            if (diff <= ring_tol * std::max(1.0, std::abs(cur))) {
                *err = std::max(*err, diff);
                return cur;
            }
        }
        throw AnalysisError("quadrature budget", "angular refinement exhausted; partial value " + std::to_string(prev));
    }

    QuadratureResult integrate(double tol) {
        double ring_err = 0.0, err = 0.0;
        auto f = [&](double r) { return r * ring(r, &ring_err); };
        double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 25, tol, &err);
        return {v, err + 2.0 * std::numbers::pi * ring_err, rings};
    }
};

double fs_area(const std::vector<Polynomial>& comps, const Tolerances& tol, QuadratureResult& acc) {
    int deg = 0;
    for (const auto& p : comps) deg = std::max(deg, p.degree());
    double total = 0.0;
    for (int chart = 0; chart < 2; ++chart) {
        DiskIntegrator di;
        di.ring_tol = 1e-12;
        for (const auto& p : comps) {
            Polynomial q = chart == 0 ? p : p.reversed(deg);
            di.c.push_back(q.numeric());
            di.dc.push_back(dcoeffs(di.c.back()));
        }
        QuadratureResult r = di.integrate(tol.area_tol);
        total += r.value;
        acc.error += r.error;
        acc.subdivisions += r.subdivisions;
    }
    return total;
}

}  // namespace

QuadratureResult total_curvature(const WData& d, const Tolerances& tol) {
    require_genus0(d);
    QuadratureResult res;
    if (auto* a = std::get_if<WData3>(&d)) {
        // 4|g'|^2/(1+|g|^2)^2 is twice the density of (N : D).
        res.value = -2.0 * fs_area({a->g.num(), a->g.den()}, tol, res);
        res.error *= 2.0;
    } else if (auto* b = std::get_if<WData4>(&d)) {
        double s = 0.0;
        for (const auto* g : {&b->g1, &b->g2})
            if (!g->is_constant()) s += fs_area({g->num(), g->den()}, tol, res);
        res.value = -s;
    } else {
        ProjectiveCurve curve = curve_from_forms(std::get<WDataN>(d).phis, tol);
        res.value = -fs_area(curve.components(), tol, res);
    }
    return res;
}

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // drop negative zero
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

double coord(const MeshVertex& v, size_t k) { return k < v.x.size() ? v.x[k] : 0.0; }

std::string sidecar_json(const Mesh& m) {
    nlohmann::json j;
    j["coords"] = nlohmann::json::array();
    j["K"] = nlohmann::json::array();
    j["lambda2"] = nlohmann::json::array();
    for (const auto& v : m.vertices) {
        j["coords"].push_back(v.x);
        j["K"].push_back(v.K);
        j["lambda2"].push_back(v.lambda2);
    }
    j["dim"] = m.dim;
    j["slit"] = m.slit;
    j["faces"] = m.faces;
    return j.dump() + "\n";
}

}  // namespace

ExportResult export_mesh(const Mesh& m, const std::string& format) {
    ExportResult out;
    std::string s;
    if (format == "obj") {
        s += "# minsurf mesh, dim " + std::to_string(m.dim) + "\n";
        for (const auto& v : m.vertices)
            s += "v " + num(coord(v, 0)) + " " + num(coord(v, 1)) + " " + num(coord(v, 2)) + "\n";
        for (const auto& f : m.faces)
            s += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " + std::to_string(f[2] + 1) + "\n";
        if (m.dim > 3) out.sidecar = sidecar_json(m);
    } else if (format == "ply") {
        s += "ply\nformat ascii 1.0\n";
        s += "element vertex " + std::to_string(m.vertices.size()) + "\n";
        s += "property double x\nproperty double y\nproperty double z\n";
        for (int k = 3; k < m.dim; ++k) s += "property double x" + std::to_string(k + 1) + "\n";
        s += "property double K\nproperty double lambda2\n";
        s += "element face " + std::to_string(m.faces.size()) + "\n";
        s += "property list uchar int vertex_indices\nend_header\n";
        for (const auto& v : m.vertices) {
            std::string line = num(coord(v, 0)) + " " + num(coord(v, 1)) + " " + num(coord(v, 2));
            for (int k = 3; k < m.dim; ++k) line += " " + num(coord(v, size_t(k)));
            s += line + " " + num(v.K) + " " + num(v.lambda2) + "\n";
        }
        for (const auto& f : m.faces)
            s += "3 " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + "\n";
    } else if (format == "json") {
        s = sidecar_json(m);
    } else {
        throw std::invalid_argument("unsupported format: " + format);
    }
    out.data = std::move(s);
    return out;
}

std::vector<std::array<double, 3>> parse_ply_positions(const std::string& ply) {
    std::istringstream in(ply);
    std::string line;
    size_t count = 0;
    bool header_ok = false;
    while (std::getline(in, line)) {
        if (line.rfind("element vertex ", 0) == 0) count = std::stoul(line.substr(15));
        if (line == "end_header") {
            header_ok = true;
            break;
        }
    }
    if (!header_ok) throw std::invalid_argument("PLY header not terminated");
    std::vector<std::array<double, 3>> pts;
    for (size_t k = 0; k < count; ++k) {
        if (!std::getline(in, line)) throw std::invalid_argument("PLY truncated");
        std::istringstream ls(line);
        std::array<double, 3> p{};
        if (!(ls >> p[0] >> p[1] >> p[2])) throw std::invalid_argument("bad PLY vertex line");
        pts.push_back(p);
    }
    return pts;
}

}  // namespace minsurf
