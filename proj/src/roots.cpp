#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "minsurf/poly.hpp"

namespace minsurf {

namespace {

cplx horner(const std::vector<cplx>& c, cplx z, cplx* d = nullptr) {
    cplx p(0.0), dp(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    if (d) *d = dp;
    return p;
}

double eval_scale(const std::vector<cplx>& c, cplx z) {
    double r = std::abs(z), s = 0.0, pw = 1.0;
    for (const auto& a : c) {
        s += std::abs(a) * pw;
        pw *= r;
    }
    return s;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
    int n = int(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[size_t(i)] / c[size_t(n)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cplx> r;
    for (int i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

void polish(const std::vector<cplx>& c, std::vector<cplx>& roots) {
    for (auto& z : roots) {
        for (int it = 0; it < 4; ++it) {
            cplx d;
            cplx p = horner(c, z, &d);
            if (d == cplx(0.0) || p == cplx(0.0)) break;
            cplx nz = z - p / d;
            if (std::abs(horner(c, nz)) < std::abs(p))
                z = nz;
            else
                break;
        }
    }
}

// Simultaneous Aberth-Ehrlich iteration; false if it fails to converge.
bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z) {
    int n = int(c.size()) - 1;
    double lead = std::abs(c.back());
    double rad = 0.0;
    for (int k = 0; k < n; ++k) rad = std::max(rad, std::pow(std::abs(c[size_t(k)]) / lead, 1.0 / (n - k)));
    rad = std::max(rad, 1e-3);
    z.resize(size_t(n));
    for (int k = 0; k < n; ++k) z[size_t(k)] = std::polar(rad, 2.0 * M_PI * k / n + 0.4);
    std::vector<bool> done(size_t(n), false);
    for (int it = 0; it < 2000; ++it) {
        bool all = true;
        for (int k = 0; k < n; ++k) {
            if (done[size_t(k)]) continue;
            cplx d;
            cplx p = horner(c, z[size_t(k)], &d);
            if (std::abs(p) <= 1e-17 * eval_scale(c, z[size_t(k)])) {
                done[size_t(k)] = true;
                continue;
            }
            cplx ratio = (d == cplx(0.0)) ? cplx(1e-3) : p / d;
            cplx s(0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (z[size_t(k)] - z[size_t(j)]);
            cplx w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
            z[size_t(k)] -= w;
            if (std::abs(w) <= 1e-15 * std::max(1.0, std::abs(z[size_t(k)])))
                done[size_t(k)] = true;
            else
                all = false;
        }
        if (all) return true;
    }
    return false;
}

std::vector<cplx> numeric_roots(const std::vector<cplx>& c) {
    int n = int(c.size()) - 1;
    if (n == 1) return {-c[0] / c[1]};
    std::vector<cplx> z;
    if (!aberth(c, z)) z = companion_roots(c);
    polish(c, z);
    return z;
}

bool residual_ok(const std::vector<cplx>& c, cplx z, double eps) {
    return std::abs(horner(c, z)) <= eps * std::max(eval_scale(c, z), 1e-300);
}

// Exact recognition of a numeric root of an exact polynomial as a Gaussian rational.
std::optional<ExactComplex> recognize(const Polynomial& p, cplx z) {
    const long max_den = 1000000;
    mpq_class re = rationalize(z.real(), max_den), im = rationalize(z.imag(), max_den);
    ExactComplex cand(re, im);
    if (std::abs(cand.to_complex() - z) > 1e-7 * std::max(1.0, std::abs(z))) return std::nullopt;
    try {
        Scalar v = p(Scalar(cand));
        if (v.exact().is_zero()) return cand;
    } catch (const std::domain_error&) {
    }
    return std::nullopt;
}

// Roots of an exact square-free polynomial; exact where recognizable.
std::vector<SpherePoint> squarefree_roots(const Polynomial& a, const Tolerances& tol) {
    std::vector<cplx> c = a.numeric();
    std::vector<cplx> num = numeric_roots(c);
    std::vector<std::optional<ExactComplex>> ex(num.size());
    Polynomial rest = a;
    for (size_t k = 0; k < num.size(); ++k) {
        if (auto e = recognize(rest, num[k])) {
            ex[k] = e;
            rest = divmod(rest, Polynomial(std::vector<Scalar>{-Scalar(*e), Scalar(1)})).first;
        }
    }
    if (rest.degree() == 2) {
        try {
            Scalar A = rest.coeff(2), B = rest.coeff(1), C = rest.coeff(0);
            Scalar disc = B * B - Scalar(4) * A * C;
            if (auto s = exact_sqrt(disc.exact())) {
                Scalar r1 = (-B + Scalar(*s)) / (Scalar(2) * A);
                Scalar r2 = (-B - Scalar(*s)) / (Scalar(2) * A);
                for (const Scalar& r : {r1, r2}) {
                    if (!rest(r).exact().is_zero()) continue;
                    size_t best = num.size();
                    double bd = INFINITY;
                    for (size_t k = 0; k < num.size(); ++k) {
                        if (ex[k]) continue;
                        double dd = std::abs(num[k] - r.value());
                        if (dd < bd) {
                            bd = dd;
                            best = k;
                        }
                    }
                    if (best < num.size()) ex[best] = r.exact();
                }
            }
        } catch (const std::domain_error&) {
            // Field mismatch: keep numeric roots.
        }
    }
    std::vector<SpherePoint> out;
    for (size_t k = 0; k < num.size(); ++k) {
        if (ex[k]) {
            out.emplace_back(Scalar(*ex[k]));
        } else {
            if (!residual_ok(c, num[k], tol.eps_res))
                throw std::runtime_error("root residual above tolerance for " + a.to_string());
            out.emplace_back(Scalar(num[k]));
        }
    }
    return out;
}

Divisor float_roots(const Polynomial& p, const Tolerances& tol) {
    std::vector<cplx> c = p.numeric();
    std::vector<cplx> r = numeric_roots(c);
    size_t n = r.size();
    // Multiple roots of floating data spread like eps^(1/m); merge within this radius.
    double rad = std::pow(tol.eps_root, 0.4);
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double s = std::max({1.0, std::abs(r[i]), std::abs(r[j])});
            if (std::abs(r[i] - r[j]) <= rad * s) parent[find(i)] = find(j);
        }
    std::vector<std::pair<cplx, int>> clusters;
    std::vector<int> idx(n, -1);
    for (size_t i = 0; i < n; ++i) {
        size_t root = find(i);
        if (idx[root] < 0) {
            idx[root] = int(clusters.size());
            clusters.push_back({cplx(0.0), 0});
        }
        clusters[size_t(idx[root])].first += r[i];
        clusters[size_t(idx[root])].second += 1;
    }
    for (auto& cl : clusters) cl.first /= double(cl.second);
    for (size_t i = 0; i < clusters.size(); ++i)
        for (size_t j = i + 1; j < clusters.size(); ++j) {
            double s = std::max({1.0, std::abs(clusters[i].first), std::abs(clusters[j].first)});
            if (std::abs(clusters[i].first - clusters[j].first) <= 10.0 * rad * s)
                throw std::domain_error("ambiguous root clusters near " + Scalar(clusters[i].first).to_string() +
                                        " and " + Scalar(clusters[j].first).to_string());
        }
    Divisor d;
    for (const auto& cl : clusters) {
        if (!residual_ok(c, cl.first, std::max(tol.eps_res, 1e-6)))
            throw std::runtime_error("root cluster residual above tolerance for " + p.to_string());
        d.add(SpherePoint(Scalar(cl.first)), cl.second, 0.0);
    }
    return d;
}

}  // namespace

Divisor poly_roots(const Polynomial& p, const Tolerances& tol) {
    if (p.is_zero()) throw std::domain_error("undefined divisor");
    Divisor d;
    if (p.degree() == 0) return d;
    if (!p.is_exact()) {
        // Exact-zero low coefficients give a root at 0 of known multiplicity.
        int z0 = 0;
        while (p.coeff(z0).is_zero()) ++z0;
        if (z0 > 0) {
            d.add(SpherePoint(Scalar(0)), z0, 0.0);
            std::vector<Scalar> rest(p.coeffs().begin() + z0, p.coeffs().end());
            Polynomial q(rest);
            if (q.degree() > 0) d.add(float_roots(q, tol));
        } else {
            d = float_roots(p, tol);
        }
    } else {
        for (const auto& [a, m] : squarefree(p))
            for (const auto& z : squarefree_roots(a, tol)) d.add(z, m, 0.0);
    }
    d.sort();
    return d;
}

}  // namespace minsurf
