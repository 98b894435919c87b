#include "minsurf/curves.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minsurf {

namespace {

Polynomial linear(const Scalar& root) { return Polynomial(std::vector<Scalar>{-root, Scalar(1)}); }

// Divide out common roots numerically.
std::vector<Polynomial> reduce_float(std::vector<Polynomial> c, const Tolerances& tol) {
    const Polynomial* lowest = nullptr;
    for (const auto& p : c)
        if (!p.is_zero() && (!lowest || p.degree() < lowest->degree())) lowest = &p;
    if (!lowest || lowest->degree() <= 0) return c;
    Divisor roots = poly_roots(*lowest, tol);
    for (const auto& e : roots.entries()) {
        int m = INT_MAX;
        for (const auto& p : c)
            if (!p.is_zero()) m = std::min(m, poly_order_at(p, e.point, tol));
        for (int j = 0; j < m; ++j)
            for (auto& p : c)
                if (!p.is_zero()) p = divmod(p, linear(e.point.value())).first;
    }
    return c;
}

int rank_impl(std::vector<std::vector<Scalar>>& m, double tol, std::vector<int>* pivots) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    bool exact = true;
    double scale = 0.0;
    for (const auto& r : m)
        for (const auto& s : r) {
            exact = exact && s.is_exact();
            scale = std::max(scale, s.abs());
        }
    double thr = tol * std::max(scale, 1e-300);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rows;
        double best = 0.0;
        for (size_t r = rank; r < rows; ++r) {
            const Scalar& s = m[r][c];
            if (exact && s.is_exact()) {
                if (!s.exact().is_zero()) {
                    piv = r;
                    break;
                }
            } else if (s.abs() > thr && s.abs() > best) {
                best = s.abs();
                piv = r;
            }
        }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Scalar inv = Scalar(1) / m[rank][c];
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar f = m[r][c] * inv;
            for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
            m[r][c] = exact ? Scalar(0) : Scalar(cplx(0.0, 0.0));
        }
        if (pivots) pivots->push_back(int(c));
        ++rank;
    }
    return int(rank);
}

std::vector<std::vector<Scalar>> coeff_rows(const std::vector<Polynomial>& ps, int len) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& p : ps) {
        std::vector<Scalar> row;
        for (int j = 0; j < len; ++j) row.push_back(p.coeff(j));
        m.push_back(std::move(row));
    }
    return m;
}

Polynomial det(std::vector<std::vector<Polynomial>> m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial s;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            sub.push_back(std::move(row));
        }
        Polynomial t = m[0][c] * det(std::move(sub));
        s = (c % 2 == 0) ? s + t : s - t;
    }
    return s;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[size_t(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[size_t(i)];
        for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

// D_k = sum over points of min order of the (k+1)-minors of the derivative matrix.
// Finite part via the gcd degree, infinity via the reversed components.
std::vector<int> minor_orders(const std::vector<Polynomial>& basis, bool at_zero_only) {
    int m = int(basis.size());
    std::vector<int> D;
    for (int k = 0; k < m; ++k) {
        std::vector<std::vector<Polynomial>> deriv(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            Polynomial p = basis[size_t(i)];
            for (int j = 0; j <= k; ++j) {
                deriv[size_t(i)].push_back(p);
                p = p.derivative();
            }
        }
        Polynomial g;
        combinations(m, k + 1, [&](const std::vector<int>& rows) {
            std::vector<std::vector<Polynomial>> sub;
            for (int r : rows) sub.push_back(deriv[size_t(r)]);
            Polynomial d = det(sub);
            if (!d.is_zero()) g = g.is_zero() ? d.monic() : gcd(g, d);
        });
        if (g.is_zero()) throw std::logic_error("degenerate basis");
        D.push_back(at_zero_only ? poly_order_at(g, SpherePoint(Scalar(0))) : g.degree());
    }
    return D;
}

std::vector<int> second_difference(const std::vector<int>& D) {
    // sigma_k = D_{k+1} - 2 D_k + D_{k-1}, D_{-1} = 0.
    std::vector<int> s;
    for (size_t k = 0; k + 1 < D.size(); ++k) {
        int prev = k == 0 ? 0 : D[k - 1];
        s.push_back(D[k + 1] - 2 * D[k] + prev);
    }
    return s;
}

mpq_class qq(long a, long b = 1) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

TheoremCheck make_check(std::string id, std::string form, std::string st, mpq_class lhs, std::string rel,
                        mpq_class rhs) {
    TheoremCheck c;
    c.id = std::move(id);
    c.form = std::move(form);
    c.statement = std::move(st);
    c.lhs = ExtRational(lhs);
    c.rhs = ExtRational(rhs);
    c.relation = rel;
    int s = cmp(lhs, rhs);
    if (rel == "<=") c.pass = s <= 0;
    else if (rel == "<") c.pass = s < 0;
    else if (rel == ">=") c.pass = s >= 0;
    else c.pass = s == 0;
    c.equality = s == 0;
    return c;
}

}  // namespace

// ---- ProjectiveCurve ----

ProjectiveCurve::ProjectiveCurve(std::vector<Polynomial> comps, const Tolerances& tol) : c_(std::move(comps)) {
    if (c_.size() < 2) throw std::invalid_argument("a projective curve needs at least two components");
    if (std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_zero(); }))
        throw std::invalid_argument("all components vanish");
    if (is_exact()) {
        Polynomial g;
        for (const auto& p : c_)
            if (!p.is_zero()) g = g.is_zero() ? p.monic() : gcd(g, p);
        if (g.degree() > 0)
            for (auto& p : c_) p = divmod(p, g).first;
    } else {
        for (auto& p : c_) p = p.to_float();
        c_ = reduce_float(c_, tol);
    }
}

int ProjectiveCurve::degree() const {
    int d = 0;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

bool ProjectiveCurve::is_exact() const {
    return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_exact(); });
}

std::vector<Polynomial> ProjectiveCurve::at_infinity() const {
    std::vector<Polynomial> out;
    int d = degree();
    for (const auto& p : c_) out.push_back(p.is_zero() ? p : p.reversed(d));
    return out;
}

std::string ProjectiveCurve::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? " : " : "") << c_[i].to_string();
    os << ")";
    return os.str();
}

ProjectiveCurve curve_from_forms(const std::vector<MeromorphicForm>& phis, const Tolerances& tol) {
    bool exact = std::all_of(phis.begin(), phis.end(), [](const MeromorphicForm& w) { return w.coeff.is_exact(); });
    std::vector<Polynomial> comps;
    if (exact) {
        Polynomial L(1);
        for (const auto& w : phis)
            if (!w.is_zero()) {
                const Polynomial& d = w.coeff.den();
                L = divmod(L * d, gcd(L, d)).first;
            }
        for (const auto& w : phis)
            comps.push_back(w.is_zero() ? Polynomial() : w.coeff.num() * divmod(L, w.coeff.den()).first);
    } else {
        for (size_t i = 0; i < phis.size(); ++i) {
            Polynomial p = phis[i].coeff.num();
            for (size_t j = 0; j < phis.size(); ++j)
                if (j != i && !phis[j].is_zero()) p = p * phis[j].coeff.den();
            comps.push_back(phis[i].is_zero() ? Polynomial() : p);
        }
    }
    return ProjectiveCurve(std::move(comps), tol);
}

int matrix_rank(std::vector<std::vector<Scalar>> m, double tol) { return rank_impl(m, tol, nullptr); }

std::vector<int> span_basis(const ProjectiveCurve& f, double tol) {
    std::vector<int> basis;
    std::vector<std::vector<Scalar>> acc;
    int len = f.degree() + 1;
    for (size_t i = 0; i < f.components().size(); ++i) {
        auto rows = acc;
        rows.push_back(coeff_rows({f.components()[i]}, len)[0]);
        if (matrix_rank(rows, tol) > int(acc.size())) {
            acc = std::move(rows);
            basis.push_back(int(i));
        }
    }
    return basis;
}

int span_dimension(const ProjectiveCurve& f, double tol) {
    return matrix_rank(coeff_rows(f.components(), f.degree() + 1), tol) - 1;
}

namespace {

OrderSequence order_sequence_at(const ProjectiveCurve& f, const SpherePoint& p, double rank_tol) {
    std::vector<Polynomial> rows;
    double scale = 1.0;
    if (p.is_infinity()) {
        rows = f.at_infinity();
    } else {
        for (const auto& c : f.components()) {
            bool ex = c.is_exact() && field_compatible(c, p.value());
            rows.push_back(ex ? c.shift(p.value()) : c.to_float().shift(Scalar(p.approx())));
        }
        scale = std::max(1.0, std::abs(p.approx()));
    }
    int len = f.degree() + 1;
    auto m = coeff_rows(rows, len);
    // Taylor coefficients at a large point grow like |p|^(deg-j); rescaling columns keeps the rank
    // and balances the float rank test.
    if (scale > 1.0)
        for (auto& r : m)
            for (int j = 0; j < len; ++j)
                if (!r[size_t(j)].is_exact()) r[size_t(j)] *= Scalar(std::pow(scale, j));
    OrderSequence os{p, {}, {}};
    // delta_i are the columns where the rank of the leading block grows.
    int prev = 0;
    for (int j = 0; j < len; ++j) {
        std::vector<std::vector<Scalar>> block;
        for (const auto& r : m) block.emplace_back(r.begin(), r.begin() + j + 1);
        int rk = matrix_rank(block, rank_tol);
        if (rk > prev) os.delta.push_back(j);
        prev = rk;
    }
    for (size_t i = 0; i + 1 < os.delta.size(); ++i) os.stat_idx.push_back(os.delta[i + 1] - os.delta[i] - 1);
    return os;
}

}  // namespace

OrderSequence order_sequence(const ProjectiveCurve& f, const SpherePoint& p, const Tolerances& tol) {
    return order_sequence_at(f, p, std::max(tol.eps_res, 1e-12));
}

Polynomial wronskian(const std::vector<Polynomial>& fs) {
    std::vector<std::vector<Polynomial>> m;
    for (const auto& f : fs) {
        std::vector<Polynomial> row;
        Polynomial p = f;
        for (size_t j = 0; j < fs.size(); ++j) {
            row.push_back(p);
            p = p.derivative();
        }
        m.push_back(std::move(row));
    }
    return det(std::move(m));
}

StationaryTotals stationary_totals(const ProjectiveCurve& f, const Tolerances& tol) {
    StationaryTotals st;
    auto bi = span_basis(f);
    st.r = int(bi.size()) - 1;
    st.deg = f.degree();
    if (st.r < 1) throw std::invalid_argument("constant curve");
    std::vector<Polynomial> basis;
    for (int i : bi) basis.push_back(f.components()[size_t(i)]);

    st.sigma.assign(size_t(st.r), 0);
    Polynomial W = wronskian(basis);
    if (!W.is_exact()) W = W.trimmed(tol.eps_zero);
    std::vector<SpherePoint> cands;
    if (W.degree() > 0)
        for (Divisor dv = poly_roots(W, tol); const auto& e : dv.entries()) cands.push_back(e.point);
    cands.push_back(SpherePoint::infinity());
    // At a finite point, ord W = sum (delta_i - i) for the chosen basis. Numeric order sequences
    // are accepted only when they reproduce that multiplicity.
    Divisor wdiv;
    if (W.degree() > 0) wdiv = poly_roots(W, tol);
    for (const auto& p : cands) {
        OrderSequence os = order_sequence(f, p, tol);
        if (!p.is_exact() || (!p.is_infinity() && !f.is_exact())) {
            const int want = wdiv.at(p, tol.eps_match);
            auto weight = [&](const OrderSequence& o) {
                int w = 0;
                for (size_t i = 0; i < o.delta.size(); ++i) w += o.delta[i] - int(i);
                return w;
            };
            bool good = int(os.delta.size()) == st.r + 1 && weight(os) == want;
            for (double rt : {1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6}) {
                if (good) break;
                os = order_sequence_at(f, p, rt);
                good = int(os.delta.size()) == st.r + 1 && weight(os) == want;
            }
            if (!good) throw AnalysisError("numeric order sequence", "no consistent order sequence at " + p.to_string());
        }
        if (int(os.delta.size()) != st.r + 1) throw std::runtime_error("order sequence length mismatch at " + p.to_string());
        bool stationary = false;
        for (int i = 0; i < st.r; ++i) {
            st.sigma[size_t(i)] += os.stat_idx[size_t(i)];
            stationary = stationary || os.stat_idx[size_t(i)] > 0;
        }
        if (stationary) st.points.push_back(os);
    }

    if (f.is_exact()) {
        auto fin = second_difference(minor_orders(basis, false));
        std::vector<Polynomial> rev;
        for (const auto& p : basis) rev.push_back(p.reversed(st.deg));
        auto inf = second_difference(minor_orders(rev, true));
        st.sigma_oracle.resize(fin.size());
        for (size_t i = 0; i < fin.size(); ++i) st.sigma_oracle[i] = fin[i] + inf[i];
        st.oracle_available = true;
        st.oracle_ok = st.sigma_oracle == st.sigma;
    }

    const long G = 0;
    for (int i = 0; i < st.r; ++i) st.plucker_lhs += long(st.r - i) * st.sigma[size_t(i)];
    st.plucker_rhs = long(st.r + 1) * st.deg + long(st.r) * (st.r + 1) * (G - 1);
    st.plucker_rhs_literal = long(st.r + 1) * st.deg + long(st.r) * (st.r + 1);
    st.plucker_ok = st.plucker_lhs == st.plucker_rhs;
    return st;
}

bool general_position(const std::vector<Hyperplane>& H, int n, double tol) {
    int q = int(H.size());
    if (q == 0) return true;
    for (const auto& h : H)
        if (int(h.a.size()) != n + 1) throw std::invalid_argument("hyperplane dimension mismatch");
    int s = std::min(q, n + 1);
    bool ok = true;
    combinations(q, s, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::vector<std::vector<Scalar>> m;
        for (int i : idx) m.push_back(H[size_t(i)].a);
        if (matrix_rank(m, tol) < s) ok = false;
    });
    return ok;
}

HyperplaneRamification hyperplane_ramification(const ProjectiveCurve& f, const Hyperplane& H,
                                               const PuncturedSphere& dom, const Tolerances& tol) {
    if (H.a.size() != f.components().size()) throw std::invalid_argument("hyperplane dimension mismatch");
    Polynomial L;
    for (size_t i = 0; i < H.a.size(); ++i) L = L + f.components()[i].scaled(H.a[i]);
    if (!L.is_exact()) L = L.trimmed(tol.eps_zero);
    if (L.is_zero()) throw std::domain_error("curve lies in H");
    HyperplaneRamification hr;
    if (L.degree() > 0) hr.zeros.add(poly_roots(L, tol));
    if (f.degree() > L.degree()) hr.zeros.add(SpherePoint::infinity(), f.degree() - L.degree());
    hr.zeros.sort();
    for (const auto& e : hr.zeros.entries()) {
        if (dom.is_puncture(e.point, tol.eps_match)) continue;
        hr.nu = hr.omitted ? e.mult : std::min(hr.nu, e.mult);
        hr.omitted = false;
    }
    return hr;
}

TheoremReport smt3_check(const ProjectiveCurve& f, const std::vector<Hyperplane>& H, const std::vector<SpherePoint>& E,
                         const Tolerances& tol) {
    const int N = f.ambient();
    const int r = span_dimension(f);
    const int q = int(H.size());
    const int deg = f.degree();
    const long G = 0;
    if (r < 1) throw std::invalid_argument("constant curve");
    if (!general_position(H, N)) throw std::invalid_argument("hyperplanes not in general position");
    PuncturedSphere Edom{E, 0};
    long S = 0;
    Divisor hit;
    for (const auto& h : H) {
        auto hr = hyperplane_ramification(f, h, Edom, tol);
        for (const auto& e : hr.zeros.entries()) {
            hit.add(e.point, 1);
            if (!Edom.is_puncture(e.point, tol.eps_match)) S += std::min(r, e.mult);
        }
    }
    TheoremReport rep;
    rep.kind = "smt";
    rep.facts = {{"n", std::to_string(N)}, {"r", std::to_string(r)}, {"q", std::to_string(q)},
                 {"deg", std::to_string(deg)}, {"#E", std::to_string(E.size())}};
    mpq_class lhs(long(q - 2 * N + r - 1) * deg);
    mpq_class half = qq(long(r) * (2 * N - r + 1), 2);
    mpq_class rhs = mpq_class(S) + half * mpq_class(2 * (G - 1) + long(E.size()));
    rep.checks.push_back(make_check("smt.subspace", "raw",
                                    "(q-2n+r-1)deg <= sum min(r,v) + r(2n-r+1)/2 (2(G-1)+#E)", lhs, "<=", rhs));
    TheoremCheck lit = make_check("smt.subspace.literal", "literal",
                                  "same with 2(G+1) in place of 2(G-1)", lhs, "<=",
                                  mpq_class(S) + half * mpq_class(2 * (G + 1) + long(E.size())));
    lit.applicable = false;
    lit.note = "literal reading, logged only";
    rep.checks.push_back(lit);
    if (r == N) {
        mpq_class l1(long(q - (N + 1)) * deg);
        mpq_class r1 = qq(long(N) * (N + 1), 2) * mpq_class(2 * (G - 1) + long(hit.entries().size()));
        rep.checks.push_back(make_check("smt.nondegenerate", "raw", "(q-n-1)deg <= n(n+1)/2 (2(G-1)+#E_all)", l1, "<=",
                                        r1));
    }
    return rep;
}

TheoremReport verify_rn(const WDataN& d, const std::vector<Hyperplane>& H, const Tolerances& tol) {
    require_genus0(WData(d));
    ProjectiveCurve f = curve_from_forms(d.phis, tol);
    const int n = int(d.phis.size());
    const int N = n - 1;
    const int r = span_dimension(f);
    const int deg = f.degree();
    const int G = d.domain.genus, k = d.domain.k();
    Classification cls = classify(WData(d), tol);
    bool complete = cls.tag == SurfaceClass::algebraic || cls.tag == SurfaceClass::pseudo_algebraic;
    bool algebraic = cls.tag == SurfaceClass::algebraic;
    RatioR R = ratio_r4(deg, G, k);

    TheoremReport rep;
    rep.kind = "rn";
    rep.non_hyperbolic = R.non_hyperbolic();
    bool gp = general_position(H, N);
    rep.facts = {{"n", std::to_string(n)}, {"r", std::to_string(r)},   {"d", std::to_string(deg)},
                 {"k", std::to_string(k)}, {"R", R.to_string()},       {"class", class_name(cls.tag)},
                 {"general_position", gp ? "true" : "false"}};
    if (!gp) {
        rep.warnings.push_back("hyperplanes not in general position: estimates not evaluated");
        return rep;
    }
    if (r < 1) throw AnalysisError("flat", "constant Gauss map");

    mpq_class sum(0);
    int omitted = 0;
    std::ostringstream nus;
    for (size_t j = 0; j < H.size(); ++j) {
        auto hr = hyperplane_ramification(f, H[j], d.domain, tol);
        if (hr.omitted) {
            sum += 1;
            ++omitted;
            nus << (j ? "," : "") << "inf";
        } else {
            sum += mpq_class(1) - qq(r, hr.nu);
            nus << (j ? "," : "") << hr.nu;
        }
    }
    sum.canonicalize();
    rep.facts.push_back({"nu", nus.str()});
    rep.facts.push_back({"omitted", std::to_string(omitted)});
    rep.facts.push_back({"sum", sum.get_str()});

    const long c = 2L * n - r - 1;
    mpq_class rhs = mpq_class(c) * (mpq_class(1) + mpq_class(r) * R.inverse() / 2);
    rhs.canonicalize();
    rep.checks.push_back(make_check("rn.ramification.raw", "raw", "sum(1-r/nu) <= (2n-r-1)(1+r(2G-2+k)/(2d))", sum,
                                    "<=", rhs));
    TheoremCheck rc = make_check("rn.ramification.R", "R", "sum(1-r/nu) <= (2n-r-1)(1+r/(2R))", sum, "<=", rhs);
    if (R.non_hyperbolic()) {
        rc.applicable = false;
        rc.pass = true;
        rc.equality = false;
        rc.note = "non-hyperbolic";
    }
    rep.checks.push_back(rc);

    TheoremCheck cap = make_check("rn.ramification.cap", "audit", algebraic ? "sum < (2n-r-1)(r+2)/2" : "sum <= (2n-r-1)(r+2)/2",
                                  sum, algebraic ? "<" : "<=", qq(c * (r + 2), 2));
    TheoremCheck om = make_check("rn.omitted-count", "audit",
                                 algebraic ? "omitted <= (n-1)(n+2)/2" : "omitted <= n(n+1)/2", qq(omitted), "<=",
                                 algebraic ? qq(long(n - 1) * (n + 2), 2) : qq(long(n) * (n + 1), 2));
    TheoremCheck lo = make_check("rn.ratio-lower", "R", "R >= 1", R.hyperbolic() ? mpq_class(deg) / R.denominator : mpq_class(0),
                                 ">=", qq(1));
    for (TheoremCheck* t : {&cap, &om, &lo}) {
        bool app = complete && (t != &lo || R.hyperbolic());
        if (!app) {
            t->applicable = false;
            t->pass = true;
            t->equality = false;
            t->note = complete ? "R-form needs 2G-2+k > 0" : "not complete";
        }
    }
    rep.checks.push_back(cap);
    rep.checks.push_back(om);
    rep.checks.push_back(lo);
    return rep;
}

// ---- Fujimoto construction ----

namespace {

std::vector<Polynomial> fujimoto_h(int k) {
    Polynomial z = Polynomial::z();
    std::vector<Polynomial> h;
    for (int l = 0; l < k; ++l) {
        Polynomial a = Polynomial::monomial(Scalar(1), l), b = Polynomial::monomial(Scalar(1), 2 * k - l);
        h.push_back(a + b);
        h.push_back((a - b).scaled(Scalar::i()));
    }
    Scalar c = Scalar(2) * Scalar::i() * Scalar(ExactComplex::sqrt_rational(mpq_class(k)));
    h.push_back(Polynomial::monomial(c, k));
    return h;
}

// Coordinates of a polynomial of degree <= 2k in the basis h_1..h_n.
std::vector<Scalar> to_h_basis(const Polynomial& f, int k) {
    std::vector<Scalar> c;
    Scalar half = Scalar(mpq_class(1, 2));
    for (int l = 0; l < k; ++l) {
        Scalar el = f.coeff(l), eh = f.coeff(2 * k - l);
        c.push_back((el + eh) * half);
        c.push_back((eh - el) * Scalar::i() * half);
    }
    Scalar s = Scalar(2) * Scalar::i() * Scalar(ExactComplex::sqrt_rational(mpq_class(k)));
    c.push_back(f.coeff(k) / s);
    return c;
}

}  // namespace

FujimotoData fujimoto_construction(int n, std::uint64_t seed) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("fujimoto construction needs odd n >= 3");
    const int k = (n - 1) / 2;
    FujimotoData fd;
    fd.n = n;
    auto h = fujimoto_h(k);

    Polynomial s;
    for (const auto& p : h) s = s + p * p;
    fd.null_certified = s.is_zero();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::set<int> used{0};
        std::vector<int> vals;
        while (int(vals.size()) < 2 * k) {
            int v = pick(rng);
            if (used.insert(v).second) vals.push_back(v);
        }
        fd.a = {Scalar(0)};
        fd.b.clear();
        for (int j = 0; j < k; ++j) {
            fd.a.push_back(Scalar(long(vals[size_t(2 * j)])));
            fd.b.push_back(Scalar(long(vals[size_t(2 * j + 1)])));
        }
        fd.sections.clear();
        fd.family.clear();
        fd.hyperplanes.clear();
        for (int t = 0; t <= k; ++t)
            for (int i = 1; i <= n; ++i) {
                Polynomial f(1);
                for (int e = 0; e < n - i; ++e) f = f * linear(fd.a[size_t(t)]);
                if (t > 0)
                    for (int e = 0; e < i - 1; ++e) f = f * linear(fd.b[size_t(t - 1)]);
                fd.sections.push_back(f);
                fd.family.push_back(t);
                fd.hyperplanes.push_back({to_h_basis(f, k), "f" + std::to_string(t * n + i)});
            }
        if (general_position(fd.hyperplanes, n - 1)) {
            fd.general_position = true;
            break;
        }
    }
    if (!fd.general_position) throw std::runtime_error("no parameters in general position found");

    for (size_t i = 0; i < fd.sections.size(); ++i) {
        Polynomial L;
        for (size_t j = 0; j < h.size(); ++j) L = L + h[j].scaled(fd.hyperplanes[i].a[j]);
        if (!L.equals(fd.sections[i])) throw std::logic_error("basis change failed");
    }

    Polynomial den(1);
    PuncturedSphere dom;
    for (int j = 0; j < k; ++j) {
        den = den * linear(fd.a[size_t(j + 1)]) * linear(fd.b[size_t(j)]);
        dom.punctures.push_back(SpherePoint(fd.a[size_t(j + 1)]));
        dom.punctures.push_back(SpherePoint(fd.b[size_t(j)]));
    }
    dom.punctures.push_back(SpherePoint::infinity());
    std::sort(dom.punctures.begin(), dom.punctures.end());
    fd.data.domain = dom;
    for (const auto& p : h) fd.data.phis.push_back(MeromorphicForm(RationalFunction(p, den)));
    return fd;
}

}  // namespace minsurf
