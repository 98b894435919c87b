#include "minsurf/periods.hpp"

#include <cmath>

namespace minsurf {

namespace {

// Coefficient of t^{k-1} in A(t)/B(t) with B(0) != 0.
Scalar series_coeff(const Polynomial& A, const Polynomial& B, int k) {
    std::vector<Scalar> q;
    Scalar b0inv = Scalar(1) / B.coeff(0);
    for (int n = 0; n <= k; ++n) {
        Scalar s = A.coeff(n);
        for (int j = 1; j <= n; ++j) s -= B.coeff(j) * q[size_t(n - j)];
        q.push_back(s * b0inv);
    }
    return q[size_t(k)];
}

// Exact residue of f(z)dz at a finite exact point.
Scalar exact_residue(const RationalFunction& f, const Scalar& p) {
    Polynomial lin(std::vector<Scalar>{-p, Scalar(1)});
    Polynomial D = f.den();
    int k = 0;
    while (D.degree() >= 1 && D(p).is_zero()) {
        D = divmod(D, lin).first;
        ++k;
    }
    if (k == 0) return Scalar(0);
    return series_coeff(f.num().shift(p), D.shift(p), k - 1);
}

double nearest_other_pole(const RationalFunction& f, cplx p, double eps) {
    double best = INFINITY;
    if (f.den().degree() <= 0) return best;
    for (Divisor dv = poly_roots(f.den().to_float()); const auto& e : dv.entries()) {
        double dist = std::abs(e.point.approx() - p);
        if (dist > eps * std::max(1.0, std::abs(p))) best = std::min(best, dist);
    }
    return best;
}

cplx circle_integral(const RationalFunction& f, cplx p, double r) {
    auto num = f.num().numeric(), den = f.den().numeric();
    auto ev = [&](cplx z) {
        cplx a(0.0), b(0.0);
        for (auto it = num.rbegin(); it != num.rend(); ++it) a = a * z + *it;
        for (auto it = den.rbegin(); it != den.rend(); ++it) b = b * z + *it;
        return a / b;
    };
    cplx prev(NAN, NAN);
    for (int n = 32; n <= (1 << 18); n *= 2) {
        cplx s(0.0);
        for (int j = 0; j < n; ++j) {
            cplx e = std::polar(r, 2.0 * M_PI * (j + 0.5) / n);
            s += ev(p + e) * e;
        }
        s /= double(n);
        if (std::abs(s - prev) <= 1e-14 * std::max(1.0, std::abs(s))) return s;
        prev = s;
    }
    return prev;
}

}  // namespace

Scalar residue(const MeromorphicForm& w, const SpherePoint& p, const Tolerances& tol) {
    if (w.is_zero()) return Scalar(0);
    if (w.coeff.is_exact() && p.is_exact()) {
        if (p.is_infinity()) return exact_residue(w.chart_at_infinity(), Scalar(0));
        if (field_compatible(w.coeff.num(), p.value()) && field_compatible(w.coeff.den(), p.value()))
            return exact_residue(w.coeff, p.value());
    }
    return Scalar(residue_quadrature(w, p, tol));
}

cplx residue_quadrature(const MeromorphicForm& w, const SpherePoint& p, const Tolerances& tol) {
    if (w.is_zero()) return 0.0;
    RationalFunction f = p.is_infinity() ? w.chart_at_infinity() : w.coeff;
    cplx c = p.is_infinity() ? cplx(0.0) : p.approx();
    double d = nearest_other_pole(f.to_float(), c, tol.eps_match);
    if (d <= tol.eps_match * std::max(1.0, std::abs(c)) * 10.0)
        throw std::domain_error("residue at an accumulation of merged poles near " + p.to_string());
    double r = std::isfinite(d) ? 0.5 * d : 0.5 * std::max(1.0, std::abs(c));
    return circle_integral(f.to_float(), c, r);
}

Scalar residue_sum(const MeromorphicForm& w, const Tolerances& tol) {
    Scalar s(0);
    if (w.is_zero()) return s;
    if (w.coeff.den().degree() > 0)
        for (Divisor dv = poly_roots(w.coeff.den(), tol); const auto& e : dv.entries()) s += residue(w, e.point, tol);
    s += residue(w, SpherePoint::infinity(), tol);
    return s;
}

PeriodReport period_condition(const WData& d, const Tolerances& tol) {
    require_genus0(d);
    PeriodReport rep;
    auto phis = forms(d);
    for (const auto& p : domain_of(d).punctures) {
        bool all = true;
        for (size_t i = 0; i < phis.size(); ++i) {
            PeriodEntry e;
            e.puncture = p;
            e.form = int(i);
            e.residue = residue(phis[i], p, tol);
            e.real_period = -2.0 * M_PI * e.residue.value().imag();
            if (e.residue.is_exact()) {
                e.ok = e.residue.exact().imag_part().is_zero();
            } else {
                rep.exact = false;
                double scale = std::max(1.0, e.residue.abs());
                e.ok = std::abs(e.real_period) <= tol.eps_per * scale * 2.0 * M_PI;
            }
            all = all && e.ok;
            rep.entries.push_back(e);
        }
        rep.puncture_ok.push_back(all);
        rep.pass = rep.pass && all;
    }
    return rep;
}

std::string class_name(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::flat: return "flat";
        case SurfaceClass::not_complete: return "not complete";
        case SurfaceClass::algebraic: return "algebraic";
        case SurfaceClass::pseudo_algebraic: return "pseudo-algebraic";
    }
    return "?";
}

Classification classify(const WData& d, const Tolerances& tol) {
    require_genus0(d);
    Classification c;
    c.ends = end_orders(d, tol);
    c.periods = period_condition(d, tol);
    if (is_flat(d))
        c.tag = SurfaceClass::flat;
    else if (!c.ends.complete)
        c.tag = SurfaceClass::not_complete;
    else if (c.periods.pass)
        c.tag = SurfaceClass::algebraic;
    else
        c.tag = SurfaceClass::pseudo_algebraic;
    return c;
}

}  // namespace minsurf
