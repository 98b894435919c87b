#include "minsurf/gauss.hpp"

#include <algorithm>

namespace minsurf {

int degree(const RationalFunction& g) {
    if (g.is_constant()) throw AnalysisError("flat", "constant Gauss map");
    return g.degree();
}

Divisor preimages(const RationalFunction& g, const SpherePoint& a, const Tolerances& tol) {
    Divisor out;
    const Polynomial& N = g.num();
    const Polynomial& D = g.den();
    if (a.is_infinity()) {
        if (D.degree() > 0) out.add(poly_roots(D, tol), 1);
        if (N.degree() > D.degree()) out.add(SpherePoint::infinity(), N.degree() - D.degree());
    } else {
        Polynomial P = N - D.scaled(a.value());
        if (!P.is_exact()) P = P.trimmed(tol.eps_zero);
        if (P.is_zero()) throw AnalysisError("flat", "g is constant");
        if (P.degree() > 0) out.add(poly_roots(P, tol), 1);
        int e = D.degree() - P.degree();
        if (e > 0) out.add(SpherePoint::infinity(), e);
    }
    out.sort();
    return out;
}

Divisor branch_divisor(const RationalFunction& g, const Tolerances& tol) {
    int d = degree(g);
    (void)d;
    const Polynomial& N = g.num();
    const Polynomial& D = g.den();
    Polynomial W = N.derivative() * D - N * D.derivative();
    if (!W.is_exact()) W = W.trimmed(tol.eps_zero);
    Divisor out;
    if (W.degree() > 0) out.add(poly_roots(W, tol), 1);
    int e;
    if (N.degree() > D.degree()) {
        e = N.degree() - D.degree();
    } else {
        Scalar c = N.degree() == D.degree() ? N.lead() / D.lead() : Scalar(0);
        Polynomial P = N - D.scaled(c);
        if (!P.is_exact()) P = P.trimmed(tol.eps_zero);
        e = D.degree() - P.degree();
    }
    if (e > 1) out.add(SpherePoint::infinity(), e - 1);
    out.sort();
    return out;
}

std::vector<SpherePoint> exceptional_values(const RationalFunction& g, const PuncturedSphere& dom,
                                            const Tolerances& tol) {
    degree(g);
    std::vector<SpherePoint> cands;
    for (const auto& p : dom.punctures) {
        SpherePoint v = g(p);
        bool seen = std::any_of(cands.begin(), cands.end(), [&](const SpherePoint& c) { return c.matches(v, tol.eps_match); });
        if (!seen) cands.push_back(v);
    }
    std::vector<SpherePoint> out;
    for (const auto& c : cands) {
        Divisor f = preimages(g, c, tol);
        bool all = std::all_of(f.entries().begin(), f.entries().end(),
                               [&](const Divisor::Entry& e) { return dom.is_puncture(e.point, tol.eps_match); });
        if (all) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RamificationProfile ramification_profile(const RationalFunction& g, const PuncturedSphere& dom, const Tolerances& tol) {
    if (dom.genus != 0) throw AnalysisError("unsupported genus", "ramification analysis requires genus 0");
    RamificationProfile rp;
    rp.d = degree(g);
    rp.G = dom.genus;
    rp.k = dom.k();
    rp.exceptional = exceptional_values(g, dom, tol);
    rp.D_g = int(rp.exceptional.size());
    rp.branch = branch_divisor(g, tol);
    rp.n_g = rp.branch.total();

    std::vector<SpherePoint> values;
    for (const auto& e : rp.branch.entries()) {
        SpherePoint v = g(e.point);
        bool seen = std::any_of(values.begin(), values.end(), [&](const SpherePoint& c) { return c.matches(v, tol.eps_match); });
        if (!seen) values.push_back(v);
    }
    std::sort(values.begin(), values.end());

    rp.nu_g = rp.D_g;
    for (const auto& b : values) {
        bool exc = std::any_of(rp.exceptional.begin(), rp.exceptional.end(),
                               [&](const SpherePoint& a) { return a.matches(b, tol.eps_match); });
        Divisor fib = preimages(g, b, tol);
        if (exc) {
            for (const auto& e : fib.entries()) rp.n0 += e.mult - 1;
            continue;
        }
        CriticalValue cv{b, fib, 0, 0, 0, false, true};
        int nu = 0;
        for (const auto& e : fib.entries()) {
            if (dom.is_puncture(e.point, tol.eps_match)) continue;
            ++cv.points_in_M;
            nu = nu == 0 ? e.mult : std::min(nu, e.mult);
            cv.branching_in_M += e.mult - 1;
            if (e.mult >= 2)
                cv.branch_in_M = true;
            else
                cv.totally_ramified = false;
        }
        cv.nu = nu;
        if (cv.points_in_M == 0) cv.totally_ramified = false;
        if (cv.branch_in_M) {
            ++rp.l;
            rp.n_b += cv.branching_in_M;
        }
        if (cv.totally_ramified) {
            ++rp.l0;
            rp.nu_g += mpq_class(1) - mpq_class(1, nu);
        }
        rp.critical.push_back(cv);
    }
    rp.nu_g.canonicalize();
    return rp;
}

RamificationProfile profile_r3(const WData3& d, const Tolerances& tol) {
    return ramification_profile(d.g, d.domain, tol);
}

ProfileR4 profile_r4(const WData4& d, const Tolerances& tol) {
    ProfileR4 p;
    p.g1_constant = d.g1.is_constant();
    p.g2_constant = d.g2.is_constant();
    if (p.g1_constant && p.g2_constant) throw AnalysisError("flat", "both Gauss map components are constant");
    if (!p.g1_constant) p.p1 = ramification_profile(d.g1, d.domain, tol);
    if (!p.g2_constant) p.p2 = ramification_profile(d.g2, d.domain, tol);
    return p;
}

}  // namespace minsurf
