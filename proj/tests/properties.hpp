#pragma once

// Randomized property suites shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"

namespace props {

using namespace minsurf;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return cases > 0 && failures == 0; }
    void fail(const std::string& why) {
        if (failures++ == 0) first_failure = why;
    }
    std::string summary() const {
        std::ostringstream os;
        os << cases - failures << "/" << cases;
        if (failures) os << " (first failure: " << first_failure << ")";
        return os.str();
    }
};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Scalar gaussian(long r = 4) { return Scalar(ExactComplex(mpq_class(integer(-r, r)), mpq_class(integer(-r, r)))); }
    Scalar nonzero_gaussian(long r = 4) {
        for (;;) {
            Scalar s = gaussian(r);
            if (!s.is_zero()) return s;
        }
    }

    Polynomial poly(int deg, long r = 4) {
        std::vector<Scalar> c;
        for (int i = 0; i < deg; ++i) c.push_back(gaussian(r));
        c.push_back(nonzero_gaussian(r));
        return Polynomial(c);
    }

    /// Product of (z - r_i) over distinct small integer roots, times a constant.
    Polynomial rational_roots(int deg, std::vector<long>& used) {
        Polynomial p(nonzero_gaussian(3));
        for (int i = 0; i < deg; ++i) {
            long v;
            do {
                v = integer(-6, 6);
            } while (std::find(used.begin(), used.end(), v) != used.end());
            used.push_back(v);
            p = p * (Polynomial::z() - Polynomial(v));
        }
        return p;
    }

    /// Nonconstant rational function with total degree at most maxdeg.
    RationalFunction rational(int maxdeg) {
        for (;;) {
            int a = int(integer(0, maxdeg)), b = int(integer(0, maxdeg));
            RationalFunction f(poly(a), poly(b));
            if (!f.is_constant() && f.degree() <= maxdeg) return f;
        }
    }

private:
    std::mt19937_64 rng_;
};

inline std::string pts_string(const std::vector<SpherePoint>& v) {
    std::string s;
    for (const auto& p : v) s += (s.empty() ? "" : ",") + p.to_string();
    return s;
}

/// (a) divisors of functions sum to 0 and of forms to -2.
inline Outcome divisor_degrees(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        RationalFunction f = g.rational(5);
        ++o.cases;
        int tf = divisor_of_function(f).total();
        int tw = divisor_of_form(MeromorphicForm(f)).total();
        if (tf != 0 || tw != -2) o.fail(f.to_string() + ": " + std::to_string(tf) + ", " + std::to_string(tw));
    }
    return o;
}

/// (b) total branching 2(d-1).
inline Outcome riemann_hurwitz(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        RationalFunction f = g.rational(6);
        ++o.cases;
        int b = branch_divisor(f).total();
        if (b != 2 * (f.degree() - 1)) o.fail(f.to_string() + ": n_g = " + std::to_string(b));
    }
    return o;
}

/// g with rational fibres over 0 and infinity, and a domain built from them.
struct ProfileCase {
    RationalFunction g;
    PuncturedSphere dom;
};

inline ProfileCase profile_case(Gen& g, bool need_zero_inf) {
    std::vector<long> used;
    int a = int(g.integer(1, 3)), b = int(g.integer(0, 3));
    Polynomial N = g.rational_roots(a, used);
    Polynomial D = g.rational_roots(b, used);
    ProfileCase pc{RationalFunction(N, D), {}};
    auto add = [&](const SpherePoint& p) {
        for (const auto& q : pc.dom.punctures)
            if (q.matches(p, 1e-12)) return;
        pc.dom.punctures.push_back(p);
    };
    if (need_zero_inf) {
        add(SpherePoint(Scalar(0)));
        add(SpherePoint::infinity());
    }
    if (g.coin())
        for (Divisor dv = preimages(pc.g, SpherePoint(Scalar(0))); const auto& e : dv.entries()) add(e.point);
    if (g.coin())
        for (Divisor dv = preimages(pc.g, SpherePoint::infinity()); const auto& e : dv.entries()) add(e.point);
    int extra = int(g.integer(0, 2));
    for (int i = 0; i < extra; ++i) add(SpherePoint(Scalar(mpq_class(g.integer(-20, 20), 7))));
    if (pc.dom.punctures.empty()) add(SpherePoint::infinity());
    return pc;
}

/// (c) (D_g, nu_g) unchanged by post-composition with a Moebius map.
inline Outcome moebius_invariance(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    while (o.cases < n) {
        ProfileCase pc = profile_case(g, false);
        long a = g.integer(-3, 3), b = g.integer(-3, 3), c = g.integer(-3, 3), d = g.integer(-3, 3);
        if (a * d - b * c == 0) continue;
        ++o.cases;
        RationalFunction h = moebius_postcompose(pc.g, Scalar(a), Scalar(b), Scalar(c), Scalar(d));
        auto p1 = ramification_profile(pc.g, pc.dom);
        auto p2 = ramification_profile(h, pc.dom);
        if (p1.D_g != p2.D_g || p1.nu_g != p2.nu_g)
            o.fail(pc.g.to_string() + " on " + pts_string(pc.dom.punctures) + ": (" + std::to_string(p1.D_g) + "," +
                   p1.nu_g.get_str() + ") vs (" + std::to_string(p2.D_g) + "," + p2.nu_g.get_str() + ")");
    }
    return o;
}

/// (d) R, D_g and nu_g unchanged by pulling back along z^m.
inline Outcome covering_invariance(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        ProfileCase pc = profile_case(g, true);
        WData3 d{pc.dom, MeromorphicForm(RationalFunction(1) / RationalFunction::z()), pc.g};
        auto p0 = profile_r3(d);
        RatioR R0 = ratio_r3(p0.d, 0, p0.k);
        for (int m : {2, 3}) {
            ++o.cases;
            WData3 e = std::get<WData3>(pullback_covering(WData(d), m));
            auto p1 = profile_r3(e);
            RatioR R1 = ratio_r3(p1.d, 0, p1.k);
            bool sameR = R0.non_hyperbolic() == R1.non_hyperbolic() && R0.inverse() == R1.inverse();
            if (p0.D_g != p1.D_g || p0.nu_g != p1.nu_g || !sameR)
                o.fail(pc.g.to_string() + " m=" + std::to_string(m) + ": D " + std::to_string(p0.D_g) + "->" +
                       std::to_string(p1.D_g) + ", nu " + p0.nu_g.get_str() + "->" + p1.nu_g.get_str() + ", R " +
                       R0.to_string() + "->" + R1.to_string());
        }
    }
    return o;
}

/// Random polynomial curve with N+1 components of degree <= maxdeg.
inline ProjectiveCurve random_curve(Gen& g, int N, int maxdeg) {
    for (;;) {
        std::vector<Polynomial> c;
        for (int i = 0; i <= N; ++i) {
            if (g.integer(0, 4) == 0)
                c.push_back(Polynomial::monomial(Scalar(1), int(g.integer(0, maxdeg))));
            else
                c.push_back(g.poly(int(g.integer(0, maxdeg)), 3));
        }
        ProjectiveCurve f(c);
        if (f.degree() >= 1 && span_dimension(f) >= 1) return f;
    }
}

/// (e) sum (r-i) sigma_i = (r+1) deg + r(r+1)(G-1) with G = 0.
inline Outcome plucker(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        int N = int(g.integer(1, 4));
        ProjectiveCurve f = random_curve(g, N, 8);
        ++o.cases;
        StationaryTotals st = stationary_totals(f);
        if (!st.plucker_ok || (st.oracle_available && !st.oracle_ok))
            o.fail(f.to_string() + ": " + std::to_string(st.plucker_lhs) + " vs " + std::to_string(st.plucker_rhs));
    }
    return o;
}

/// (f) residues of a rational form sum to zero.
inline Outcome residue_theorem(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    for (int i = 0; i < n; ++i) {
        RationalFunction f = g.rational(5);
        ++o.cases;
        Scalar s = residue_sum(MeromorphicForm(f));
        if (!s.is_zero(1e-8)) o.fail(f.to_string() + ": sum " + s.to_string());
    }
    return o;
}

/// (g) K <= 0 and agreement of the closed form with -Delta log(lambda)/lambda^2.
inline Outcome curvature_checks(int n, std::uint64_t seed) {
    Gen g(seed);
    Outcome o;
    std::vector<WData> data;
    for (const char* name : {"enneper", "catenoid", "jorge-meeks", "voss", "miyaoka-sato", "mo-osserman-3",
                             "mo-osserman-2", "cubic-pole-r4", "fujimoto", "covering"})
        data.push_back(*catalog_get(name).data);
    for (int i = 0; i < n; ++i) {
        const WData& d = data[size_t(i) % data.size()];
        cplx z(double(g.integer(-150, 150)) / 100.0 + 0.003, double(g.integer(-150, 150)) / 100.0 + 0.007);
        double dist = 1.0;
        for (const auto& p : domain_of(d).punctures)
            if (!p.is_infinity()) dist = std::min(dist, std::abs(p.approx() - z));
        if (dist < 0.15) continue;
        ++o.cases;
        double K = curvature(d, z);
        // truncation error of the 5-point Laplacian grows like (step/dist)^2 near an end
        double Kfd = curvature_fd(d, z, 1e-3 * dist);
        double scale = std::max({std::abs(K), std::abs(Kfd), 1e-8});
        double rel = std::abs(K - Kfd) / scale;
        double closed = K;
        if (auto* a = std::get_if<WData3>(&d)) closed = curvature_r3_formula(*a, z);
        if (auto* b = std::get_if<WData4>(&d)) closed = curvature_r4_formula(*b, z);
        double rel2 = std::abs(K - closed) / scale;
        if (K > 1e-12 || rel > 1e-4 || rel2 > 1e-9) {
            std::ostringstream os;
            os << kind_name(d) << " at " << z << ": K=" << K << " fd=" << Kfd << " closed=" << closed;
            o.fail(os.str());
        }
    }
    return o;
}

/// Random hyperplanes in general position in P^N.
inline std::vector<Hyperplane> random_arrangement(Gen& g, int N, int q) {
    for (;;) {
        std::vector<Hyperplane> H;
        for (int j = 0; j < q; ++j) {
            Hyperplane h;
            for (int i = 0; i <= N; ++i) h.a.push_back(Scalar(g.integer(-5, 5)));
            h.label = "H" + std::to_string(j + 1);
            H.push_back(h);
        }
        if (general_position(H, N)) return H;
    }
}

/// SMT-type inequality on random curve / arrangement / E triples.
struct SmtOutcome {
    Outcome corrected;
    int literal_violations = 0;
};

inline SmtOutcome smt_triples(int n, std::uint64_t seed) {
    Gen g(seed);
    SmtOutcome out;
    while (out.corrected.cases < n) {
        int N = int(g.integer(1, 3));
        ProjectiveCurve f = random_curve(g, N, 4);
        int q = int(g.integer(N + 1, 2 * N + 3));
        auto H = random_arrangement(g, N, q);
        bool inside = false;
        std::vector<SpherePoint> E;
        if (g.coin()) E.push_back(SpherePoint::infinity());
        // pick some zeros of the first hyperplane as exceptional points
        try {
            auto hr = hyperplane_ramification(f, H[0], PuncturedSphere{}, tolerances());
            for (const auto& e : hr.zeros.entries())
                if (g.coin()) {
                    bool dup = false;
                    for (const auto& x : E) dup = dup || x.matches(e.point, 1e-9);
                    if (!dup) E.push_back(e.point);
                }
        } catch (const std::domain_error&) {
            inside = true;
        }
        if (inside) continue;
        ++out.corrected.cases;
        try {
            TheoremReport r = smt3_check(f, H, E);
            bool ok = r.get("smt.subspace").pass && (!r.has("smt.nondegenerate") || r.get("smt.nondegenerate").pass);
            if (!ok)
                out.corrected.fail(f.to_string() + " with " + std::to_string(q) + " hyperplanes: " +
                                   r.get("smt.subspace").lhs.to_string() + " vs " + r.get("smt.subspace").rhs.to_string());
            if (!r.get("smt.subspace.literal").pass) ++out.literal_violations;
        } catch (const std::domain_error&) {
            --out.corrected.cases;
        }
    }
    return out;
}

}  // namespace props
