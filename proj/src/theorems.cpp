#include "minsurf/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minsurf {

// ---- ExtRational / RatioR ----

double ExtRational::to_double() const { return infinite ? INFINITY : value.get_d(); }

std::string ExtRational::to_string() const { return infinite ? "inf" : value.get_str(); }

int compare(const ExtRational& a, const ExtRational& b) {
    if (a.infinite || b.infinite) return int(a.infinite) - int(b.infinite);
    return cmp(a.value, b.value) < 0 ? -1 : (cmp(a.value, b.value) > 0 ? 1 : 0);
}

ExtRational RatioR::value() const {
    if (sgn(denominator) == 0) return ExtRational::inf();
    return ExtRational(mpq_class(d) / denominator);
}

mpq_class RatioR::inverse() const {
    mpq_class r = denominator / mpq_class(d);
    r.canonicalize();
    return r;
}

std::string RatioR::to_string() const {
    if (non_hyperbolic()) return "non-hyperbolic";
    return value().to_string();
}

RatioR ratio_r3(int d, int G, int k) { return RatioR{d, mpq_class(G - 1) + mpq_class(k, 2)}; }
RatioR ratio_r4(int d, int G, int k) { return RatioR{d, mpq_class(2 * G - 2 + k)}; }

// ---- reports ----

bool TheoremReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return !c.applicable || c.pass; });
}

const TheoremCheck& TheoremReport::get(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return c;
    throw std::out_of_range("no check " + id);
}

bool TheoremReport::has(const std::string& id) const {
    return std::any_of(checks.begin(), checks.end(), [&](const TheoremCheck& c) { return c.id == id; });
}

std::string TheoremReport::fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
        if (k == key) return v;
    return "";
}

namespace {

TheoremCheck check(std::string id, std::string form, std::string statement, ExtRational lhs, std::string rel,
                   ExtRational rhs) {
    TheoremCheck c;
    c.id = std::move(id);
    c.form = std::move(form);
    c.statement = std::move(statement);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.relation = std::move(rel);
    int s = compare(c.lhs, c.rhs);
    if (c.relation == "<=") c.pass = s <= 0;
    else if (c.relation == "<") c.pass = s < 0;
    else if (c.relation == ">=") c.pass = s >= 0;
    else if (c.relation == ">") c.pass = s > 0;
    else c.pass = s == 0;
    c.equality = s == 0;
    return c;
}

TheoremCheck inapplicable(TheoremCheck c, std::string why) {
    c.applicable = false;
    c.pass = true;
    c.equality = false;
    c.note = std::move(why);
    return c;
}

mpq_class q(long a, long b = 1) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

bool complete_of(const Classification& c) {
    return c.tag == SurfaceClass::algebraic || c.tag == SurfaceClass::pseudo_algebraic;
}

std::vector<SpherePoint> in_M(const Divisor& f, const PuncturedSphere& dom, double eps) {
    std::vector<SpherePoint> out;
    for (const auto& e : f.entries())
        if (!dom.is_puncture(e.point, eps)) out.push_back(e.point);
    return out;
}

bool same_set(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b, double eps) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::none_of(b.begin(), b.end(), [&](const SpherePoint& y) { return x.matches(y, eps); })) return false;
    return true;
}

void add_unique(std::vector<SpherePoint>& v, const SpherePoint& p, double eps) {
    if (std::none_of(v.begin(), v.end(), [&](const SpherePoint& y) { return y.matches(p, eps); })) v.push_back(p);
}

}  // namespace

// ---- R3 ----

TheoremReport verify_r3(const WData3& data, const Tolerances& tol) {
    RamificationProfile p = profile_r3(data, tol);
    Classification cls = classify(WData(data), tol);
    TheoremReport rep;
    rep.kind = "r3";
    const int d = p.d, k = p.k, G = p.G, l = p.l;
    RatioR R = ratio_r3(d, G, k);
    rep.non_hyperbolic = R.non_hyperbolic();
    bool complete = complete_of(cls);
    bool algebraic = cls.tag == SurfaceClass::algebraic;

    rep.facts = {{"d", std::to_string(d)},          {"G", std::to_string(G)},     {"k", std::to_string(k)},
                 {"D_g", std::to_string(p.D_g)},    {"nu_g", p.nu_g.get_str()},   {"n_g", std::to_string(p.n_g)},
                 {"l", std::to_string(l)},          {"R", R.to_string()},         {"class", class_name(cls.tag)}};
    if (rep.non_hyperbolic) rep.warnings.push_back("non-hyperbolic basic domain: R-forms inapplicable, raw forms used");

    rep.checks.push_back(check("r3.exceptional.raw", "raw", "D_g <= (n_g+k-l)/d", q(p.D_g), "<=",
                               q(p.n_g + k - l, d)));
    rep.checks.push_back(check("r3.ramified.raw", "raw", "nu_g <= (n_g+k)/d", p.nu_g, "<=", q(p.n_g + k, d)));

    TheoremCheck ex = check("r3.exceptional.R", "R", "D_g <= 2+2/R-l/d", q(p.D_g), "<=",
                            mpq_class(2) + 2 * R.inverse() - q(l, d));
    TheoremCheck nu = check("r3.ramified.R", "R", "nu_g <= 2+2/R", p.nu_g, "<=", mpq_class(2) + 2 * R.inverse());
    if (R.non_hyperbolic()) {
        ex = inapplicable(ex, "non-hyperbolic");
        nu = inapplicable(nu, "non-hyperbolic");
    }
    rep.checks.push_back(ex);
    rep.checks.push_back(nu);

    rep.checks.push_back(check("r3.exceptional-vs-ramified", "audit", "D_g <= nu_g", q(p.D_g), "<=", p.nu_g));
    TheoremCheck cap = check("r3.ramified-cap", "audit", algebraic ? "nu_g < 4" : "nu_g <= 4", p.nu_g,
                             algebraic ? "<" : "<=", q(4));
    rep.checks.push_back(complete ? cap : inapplicable(cap, "not complete"));

    TheoremCheck rl = check("r3.ratio-lower", "R", cls.ends.algebraic_ends ? "R > 1" : "R >= 1", R.value(),
                            cls.ends.algebraic_ends ? ">" : ">=", q(1));
    if (!R.hyperbolic())
        rl = inapplicable(rl, R.non_hyperbolic() ? "non-hyperbolic" : "R infinite");
    else if (!complete)
        rl = inapplicable(rl, "not complete");
    rep.checks.push_back(rl);

    rep.checks.push_back(check("r3.riemann-hurwitz", "audit", "n_g = 2(d+G-1)", q(p.n_g), "=", q(2 * (d + G - 1))));
    rep.checks.push_back(check("r3.exceptional-fibres", "audit", "d*D_g - n_0 <= k", q(d * p.D_g - p.n0), "<=", q(k)));
    TheoremCheck g0 = check("r3.genus0-algebraic", "audit", "D_g <= 2", q(p.D_g), "<=", q(2));
    rep.checks.push_back(algebraic && G == 0 ? g0 : inapplicable(g0, "not algebraic"));
    return rep;
}

// ---- R4 ----

TheoremReport verify_r4(const WData4& data, const Tolerances& tol) {
    ProfileR4 pr = profile_r4(data, tol);
    Classification cls = classify(WData(data), tol);
    TheoremReport rep;
    rep.kind = "r4";
    const int G = data.domain.genus, k = data.domain.k();
    bool complete = complete_of(cls);
    bool algebraic = cls.tag == SurfaceClass::algebraic;
    mpq_class den(2 * G - 2 + k);
    rep.non_hyperbolic = sgn(den) < 0;
    if (rep.non_hyperbolic) rep.warnings.push_back("non-hyperbolic basic domain: R-forms inapplicable, raw forms used");
    rep.facts = {{"G", std::to_string(G)}, {"k", std::to_string(k)}, {"class", class_name(cls.tag)}};

    const RamificationProfile* ps[2] = {pr.p1 ? &*pr.p1 : nullptr, pr.p2 ? &*pr.p2 : nullptr};
    for (int i = 0; i < 2; ++i) {
        const auto* p = ps[i];
        std::string tag = "g" + std::to_string(i + 1);
        if (!p) {
            rep.facts.push_back({tag, "constant"});
            continue;
        }
        RatioR R = ratio_r4(p->d, G, k);
        rep.facts.push_back({"d_" + tag, std::to_string(p->d)});
        rep.facts.push_back({"D_" + tag, std::to_string(p->D_g)});
        rep.facts.push_back({"nu_" + tag, p->nu_g.get_str()});
        rep.facts.push_back({"R_" + tag, R.to_string()});
        rep.checks.push_back(check("r4." + tag + ".ramified.raw", "raw", "nu <= (n+k)/d", p->nu_g, "<=",
                                   q(p->n_g + k, p->d)));
        rep.checks.push_back(check("r4." + tag + ".exceptional-vs-ramified", "audit", "D <= nu", q(p->D_g), "<=",
                                   p->nu_g));
        TheoremCheck r = check("r4." + tag + ".ramified.R", "R", "nu <= 2+1/R", p->nu_g, "<=",
                               mpq_class(2) + R.inverse());
        rep.checks.push_back(R.non_hyperbolic() ? inapplicable(r, "non-hyperbolic") : r);
    }

    if (ps[0] && ps[1]) {
        rep.facts.push_back({"case", "i"});
        const auto &a = *ps[0], &b = *ps[1];
        RatioR R1 = ratio_r4(a.d, G, k), R2 = ratio_r4(b.d, G, k);
        mpq_class rsum = sgn(den) > 0 ? mpq_class(a.d + b.d) / den : mpq_class(0);
        rsum.canonicalize();
        bool both_big = a.nu_g > 2 && b.nu_g > 2;
        mpq_class lhs = both_big ? mpq_class(1) / (a.nu_g - 2) + mpq_class(1) / (b.nu_g - 2) : mpq_class(0);
        lhs.canonicalize();
        TheoremCheck s = check("r4.ramification-sum", "R", "1/(nu1-2)+1/(nu2-2) >= R1+R2", lhs, ">=", rsum);
        if (!R1.hyperbolic() || !R2.hyperbolic())
            s = inapplicable(s, "R-form needs 2G-2+k > 0");
        else if (!both_big)
            s = inapplicable(s, "needs nu1 > 2 and nu2 > 2");
        rep.checks.push_back(s);
        TheoremCheck lo = check("r4.ratio-sum-lower", "R", cls.ends.algebraic_ends ? "R1+R2 > 1" : "R1+R2 >= 1", rsum,
                                cls.ends.algebraic_ends ? ">" : ">=", q(1));
        if (sgn(den) <= 0)
            lo = inapplicable(lo, "R-form needs 2G-2+k > 0");
        else if (!complete)
            lo = inapplicable(lo, "not complete");
        rep.checks.push_back(lo);
        int cap = algebraic ? 3 : 4;
        TheoremCheck om = check("r4.omission", "audit", "min(D1,D2) <= " + std::to_string(cap),
                                q(std::min(a.D_g, b.D_g)), "<=", q(cap));
        rep.checks.push_back(complete ? om : inapplicable(om, "not complete"));
    } else {
        rep.facts.push_back({"case", "ii"});
        const auto& a = ps[0] ? *ps[0] : *ps[1];
        RatioR R1 = ratio_r4(a.d, G, k);
        TheoremCheck lo = check("r4.ratio-lower", "R", cls.ends.algebraic_ends ? "R1 > 1" : "R1 >= 1", R1.value(),
                                cls.ends.algebraic_ends ? ">" : ">=", q(1));
        if (!R1.hyperbolic())
            lo = inapplicable(lo, R1.non_hyperbolic() ? "non-hyperbolic" : "R infinite");
        else if (!complete)
            lo = inapplicable(lo, "not complete");
        rep.checks.push_back(lo);
        int cap = algebraic ? 2 : 3;
        TheoremCheck om = check("r4.omission", "audit", "D <= " + std::to_string(cap), q(a.D_g), "<=", q(cap));
        rep.checks.push_back(complete ? om : inapplicable(om, "not complete"));
    }
    return rep;
}

// ---- unicity ----

SharedValues shared_values(const RationalFunction& gA, const RationalFunction& gB, const PuncturedSphere& dom,
                           const Tolerances& tol) {
    SharedValues out;
    Polynomial E = gA.num() * gB.den() - gB.num() * gA.den();
    if (!E.is_exact()) E = E.trimmed(tol.eps_zero);
    if (E.is_zero()) {
        out.identical = true;
        return out;
    }
    int dA = degree(gA), dB = degree(gB);
    out.d = std::max(dA, dB);
    out.degree_mismatch = dA != dB;

    // If the fibres over c agree and are nonempty in M, some z0 in M has gA(z0) = gB(z0) = c.
    // If they are empty, every preimage is a puncture, so c is a value at a puncture.
    // Hence these candidates are exhaustive.
    std::vector<SpherePoint> cands;
    if (E.degree() > 0)
        for (Divisor dv = poly_roots(E, tol); const auto& e : dv.entries()) add_unique(cands, gA(e.point), tol.eps_match);
    add_unique(cands, gA(SpherePoint::infinity()), tol.eps_match);
    for (const auto& p : dom.punctures) {
        add_unique(cands, gA(p), tol.eps_match);
        add_unique(cands, gB(p), tol.eps_match);
    }
    for (const auto& c : cands) {
        auto a = in_M(preimages(gA, c, tol), dom, tol.eps_match);
        auto b = in_M(preimages(gB, c, tol), dom, tol.eps_match);
        if (same_set(a, b, tol.eps_match)) out.values.push_back(c);
    }
    std::sort(out.values.begin(), out.values.end());
    out.q = int(out.values.size());
    return out;
}

namespace {

std::string value_list(const std::vector<SpherePoint>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
    return os.str();
}

void unicity_component(TheoremReport& rep, const std::string& tag, const SharedValues& sv, int G, int k) {
    int d = sv.d;
    int n = 2 * (d + G - 1);
    rep.facts.push_back({"q_" + tag, std::to_string(sv.q)});
    rep.facts.push_back({"values_" + tag, value_list(sv.values)});
    if (sv.degree_mismatch) rep.warnings.push_back(tag + ": degrees differ, bound uses the larger one");
    rep.checks.push_back(check(rep.kind + "." + tag + ".raw", "raw", "q <= (2d+n+k)/d", q(sv.q), "<=",
                               q(2 * d + n + k, d)));
}

}  // namespace

TheoremReport verify_unicity_r3(const WData3& a, const WData3& b, const Tolerances& tol) {
    TheoremReport rep;
    rep.kind = "unicity-r3";
    SharedValues sv = shared_values(a.g, b.g, a.domain, tol);
    if (sv.identical) {
        rep.facts.push_back({"verdict", "identical maps"});
        return rep;
    }
    int G = a.domain.genus, k = a.domain.k();
    RatioR R = ratio_r3(sv.d, G, k);
    rep.non_hyperbolic = R.non_hyperbolic();
    rep.facts.push_back({"d", std::to_string(sv.d)});
    rep.facts.push_back({"R", R.to_string()});
    unicity_component(rep, "g", sv, G, k);
    TheoremCheck c = check("unicity-r3.g.R", "R", "q <= 4+2/R", q(sv.q), "<=", mpq_class(4) + 2 * R.inverse());
    rep.checks.push_back(R.non_hyperbolic() ? inapplicable(c, "non-hyperbolic") : c);
    return rep;
}

TheoremReport verify_unicity_r4(const WData4& a, const WData4& b, const Tolerances& tol) {
    TheoremReport rep;
    rep.kind = "unicity-r4";
    int G = a.domain.genus, k = a.domain.k();
    mpq_class den(2 * G - 2 + k);
    rep.non_hyperbolic = sgn(den) < 0;
    const RationalFunction* A[2] = {&a.g1, &a.g2};
    const RationalFunction* B[2] = {&b.g1, &b.g2};
    SharedValues sv[2];
    bool differ[2];
    for (int i = 0; i < 2; ++i) {
        if (A[i]->is_constant() || B[i]->is_constant()) {
            differ[i] = !A[i]->equals(*B[i], tol.eps_match);
            if (differ[i]) throw AnalysisError("unsupported", "constant component differs between the two surfaces");
            continue;
        }
        sv[i] = shared_values(*A[i], *B[i], a.domain, tol);
        differ[i] = !sv[i].identical;
    }
    if (!differ[0] && !differ[1]) {
        rep.facts.push_back({"verdict", "identical maps"});
        return rep;
    }
    if (differ[0] && differ[1]) {
        rep.facts.push_back({"case", "i"});
        unicity_component(rep, "g1", sv[0], G, k);
        unicity_component(rep, "g2", sv[1], G, k);
        int p = sv[0].q, qq = sv[1].q;
        mpq_class rsum = sgn(den) > 0 ? mpq_class(sv[0].d + sv[1].d) / den : mpq_class(0);
        rsum.canonicalize();
        mpq_class lhs = p > 4 && qq > 4 ? mpq_class(1, p - 4) + mpq_class(1, qq - 4) : mpq_class(0);
        lhs.canonicalize();
        TheoremCheck c = check("unicity-r4.sum", "R", "1/(p-4)+1/(q-4) >= R1+R2", lhs, ">=", rsum);
        if (sgn(den) <= 0)
            c = inapplicable(c, "R-form needs 2G-2+k > 0");
        else if (!(p > 4 && qq > 4))
            c = inapplicable(c, "needs p > 4 and q > 4");
        rep.checks.push_back(c);
        return rep;
    }
    int i = differ[0] ? 0 : 1;
    std::string tag = "g" + std::to_string(i + 1);
    rep.facts.push_back({"case", "ii"});
    unicity_component(rep, tag, sv[i], G, k);
    RatioR R = ratio_r4(sv[i].d, G, k);
    rep.facts.push_back({"R_" + tag, R.to_string()});
    TheoremCheck c = check("unicity-r4." + tag + ".R", "R", "p <= 4+1/R", q(sv[i].q), "<=", mpq_class(4) + R.inverse());
    rep.checks.push_back(R.non_hyperbolic() ? inapplicable(c, "non-hyperbolic") : c);
    return rep;
}

// ---- covering ----

WData pullback_covering(const WData& data, int m, const Tolerances& tol) {
    if (m < 1) throw std::invalid_argument("covering degree must be positive");
    require_genus0(data);
    if (m == 1) return data;
    const PuncturedSphere& dom = domain_of(data);
    SpherePoint zero{Scalar(0)}, inf = SpherePoint::infinity();
    if (!dom.is_puncture(zero, tol.eps_match) || !dom.is_puncture(inf, tol.eps_match))
        throw AnalysisError("covering branch point", "z^m branches at 0 and infinity, which must be punctures");

    RationalFunction zm(Polynomial::monomial(Scalar(1), m));
    RationalFunction jac(Polynomial::monomial(Scalar(long(m)), m - 1));
    auto pull_fn = [&](const RationalFunction& f) { return f.compose(zm); };
    auto pull_form = [&](const MeromorphicForm& w) { return MeromorphicForm(jac * w.coeff.compose(zm)); };

    PuncturedSphere nd;
    nd.genus = 0;
    nd.punctures.push_back(zero);
    for (const auto& p : dom.punctures) {
        if (p.is_infinity() || p.matches(zero, tol.eps_match)) continue;
        Polynomial P = Polynomial::monomial(Scalar(1), m) - Polynomial(p.value());
        for (Divisor dv = poly_roots(P, tol); const auto& e : dv.entries()) nd.punctures.push_back(e.point);
    }
    nd.punctures.push_back(inf);
    std::sort(nd.punctures.begin(), nd.punctures.end());

    if (auto* a = std::get_if<WData3>(&data)) return WData3{nd, pull_form(a->h), pull_fn(a->g)};
    if (auto* b = std::get_if<WData4>(&data)) return WData4{nd, pull_form(b->h), pull_fn(b->g1), pull_fn(b->g2)};
    const auto& c = std::get<WDataN>(data);
    WDataN out{nd, {}};
    for (const auto& w : c.phis) out.phis.push_back(pull_form(w));
    return out;
}

}  // namespace minsurf
