#include "minsurf/catalog.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace minsurf {

namespace {

using RF = RationalFunction;

RF Z() { return RF::z(); }
RF C(const Scalar& c) { return RF(c); }
SpherePoint pt(const Scalar& s) { return SpherePoint(s); }
SpherePoint inf() { return SpherePoint::infinity(); }

mpq_class parse_q(const std::string& key, const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parameter " + key + ": not a rational number: " + s);
    }
}

long parse_int(const std::string& key, const std::string& s) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + ": not an integer: " + s);
    }
}

std::vector<mpq_class> parse_list(const std::string& key, const std::string& s) {
    std::vector<mpq_class> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_q(key, tok));
    return out;
}

/// Fills defaults and rejects unknown keys.
Params merge(const std::string& name, const Params& given, const Params& defaults) {
    Params p = defaults;
    for (const auto& [k, v] : given) {
        if (!defaults.count(k)) throw std::invalid_argument("catalog entry " + name + " has no parameter " + k);
        p[k] = v;
    }
    return p;
}

std::string list_str(const std::vector<mpq_class>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

void require_distinct(const std::vector<mpq_class>& v, const std::string& what) {
    std::set<mpq_class> s(v.begin(), v.end());
    if (s.size() != v.size()) throw std::invalid_argument(what + " must be distinct");
}

RF prod_linear(const std::vector<mpq_class>& roots) {
    RF p(1);
    for (const auto& r : roots) p = p * (Z() - C(Scalar(r)));
    return p;
}

PuncturedSphere finite_plus_inf(const std::vector<mpq_class>& pts) {
    PuncturedSphere m;
    for (const auto& a : pts) m.punctures.push_back(pt(Scalar(a)));
    m.punctures.push_back(inf());
    return m;
}

mpq_class alpha_param(const Params& p) {
    mpq_class a = parse_q("alpha", p.at("alpha"));
    if (a == 0 || a == 1 || a == -1) throw std::invalid_argument("alpha must differ from 0 and +-1");
    return a;
}

CatalogEntry enneper(const Params& given) {
    CatalogEntry e;
    e.name = "enneper";
    e.title = "Enneper surface (dz, z)";
    e.params = merge(e.name, given, {});
    e.data = WData3{PuncturedSphere{{inf()}, 0}, MeromorphicForm(RF(1)), Z()};
    e.expected.facts = {{"d", "1"}, {"k", "1"}, {"D_g", "1"}, {"nu_g", "1"}, {"R", "non-hyperbolic"}, {"class", "algebraic"}};
    e.expected.periods = true;
    e.expected.tau_over_pi = -4;
    e.note = "Enneper surface on C";
    return e;
}

CatalogEntry catenoid(const Params& given) {
    CatalogEntry e;
    e.name = "catenoid";
    e.title = "catenoid (dz/z^2, z)";
    e.params = merge(e.name, given, {});
    e.data = WData3{PuncturedSphere{{pt(Scalar(0)), inf()}, 0}, MeromorphicForm(RF(1) / (Z() * Z())), Z()};
    e.expected.facts = {{"d", "1"}, {"k", "2"}, {"D_g", "2"}, {"nu_g", "2"}, {"R", "inf"}, {"class", "algebraic"}};
    e.expected.periods = true;
    e.expected.tau_over_pi = -4;
    e.note = "catenoid on C minus 0";
    return e;
}

CatalogEntry helicoid(const Params& given) {
    CatalogEntry e;
    e.name = "helicoid";
    e.title = "helicoid (e^{-z} dz, i e^z)";
    e.params = merge(e.name, given, {});
    e.flag = "transcendental";
    e.expected.facts = {{"D_g", "2"}};
    e.note = "entire transcendental data, infinite total curvature; listed only";
    return e;
}

CatalogEntry jorge_meeks(const Params& given) {
    CatalogEntry e;
    e.name = "jorge-meeks";
    e.params = merge(e.name, given, {{"r", "3"}});
    long r = parse_int("r", e.params.at("r"));
    if (r < 2 || r > 12) throw std::invalid_argument("jorge-meeks needs 2 <= r <= 12");
    e.title = "Jorge-Meeks (dz/(z^r-1)^2, z^(r-1)), r = " + std::to_string(r);
    Polynomial q = Polynomial::monomial(Scalar(1), int(r)) - Polynomial(1);
    PuncturedSphere m;
    for (Divisor dv = poly_roots(q); const auto& en : dv.entries()) m.punctures.push_back(en.point);
    RF qq(q);
    e.data = WData3{m, MeromorphicForm(RF(1) / (qq * qq)), RF(Polynomial::monomial(Scalar(1), int(r - 1)))};
    // R = (r-1)/(r/2 - 1)
    RatioR R = ratio_r3(int(r - 1), 0, int(r));
    e.expected.facts = {{"d", std::to_string(r - 1)}, {"k", std::to_string(r)}, {"R", R.to_string()},
                        {"class", "algebraic"}};
    if (r >= 3) {
        e.expected.facts.push_back({"D_g", "0"});
        e.expected.facts.push_back({"nu_g", "1"});
    }
    e.expected.periods = true;
    e.expected.tau_over_pi = -4.0 * double(r - 1);
    e.expected.mode = r <= 2 || r == 4 ? "EXACT" : "FLOAT";
    e.note = "Jorge-Meeks surface with r catenoid ends at the r-th roots of unity";
    return e;
}

CatalogEntry voss(const Params& given) {
    CatalogEntry e;
    e.name = "voss";
    Params p = given;
    if (p.count("k") && !p.count("points")) p["points"] = parse_int("k", p["k"]) == 4 ? "1,2,3" : "1,2";
    e.params = merge(e.name, p, {{"k", "3"}, {"points", "1,2"}});
    auto pts = parse_list("points", e.params.at("points"));
    long k = parse_int("k", e.params.at("k"));
    if (k != long(pts.size()) + 1) throw std::invalid_argument("voss: k must be the number of points plus one");
    if (k < 3 || k > 4) throw std::invalid_argument("voss: k must be 3 or 4");
    require_distinct(pts, "voss points");
    e.title = "Voss surface (dz/prod(z-a_j), z), points " + list_str(pts);
    e.data = WData3{finite_plus_inf(pts), MeromorphicForm(RF(1) / prod_linear(pts)), Z()};
    RatioR R = ratio_r3(1, 0, int(k));
    e.expected.facts = {{"d", "1"},       {"k", std::to_string(k)}, {"D_g", std::to_string(k)},
                        {"R", R.to_string()}, {"l", "0"},           {"class", "pseudo-algebraic"}};
    e.expected.periods = false;
    e.note = "g omits the points and infinity; the period condition fails";
    return e;
}

mpq_class ms_sigma2(const mpq_class& a, const mpq_class& t) {
    if ((a - 1) * (t - 1) == 0) throw std::invalid_argument("miyaoka-sato needs (a-1)(t-1) != 0");
    mpq_class den = a * ((t - 1) * a + 4);
    if (den == 0) throw std::invalid_argument("miyaoka-sato: sigma^2 has zero denominator");
    mpq_class s2 = (t + 3) / den;
    s2.canonicalize();
    if (sgn(s2) >= 0) throw std::invalid_argument("miyaoka-sato needs sigma^2 < 0, got " + s2.get_str());
    return s2;
}

WData3 ms_data(const mpq_class& a, const mpq_class& t, const Scalar& sigma) {
    RF z2 = Z() * Z();
    RF num = z2 + C(Scalar(mpq_class(1 + a * (t - 1))));
    RF den = z2 + C(Scalar(t));
    RF z2p1 = z2 + RF(1);
    PuncturedSphere m{{pt(Scalar::i()), pt(-Scalar::i()), inf()}, 0};
    return WData3{m, MeromorphicForm((den * den) / (z2p1 * z2p1)), C(sigma) * num / den};
}

CatalogEntry miyaoka_sato(const Params& given) {
    CatalogEntry e;
    e.name = "miyaoka-sato";
    e.params = merge(e.name, given, {{"a", "-1"}, {"t", "2"}});
    mpq_class a = parse_q("a", e.params.at("a")), t = parse_q("t", e.params.at("t"));
    mpq_class s2 = ms_sigma2(a, t);
    if (t == 1) throw std::invalid_argument("miyaoka-sato needs t != 1");
    Scalar sigma(ExactComplex::sqrt_rational(s2));
    e.title = "Miyaoka-Sato (a, t) = (" + a.get_str() + ", " + t.get_str() + "), sigma^2 = " + s2.get_str();
    e.data = ms_data(a, t, sigma);
    e.expected.facts = {{"d", "2"}, {"k", "3"}, {"D_g", "2"}, {"nu_g", "5/2"}, {"R", "4"}, {"class", "algebraic"}};
    e.expected.periods = true;
    e.expected.tau_over_pi = -8;
    e.note = "genus 0, three ends, g omits sigma and sigma*a";
    return e;
}

CatalogEntry costa(const Params& given) {
    CatalogEntry e;
    e.name = "costa";
    e.title = "Costa surface (p dz, p/p') on the square torus";
    e.params = merge(e.name, given, {});
    e.flag = "genus-1";
    e.expected.facts = {{"G", "1"}, {"k", "3"}, {"d", "3"}, {"D_g", "1"}, {"R", "2"}, {"class", "algebraic"}};
    e.expected.tau_over_pi = -12;
    e.note = "elliptic data; bookkeeping only, the analyzers require genus 0";
    return e;
}

CatalogEntry torus(const Params& given) {
    CatalogEntry e;
    e.name = "torus-series";
    e.title = "torus series g = sigma/(p^j p')";
    e.params = merge(e.name, given, {{"j", "1"}});
    long j = parse_int("j", e.params.at("j"));
    if (j < 1) throw std::invalid_argument("torus-series needs j >= 1");
    e.flag = "documentation";
    auto rows = torus_series(int(j));
    const auto& r = rows.back();
    e.expected.facts = {{"G", "1"}, {"k", "4"}, {"d", std::to_string(r.d)}, {"D_g", "2"}, {"R", r.R.get_str()}};
    e.note = "genus 1, four ends; 2 + 2/R decreases to 2 as j grows";
    return e;
}

CatalogEntry mo_osserman_3(const Params& given) {
    CatalogEntry e;
    e.name = "mo-osserman-3";
    e.params = merge(e.name, given, {{"points", "1,2,3"}});
    auto pts = parse_list("points", e.params.at("points"));
    if (pts.size() != 3) throw std::invalid_argument("mo-osserman-3 needs three points");
    require_distinct(pts, "points");
    e.title = "Mo-Osserman (dz/prod(z-a_i), z, z) on C minus " + list_str(pts);
    e.data = WData4{finite_plus_inf(pts), MeromorphicForm(RF(1) / prod_linear(pts)), Z(), Z()};
    e.expected.facts = {{"k", "4"}, {"d_g1", "1"}, {"D_g1", "4"}, {"nu_g1", "4"}, {"R_g1", "1/2"},
                        {"d_g2", "1"}, {"D_g2", "4"}, {"nu_g2", "4"}, {"R_g2", "1/2"}, {"case", "i"},
                        {"class", "pseudo-algebraic"}};
    e.expected.periods = false;
    e.note = "both Gauss maps omit the three points and infinity; x^3 vanishes";
    return e;
}

CatalogEntry mo_osserman_2(const Params& given) {
    CatalogEntry e;
    e.name = "mo-osserman-2";
    e.params = merge(e.name, given, {{"points", "1,2"}});
    auto pts = parse_list("points", e.params.at("points"));
    if (pts.size() != 2) throw std::invalid_argument("mo-osserman-2 needs two points");
    require_distinct(pts, "points");
    e.title = "Mo-Osserman (dz/prod(z-a_i), z, 0) on C minus " + list_str(pts);
    e.data = WData4{finite_plus_inf(pts), MeromorphicForm(RF(1) / prod_linear(pts)), Z(), RF(0)};
    e.expected.facts = {{"k", "3"}, {"d_g1", "1"}, {"D_g1", "3"}, {"nu_g1", "3"}, {"R_g1", "1"}, {"g2", "constant"},
                        {"case", "ii"}, {"class", "pseudo-algebraic"}};
    e.expected.periods = false;
    e.note = "complex curve in C^2; g1 omits the two points and infinity";
    return e;
}

CatalogEntry cubic_pole_r4(const Params& given) {
    CatalogEntry e;
    e.name = "cubic-pole-r4";
    e.params = merge(e.name, given, {{"c", "0"}});
    mpq_class c = parse_q("c", e.params.at("c"));
    e.title = "cubic pole (dz/z^3, z, c), c = " + c.get_str();
    e.data = WData4{PuncturedSphere{{pt(Scalar(0)), inf()}, 0}, MeromorphicForm(RF(1) / (Z() * Z() * Z())), Z(),
                    C(Scalar(c))};
    e.expected.facts = {{"k", "2"}, {"d_g1", "1"}, {"D_g1", "2"}, {"nu_g1", "2"}, {"g2", "constant"}, {"case", "ii"},
                        {"class", "not complete"}};
    e.expected.periods = true;
    e.note = "g1 omits 0 and infinity; every form is regular at infinity, so that end is not complete";
    return e;
}

CatalogEntry unicity_r3(const Params& given) {
    CatalogEntry e;
    e.name = "unicity-r3";
    e.params = merge(e.name, given, {{"alpha", "2"}});
    mpq_class a = alpha_param(e.params);
    mpq_class ia = 1 / a;
    e.title = "unicity pair (z, 1/z) on C minus {0, alpha, 1/alpha}";
    PuncturedSphere m{{pt(Scalar(0)), pt(Scalar(a)), pt(Scalar(ia)), inf()}, 0};
    RF h = RF(1) / (Z() * (Z() - C(Scalar(a))) * (C(Scalar(a)) * Z() - RF(1)));
    e.data = WData3{m, MeromorphicForm(h), Z()};
    e.partner = WData3{m, MeromorphicForm(h), RF(1) / Z()};
    std::set<mpq_class> vals{0, 1, -1, a, ia};
    std::string vs;
    for (const auto& v : vals) vs += (vs.empty() ? "" : ",") + v.get_str();
    e.expected.facts = {{"q_g", "6"}, {"d", "1"}, {"R", "1"}};
    e.expected.periods = false;
    e.note = "shared values 0, infinity, +-1, alpha, 1/alpha: " + vs + ",inf";
    return e;
}

CatalogEntry unicity_r4_pair(const Params& given) {
    CatalogEntry e;
    e.name = "unicity-r4-pair";
    e.params = merge(e.name, given, {{"alpha", "2"}});
    mpq_class a = alpha_param(e.params);
    e.title = "unicity pair (z, z) vs (1/z, 1/z) on C minus {0, alpha, 1/alpha}";
    PuncturedSphere m{{pt(Scalar(0)), pt(Scalar(a)), pt(Scalar(mpq_class(1 / a))), inf()}, 0};
    RF h = RF(1) / (Z() * (Z() - C(Scalar(a))) * (C(Scalar(a)) * Z() - RF(1)));
    e.data = WData4{m, MeromorphicForm(h), Z(), Z()};
    e.partner = WData4{m, MeromorphicForm(h), RF(1) / Z(), RF(1) / Z()};
    e.expected.facts = {{"q_g1", "6"}, {"q_g2", "6"}, {"case", "i"}};
    e.expected.periods = false;
    e.note = "six shared values for each component";
    return e;
}

CatalogEntry unicity_r4(const Params& given, bool corrected) {
    CatalogEntry e;
    e.name = corrected ? "unicity-r4-corrected" : "unicity-r4";
    e.params = merge(e.name, given, {{"alpha", "2"}});
    mpq_class a = alpha_param(e.params);
    RF h;
    PuncturedSphere m;
    if (corrected) {
        e.title = "unicity pair (z, 0) vs (1/z, 0) on C minus {0, alpha, 1/alpha}";
        m = PuncturedSphere{{pt(Scalar(0)), pt(Scalar(a)), pt(Scalar(mpq_class(1 / a))), inf()}, 0};
        h = RF(1) / (Z() * (Z() - C(Scalar(a))) * (C(Scalar(a)) * Z() - RF(1)));
        e.expected.facts = {{"q_g1", "6"}, {"R_g1", "1/2"}, {"case", "ii"}};
        e.note = "with 1/alpha also removed, alpha and 1/alpha become shared: p = 6 = 4 + 1/R";
    } else {
        e.title = "unicity pair (z, 0) vs (1/z, 0) on C minus {0, alpha}";
        m = PuncturedSphere{{pt(Scalar(0)), pt(Scalar(a)), inf()}, 0};
        h = RF(1) / (Z() * (Z() - C(Scalar(a))));
        e.expected.facts = {{"q_g1", "5"}, {"R_g1", "1"}, {"case", "ii"}};
        e.note = "published claim p = 5; alpha is not shared since 1/z takes it at 1/alpha, which lies in M";
    }
    e.data = WData4{m, MeromorphicForm(h), Z(), RF(0)};
    e.partner = WData4{m, MeromorphicForm(h), RF(1) / Z(), RF(0)};
    e.expected.periods = false;
    return e;
}

CatalogEntry fujimoto(const Params& given) {
    CatalogEntry e;
    e.name = "fujimoto";
    e.params = merge(e.name, given, {{"n", "3"}, {"seed", "1"}});
    long n = parse_int("n", e.params.at("n"));
    long seed = parse_int("seed", e.params.at("seed"));
    if (n < 3 || n % 2 == 0 || n > 9) throw std::invalid_argument("fujimoto needs odd 3 <= n <= 9");
    FujimotoData fd = fujimoto_construction(int(n), std::uint64_t(seed));
    e.title = "Fujimoto null curve in R^" + std::to_string(n);
    e.data = fd.data;
    e.hyperplanes = fd.hyperplanes;
    e.expected.facts = {{"n", std::to_string(n)}, {"general_position", "true"}};
    e.note = "hyperplanes from the two section families; a_0 family met at z = 0";
    return e;
}

CatalogEntry covering(const Params& given) {
    CatalogEntry e;
    e.name = "covering";
    e.params = merge(e.name, given, {{"m", "2"}});
    long m = parse_int("m", e.params.at("m"));
    if (m < 1 || m > 6) throw std::invalid_argument("covering needs 1 <= m <= 6");
    e.title = "pullback of (dz/(z(z-1)), z) along z^" + std::to_string(m);
    WData base = WData3{PuncturedSphere{{pt(Scalar(0)), pt(Scalar(1)), inf()}, 0},
                        MeromorphicForm(RF(1) / (Z() * (Z() - RF(1)))), Z()};
    e.data = pullback_covering(base, int(m));
    e.expected.facts = {{"d", std::to_string(m)}, {"k", std::to_string(m + 2)}, {"D_g", "3"}, {"R", "2"}};
    e.expected.periods = false;
    e.expected.mode = m <= 2 || m == 4 ? "EXACT" : "FLOAT";
    e.note = "unbranched covering of a three-punctured sphere; R, D_g and nu_g are unchanged";
    return e;
}

using Builder = CatalogEntry (*)(const Params&);

const std::vector<std::pair<std::string, Builder>>& registry() {
    static const std::vector<std::pair<std::string, Builder>> r = {
        {"enneper", enneper},
        {"catenoid", catenoid},
        {"helicoid", helicoid},
        {"jorge-meeks", jorge_meeks},
        {"voss", voss},
        {"miyaoka-sato", miyaoka_sato},
        {"costa", costa},
        {"torus-series", torus},
        {"mo-osserman-3", mo_osserman_3},
        {"mo-osserman-2", mo_osserman_2},
        {"cubic-pole-r4", cubic_pole_r4},
        {"unicity-r3", unicity_r3},
        {"unicity-r4-pair", unicity_r4_pair},
        {"unicity-r4", [](const Params& p) { return unicity_r4(p, false); }},
        {"unicity-r4-corrected", [](const Params& p) { return unicity_r4(p, true); }},
        {"fujimoto", fujimoto},
        {"covering", covering},
    };
    return r;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name, const Params& params) {
    for (const auto& [n, b] : registry())
        if (n == name) return b(params);
    throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<CatalogSummary> catalog_list() {
    std::vector<CatalogSummary> out;
    for (const auto& [n, b] : registry()) {
        CatalogEntry e = b({});
        std::string kind = "none";
        if (e.data) {
            kind = kind_name(*e.data);
            if (e.partner) kind = "unicity-" + kind;
        }
        out.push_back({n, e.title, kind, e.flag});
    }
    return out;
}

WData3 miyaoka_sato_normalized(const mpq_class& a, const mpq_class& t) {
    ms_sigma2(a, t);
    return ms_data(a, t, Scalar(1));
}

std::vector<TorusSeriesRow> torus_series(int jmax) {
    std::vector<TorusSeriesRow> rows;
    for (int j = 1; j <= jmax; ++j) {
        int d = 2 * j + 3;
        mpq_class R(d, 2);
        R.canonicalize();
        rows.push_back({j, 1, 4, d, R});
    }
    return rows;
}

}  // namespace minsurf
