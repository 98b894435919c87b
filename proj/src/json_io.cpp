#include "minsurf/json_io.hpp"

#include <regex>

namespace minsurf {

namespace {

mpq_class parse_rational(const std::string& s) {
    static const std::regex re(R"(^[+-]?\d+(/\d+)?$)");
    if (!std::regex_match(s, re)) throw SchemaError("not a rational: \"" + s + "\"");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class q(t);
    if (q.get_den() == 0) throw SchemaError("zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

/// a + b sqrt(m) with rational a, b.
struct RealPart {
    mpq_class a, b;
    long m = 0;
};

RealPart parse_real(const std::string& s) {
    static const std::regex re(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]?\d+(?:/\d+)?)\*sqrt\((\d+)\))?$)");
    std::smatch mt;
    if (s.empty() || !std::regex_match(s, mt, re)) throw SchemaError("not an exact number: \"" + s + "\"");
    RealPart r;
    if (mt[1].matched) r.a = parse_rational(mt[1].str());
    if (mt[2].matched) {
        if (mt[1].matched && mt[2].str()[0] != '+' && mt[2].str()[0] != '-')
            throw SchemaError("missing sign before sqrt term: \"" + s + "\"");
        r.b = parse_rational(mt[2].str());
        r.m = std::stol(mt[3].str());
        if (r.m <= 0) throw SchemaError("sqrt argument must be positive: \"" + s + "\"");
    }
    return r;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

Json scalar_to_json(const Scalar& s) {
    if (!s.is_exact()) {
        cplx c = s.value();
        return Json::array({c.real(), c.imag()});
    }
    const ExactComplex& e = s.exact();
    return Json::array({e.re_string(), e.im_string()});
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number()) return Scalar(cplx(j.get<double>(), 0.0));
    if (j.is_string()) {
        RealPart r = parse_real(j.get<std::string>());
        return Scalar(ExactComplex(GaussQ(r.a), GaussQ(r.b), r.m));
    }
    if (!j.is_array() || j.size() != 2) throw SchemaError("scalar must be [re, im]");
    if (j[0].is_number() && j[1].is_number()) return Scalar(cplx(j[0].get<double>(), j[1].get<double>()));
    if (j[0].is_string() && j[1].is_string()) {
        RealPart re = parse_real(j[0].get<std::string>()), im = parse_real(j[1].get<std::string>());
        if (re.m && im.m && re.m != im.m) throw SchemaError("real and imaginary parts use different square roots");
        long m = re.m ? re.m : im.m;
        return Scalar(ExactComplex(GaussQ(re.a, im.a), GaussQ(re.b, im.b), m));
    }
    throw SchemaError("scalar parts must both be numbers or both be strings");
}

Json poly_to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c));
    return a;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("polynomial must be an array of coefficients");
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x));
    return Polynomial(c);
}

Json rational_to_json(const RationalFunction& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rational_from_json(const Json& j) {
    if (j.is_array()) return RationalFunction(poly_from_json(j));
    Polynomial num = poly_from_json(field(j, "num"));
    Polynomial den = j.contains("den") ? poly_from_json(j.at("den")) : Polynomial(1);
    if (den.is_zero()) throw SchemaError("zero denominator");
    return RationalFunction(num, den);
}

Json point_to_json(const SpherePoint& p) {
    if (p.is_infinity()) return "inf";
    return scalar_to_json(p.value());
}

SpherePoint point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return SpherePoint::infinity();
    return SpherePoint(scalar_from_json(j));
}

Json data_to_json(const WData& d) {
    Json j;
    j["kind"] = kind_name(d);
    const auto& dom = domain_of(d);
    Json P = Json::array();
    for (const auto& p : dom.punctures) P.push_back(point_to_json(p));
    j["punctures"] = P;
    j["genus"] = dom.genus;
    if (auto* a = std::get_if<WData3>(&d)) {
        j["h"] = rational_to_json(a->h.coeff);
        j["g"] = rational_to_json(a->g);
    } else if (auto* b = std::get_if<WData4>(&d)) {
        j["h"] = rational_to_json(b->h.coeff);
        j["g1"] = rational_to_json(b->g1);
        j["g2"] = rational_to_json(b->g2);
    } else {
        Json F = Json::array();
        for (const auto& f : std::get<WDataN>(d).phis) F.push_back(rational_to_json(f.coeff));
        j["phis"] = F;
    }
    return j;
}

WData data_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("data must be a JSON object");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw SchemaError("\"kind\" must be a string");
    PuncturedSphere dom;
    const Json& P = field(j, "punctures");
    if (!P.is_array()) throw SchemaError("\"punctures\" must be an array");
    for (const auto& p : P) dom.punctures.push_back(point_from_json(p));
    if (j.contains("genus")) {
        if (!j.at("genus").is_number_integer()) throw SchemaError("\"genus\" must be an integer");
        dom.genus = j.at("genus").get<int>();
    }
    try {
        dom.validate();
    } catch (const std::exception& e) {
        throw SchemaError(e.what());
    }
    std::string k = kind.get<std::string>();
    if (k == "r3") return WData3{dom, MeromorphicForm(rational_from_json(field(j, "h"))), rational_from_json(field(j, "g"))};
    if (k == "r4")
        return WData4{dom, MeromorphicForm(rational_from_json(field(j, "h"))), rational_from_json(field(j, "g1")),
                      rational_from_json(field(j, "g2"))};
    if (k == "rn") {
        const Json& F = field(j, "phis");
        if (!F.is_array() || F.size() < 3) throw SchemaError("\"phis\" must list at least three forms");
        WDataN n{dom, {}};
        for (const auto& f : F) n.phis.push_back(MeromorphicForm(rational_from_json(f)));
        return n;
    }
    throw SchemaError("unknown kind \"" + k + "\"");
}

Json curve_to_json(const ProjectiveCurve& c) {
    Json a = Json::array();
    for (const auto& p : c.components()) a.push_back(poly_to_json(p));
    return Json{{"components", a}};
}

ProjectiveCurve curve_from_json(const Json& j) {
    const Json& C = field(j, "components");
    if (!C.is_array() || C.size() < 2) throw SchemaError("\"components\" needs at least two polynomials");
    std::vector<Polynomial> comps;
    for (const auto& p : C) comps.push_back(poly_from_json(p));
    bool all_zero = std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (all_zero) throw SchemaError("all components vanish");
    return ProjectiveCurve(comps);
}

Json hyperplanes_to_json(const std::vector<Hyperplane>& H) {
    Json a = Json::array();
    for (const auto& h : H) {
        Json row = Json::array();
        for (const auto& c : h.a) row.push_back(scalar_to_json(c));
        a.push_back(row);
    }
    return Json{{"hyperplanes", a}};
}

std::vector<Hyperplane> hyperplanes_from_json(const Json& j) {
    const Json& A = field(j, "hyperplanes");
    if (!A.is_array()) throw SchemaError("\"hyperplanes\" must be an array");
    std::vector<Hyperplane> H;
    size_t width = 0;
    for (const auto& row : A) {
        if (!row.is_array() || row.empty()) throw SchemaError("hyperplane must be a nonempty coefficient array");
        if (width && row.size() != width) throw SchemaError("hyperplanes have different lengths");
        width = row.size();
        Hyperplane h;
        for (const auto& c : row) h.a.push_back(scalar_from_json(c));
        h.label = "H" + std::to_string(H.size() + 1);
        H.push_back(std::move(h));
    }
    return H;
}

}  // namespace minsurf
