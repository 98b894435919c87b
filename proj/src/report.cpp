#include "minsurf/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace minsurf {

bool AnalysisReport::pass() const {
    return error_code.empty() && regularity.pass && (!theorems || theorems->pass());
}

AnalysisReport analyze(const WData& d, const AnalyzeOptions& opt, const Tolerances& tol) {
    AnalysisReport rep;
    rep.kind = kind_name(d);
    rep.input = data_to_json(d);
    try {
        require_genus0(d);
        rep.regularity = regularity_check(d, tol);
        if (!rep.regularity.pass) {
            rep.warnings.push_back("regularity condition fails; theorem checks skipped");
            return rep;
        }
        rep.classification = classify(d, tol);
        if (rep.classification->tag == SurfaceClass::flat) {
            rep.warnings.push_back("flat: the Gauss map is constant");
            return rep;
        }
        if (auto* a = std::get_if<WData3>(&d)) {
            rep.theorems = verify_r3(*a, tol);
        } else if (auto* b = std::get_if<WData4>(&d)) {
            rep.theorems = verify_r4(*b, tol);
        } else {
            rep.theorems = verify_rn(std::get<WDataN>(d), opt.hyperplanes, tol);
        }
        if (opt.total_curvature) rep.tau = total_curvature(d, tol);
    } catch (const AnalysisError& e) {
        rep.error_code = e.code();
        rep.error_message = e.what();
    }
    return rep;
}

TheoremReport analyze_unicity(const WData& a, const WData& b, const Tolerances& tol) {
    if (a.index() != b.index()) throw std::invalid_argument("unicity needs two data of the same kind");
    if (!(domain_of(a).punctures.size() == domain_of(b).punctures.size()))
        throw std::invalid_argument("unicity needs the same basic domain");
    const auto& pa = domain_of(a).punctures;
    const auto& pb = domain_of(b).punctures;
    for (const auto& p : pa)
        if (!domain_of(b).is_puncture(p, tol.eps_match)) throw std::invalid_argument("unicity needs the same basic domain");
    (void)pb;
    if (auto* x = std::get_if<WData3>(&a)) return verify_unicity_r3(*x, std::get<WData3>(b), tol);
    if (auto* y = std::get_if<WData4>(&a)) return verify_unicity_r4(*y, std::get<WData4>(b), tol);
    throw std::invalid_argument("unicity is defined for R3 and R4 data");
}

Json check_to_json(const TheoremCheck& c) {
    return Json{{"theorem", c.id},           {"form", c.form},       {"statement", c.statement},
                {"lhs", c.lhs.to_string()},  {"rhs", c.rhs.to_string()}, {"relation", c.relation},
                {"applicable", c.applicable}, {"pass", c.pass},      {"equality", c.equality},
                {"note", c.note}};
}

Json theorem_report_to_json(const TheoremReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    Json facts = Json::array();
    for (const auto& [k, v] : r.facts) facts.push_back(Json::array({k, v}));
    return Json{{"kind", r.kind},         {"pass", r.pass()},     {"checks", checks},
                {"facts", facts},         {"warnings", r.warnings}, {"non_hyperbolic", r.non_hyperbolic}};
}

Json quadrature_to_json(const QuadratureResult& q) {
    return Json{{"value", q.value}, {"error", q.error}, {"subdivisions", q.subdivisions}};
}

namespace {

Json regularity_json(const RegularityReport& r) {
    Json pts = Json::array();
    for (const auto& p : r.points)
        pts.push_back(Json{{"point", point_to_json(p.point)},
                           {"g_pole_order", p.g_pole_order},
                           {"h_order", p.h_order},
                           {"ok", p.ok},
                           {"note", p.note}});
    return Json{{"pass", r.pass}, {"points", pts}};
}

Json classification_json(const Classification& c) {
    Json ends = Json::array();
    for (const auto& e : c.ends.ends) ends.push_back(Json{{"puncture", point_to_json(e.puncture)}, {"mu", e.mu}});
    Json per = Json::array();
    for (const auto& e : c.periods.entries)
        per.push_back(Json{{"puncture", point_to_json(e.puncture)},
                           {"form", e.form + 1},
                           {"residue", scalar_to_json(e.residue)},
                           {"real_period", e.real_period},
                           {"ok", e.ok}});
    return Json{{"class", class_name(c.tag)},
                {"ends", Json{{"entries", ends}, {"complete", c.ends.complete}, {"algebraic", c.ends.algebraic_ends}}},
                {"periods", Json{{"pass", c.periods.pass}, {"exact", c.periods.exact}, {"entries", per}}}};
}

std::string fmt(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

Json analysis_to_json(const AnalysisReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = r.kind;
    j["input"] = r.input;
    j["regularity"] = regularity_json(r.regularity);
    j["classification"] = r.classification ? classification_json(*r.classification) : Json(nullptr);
    j["theorems"] = r.theorems ? theorem_report_to_json(*r.theorems) : Json(nullptr);
    j["total_curvature"] = r.tau ? quadrature_to_json(*r.tau) : Json(nullptr);
    j["warnings"] = r.warnings;
    j["error"] = r.error_code.empty() ? Json(nullptr) : Json{{"code", r.error_code}, {"message", r.error_message}};
    j["pass"] = r.pass();
    return j;
}

std::string theorem_report_markdown(const TheoremReport& r) {
    std::ostringstream os;
    os << "### " << r.kind << " checks: " << (r.pass() ? "PASS" : "FAIL") << "\n\n";
    if (!r.facts.empty()) {
        os << "| quantity | value |\n|---|---|\n";
        for (const auto& [k, v] : r.facts) os << "| " << k << " | " << v << " |\n";
        os << "\n";
    }
    if (!r.checks.empty()) {
        os << "| check | form | statement | lhs | rel | rhs | result |\n|---|---|---|---|---|---|---|\n";
        for (const auto& c : r.checks) {
            std::string res = !c.applicable ? "n/a (" + c.note + ")" : c.pass ? (c.equality ? "pass, equality" : "pass") : "FAIL";
            os << "| " << c.id << " | " << c.form << " | " << c.statement << " | " << c.lhs.to_string() << " | "
               << c.relation << " | " << c.rhs.to_string() << " | " << res << " |\n";
        }
        os << "\n";
    }
    for (const auto& w : r.warnings) os << "- warning: " << w << "\n";
    return os.str();
}

std::string order_table_markdown(const WData3& d, const Tolerances& tol) {
    std::vector<SpherePoint> pts;
    auto add = [&](const SpherePoint& p) {
        for (const auto& q : pts)
            if (q.matches(p, tol.eps_match)) return;
        pts.push_back(p);
    };
    for (Divisor dv = divisor_of_function(d.g, tol); const auto& e : dv.entries()) add(e.point);
    for (Divisor dv = divisor_of_form(d.h, tol); const auto& e : dv.entries()) add(e.point);
    for (const auto& p : d.domain.punctures) add(p);
    std::sort(pts.begin(), pts.end());
    MeromorphicForm gh(d.g * d.h.coeff);
    std::ostringstream os;
    os << "| point | in M | ord g | ord hdz | ord ghdz |\n|---|---|---|---|---|\n";
    for (const auto& p : pts) {
        os << "| " << p.to_string() << " | " << (d.domain.is_puncture(p, tol.eps_match) ? "no" : "yes") << " | "
           << d.g.order_at(p, tol) << " | " << d.h.order_at(p, tol) << " | " << gh.order_at(p, tol) << " |\n";
    }
    return os.str();
}

std::string analysis_markdown(const AnalysisReport& r, const WData& d) {
    std::ostringstream os;
    os << "# Analysis (" << r.kind << "): " << (r.pass() ? "PASS" : "FAIL") << "\n\n";
    os << "## Regularity: " << (r.regularity.pass ? "pass" : "FAIL") << "\n\n";
    os << "| point | g pole order | h order | ok | note |\n|---|---|---|---|---|\n";
    for (const auto& p : r.regularity.points)
        os << "| " << p.point.to_string() << " | " << p.g_pole_order << " | " << p.h_order << " | "
           << (p.ok ? "yes" : "no") << " | " << p.note << " |\n";
    os << "\n";
    if (auto* a = std::get_if<WData3>(&d); a && r.regularity.pass) {
        os << "## Zeros and poles\n\n";
        try {
            os << order_table_markdown(*a) << "\n";
        } catch (const std::exception& e) {
            os << "(unavailable: " << e.what() << ")\n\n";
        }
    }
    if (r.classification) {
        const auto& c = *r.classification;
        os << "## Classification: " << class_name(c.tag) << "\n\n| end | mu |\n|---|---|\n";
        for (const auto& e : c.ends.ends) os << "| " << e.puncture.to_string() << " | " << e.mu << " |\n";
        os << "\nPeriods: " << (c.periods.pass ? "pass" : "fail") << "\n\n";
        if (!c.periods.entries.empty()) {
            os << "| puncture | form | residue | real period | ok |\n|---|---|---|---|---|\n";
            for (const auto& e : c.periods.entries)
                os << "| " << e.puncture.to_string() << " | " << e.form + 1 << " | " << e.residue.to_string() << " | "
                   << fmt(e.real_period) << " | " << (e.ok ? "yes" : "no") << " |\n";
            os << "\n";
        }
    }
    if (r.theorems) os << theorem_report_markdown(*r.theorems) << "\n";
    if (r.tau)
        os << "Total curvature: " << fmt(r.tau->value) << " (error " << fmt(r.tau->error) << ", "
           << r.tau->subdivisions << " panels)\n\n";
    for (const auto& w : r.warnings) os << "- warning: " << w << "\n";
    if (!r.error_code.empty()) os << "\n**error** " << r.error_code << ": " << r.error_message << "\n";
    return os.str();
}

}  // namespace minsurf
