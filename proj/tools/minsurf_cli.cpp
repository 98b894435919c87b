#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minsurf/catalog.hpp"
#include "minsurf/report.hpp"

using namespace minsurf;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct Options {
    std::string mode = "exact";
    std::vector<std::string> tol;
    std::string report = "md";
    long seed = -1;
    std::vector<std::string> params;
};

/// Thrown for bad user input; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << data;
}

Params parse_params(const Options& o) {
    Params p;
    for (const auto& kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value, got " + kv);
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (o.seed >= 0) p["seed"] = std::to_string(o.seed);
    return p;
}

struct Source {
    WData data;
    std::optional<WData> partner;
    std::vector<Hyperplane> hyperplanes;
    std::string label;
};

WData apply_mode(const WData& d, const Options& o, std::vector<std::string>& warnings) {
    if (o.mode == "float") return to_float(d);
    if (!is_exact(d)) warnings.push_back("coefficients are not exact; running in FLOAT mode");
    return d;
}

/// A readable file is parsed as data JSON; anything else is looked up in the catalog.
Source load(const std::string& what, const Options& o, std::vector<std::string>& warnings) {
    Source s;
    s.label = what;
    if (std::filesystem::is_regular_file(what)) {
        Json j = parse_json_text(read_file(what));
        s.data = apply_mode(data_from_json(j), o, warnings);
        if (j.contains("hyperplanes")) s.hyperplanes = hyperplanes_from_json(j);
        return s;
    }
    Params p = parse_params(o);
    CatalogEntry e = [&] {
        try {
            return catalog_get(what, p);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }();
    if (!e.data) throw AnalysisError(e.flag.empty() ? "unsupported" : e.flag, e.name + ": " + e.note);
    s.data = apply_mode(*e.data, o, warnings);
    if (e.partner) s.partner = apply_mode(*e.partner, o, warnings);
    s.hyperplanes = e.hyperplanes;
    return s;
}

void emit(const Options& o, const Json& j, const std::string& md) {
    if (o.report == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << md;
}

int run_unicity(const WData& a, const WData& b, const Options& o, const std::vector<std::string>& warnings) {
    TheoremReport r = analyze_unicity(a, b);
    for (const auto& w : warnings) r.warnings.push_back(w);
    Json j = theorem_report_to_json(r);
    j["schema"] = kSchemaVersion;
    emit(o, j, theorem_report_markdown(r));
    return r.pass() ? 0 : 1;
}

int cmd_analyze(const std::string& what, const Options& o, bool verify_only) {
    std::vector<std::string> warnings;
    Source s = load(what, o, warnings);
    if (s.partner) return run_unicity(s.data, *s.partner, o, warnings);
    AnalyzeOptions ao;
    ao.total_curvature = !verify_only;
    ao.hyperplanes = s.hyperplanes;
    AnalysisReport r = analyze(s.data, ao);
    for (const auto& w : warnings) r.warnings.push_back(w);
    if (verify_only) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["regularity"] = r.regularity.pass;
        j["theorems"] = r.theorems ? theorem_report_to_json(*r.theorems) : Json(nullptr);
        j["error"] = r.error_code.empty() ? Json(nullptr) : Json{{"code", r.error_code}, {"message", r.error_message}};
        j["warnings"] = r.warnings;
        j["pass"] = r.pass();
        std::string md = "# Verify " + what + ": " + std::string(r.pass() ? "PASS" : "FAIL") + "\n\n";
        if (!r.regularity.pass) md += "Regularity condition fails.\n";
        if (r.theorems) md += theorem_report_markdown(*r.theorems);
        if (!r.error_code.empty()) md += "**error** " + r.error_code + ": " + r.error_message + "\n";
        emit(o, j, md);
    } else {
        emit(o, analysis_to_json(r), analysis_markdown(r, s.data));
    }
    return r.pass() ? 0 : 1;
}

std::pair<int, int> parse_grid(const std::string& g) {
    auto x = g.find_first_of("xX");
    if (x == std::string::npos) throw UsageError("--grid expects RxT, e.g. 32x32");
    try {
        int r = std::stoi(g.substr(0, x)), t = std::stoi(g.substr(x + 1));
        if (r < 2 || t < 3) throw UsageError("--grid needs at least 2x3");
        return {r, t};
    } catch (const std::logic_error&) {
        throw UsageError("--grid expects RxT, e.g. 32x32");
    }
}

int cmd_mesh(const std::string& what, const std::string& grid, const std::string& out, const std::string& format,
             const Options& o) {
    std::vector<std::string> warnings;
    Source s = load(what, o, warnings);
    auto [R, T] = parse_grid(grid);
    GridSpec gs;
    gs.radial = R;
    gs.angular = T;
    Mesh m = immerse(s.data, std::nullopt, gs);
    std::string fmt = format;
    if (fmt.empty()) fmt = std::filesystem::path(out).extension() == ".ply" ? "ply" : "obj";
    ExportResult ex = [&] {
        try {
            return export_mesh(m, fmt);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    write_file(out, ex.data);
    Json j{{"schema", kSchemaVersion}, {"vertices", m.vertices.size()}, {"faces", m.faces.size()},
           {"slit", m.slit}, {"out", out}, {"warnings", warnings}};
    if (!ex.sidecar.empty()) {
        std::string side = out + ".json";
        write_file(side, ex.sidecar);
        j["sidecar"] = side;
    }
    std::ostringstream md;
    md << "Wrote " << out << ": " << m.vertices.size() << " vertices, " << m.faces.size() << " faces"
       << (m.slit ? " (slit domain)" : "") << "\n";
    emit(o, j, md.str());
    return 0;
}

int cmd_plucker(const std::string& file, const Options& o) {
    ProjectiveCurve c = curve_from_json(parse_json_text(read_file(file)));
    StationaryTotals st = stationary_totals(c);
    Json sig = st.sigma, orc = st.sigma_oracle;
    Json pts = Json::array();
    for (const auto& p : st.points) pts.push_back(Json{{"point", point_to_json(p.point)}, {"delta", p.delta}, {"stat_idx", p.stat_idx}});
    Json j{{"schema", kSchemaVersion}, {"r", st.r},           {"degree", st.deg},
           {"sigma", sig},            {"points", pts},         {"sigma_oracle", st.oracle_available ? orc : Json(nullptr)},
           {"plucker_lhs", st.plucker_lhs}, {"plucker_rhs", st.plucker_rhs},
           {"plucker_rhs_literal", st.plucker_rhs_literal}, {"plucker_ok", st.plucker_ok},
           {"oracle_ok", st.oracle_ok}};
    std::ostringstream md;
    md << "# Stationary indices\n\nr = " << st.r << ", degree = " << st.deg << "\n\n| i | sigma_i |\n|---|---|\n";
    for (size_t i = 0; i < st.sigma.size(); ++i) md << "| " << i << " | " << st.sigma[i] << " |\n";
    md << "\nPlucker: " << st.plucker_lhs << " = " << st.plucker_rhs << " (" << (st.plucker_ok ? "holds" : "FAILS") << ")\n";
    emit(o, j, md.str());
    return st.plucker_ok && (!st.oracle_available || st.oracle_ok) ? 0 : 1;
}

int cmd_hyperplanes(const std::string& file, int n, const Options& o) {
    auto H = hyperplanes_from_json(parse_json_text(read_file(file)));
    for (const auto& h : H)
        if (int(h.a.size()) != n + 1) throw UsageError("hyperplane " + h.label + " needs n+1 coefficients");
    bool gp = general_position(H, n);
    Json j{{"schema", kSchemaVersion}, {"n", n}, {"count", H.size()}, {"general_position", gp}};
    emit(o, j, std::string("General position in P^") + std::to_string(n) + ": " + (gp ? "yes" : "no") + "\n");
    return gp ? 0 : 1;
}

int cmd_unicity(const std::string& a, const std::string& b, const Options& o) {
    std::vector<std::string> warnings;
    if (b.empty()) {
        Source s = load(a, o, warnings);
        if (!s.partner) throw UsageError(a + " is not a unicity pair; give two data files");
        return run_unicity(s.data, *s.partner, o, warnings);
    }
    Source sa = load(a, o, warnings), sb = load(b, o, warnings);
    try {
        return run_unicity(sa.data, sb.data, o, warnings);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_catalog_list(const Options& o) {
    Json arr = Json::array();
    std::ostringstream md;
    for (const auto& s : catalog_list()) {
        arr.push_back(Json{{"name", s.name}, {"title", s.title}, {"kind", s.kind}, {"flag", s.flag}});
        md << s.name << "\t" << s.kind << "\t" << s.title << (s.flag.empty() ? "" : "\t[" + s.flag + "]") << "\n";
    }
    emit(o, Json{{"schema", kSchemaVersion}, {"entries", arr}}, md.str());
    return 0;
}

int cmd_catalog_show(const std::string& name, const std::string& emit_path, const Options& o) {
    CatalogEntry e = [&] {
        try {
            return catalog_get(name, parse_params(o));
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }();
    Json j{{"schema", kSchemaVersion}, {"name", e.name}, {"title", e.title}, {"flag", e.flag}, {"note", e.note}};
    j["params"] = e.params;
    Json exp = Json::object();
    for (const auto& [k, v] : e.expected.facts) exp[k] = v;
    if (e.expected.periods) exp["periods"] = *e.expected.periods ? "pass" : "fail";
    if (e.expected.tau_over_pi) exp["tau_over_pi"] = *e.expected.tau_over_pi;
    exp["mode"] = e.expected.mode;
    j["expected"] = exp;
    if (e.data) j["data"] = data_to_json(*e.data);
    if (e.partner) j["partner"] = data_to_json(*e.partner);
    if (!e.hyperplanes.empty()) j["hyperplanes"] = hyperplanes_to_json(e.hyperplanes)["hyperplanes"];
    if (!emit_path.empty()) {
        if (!e.data) throw UsageError(name + " has no Weierstrass data to emit");
        Json d = data_to_json(*e.data);
        if (!e.hyperplanes.empty()) d["hyperplanes"] = j["hyperplanes"];
        write_file(emit_path, d.dump(2) + "\n");
    }
    std::ostringstream md;
    md << "# " << e.name << "\n\n" << e.title << "\n\n" << e.note << "\n\n| expected | value |\n|---|---|\n";
    for (const auto& [k, v] : exp.items()) md << "| " << k << " | " << (v.is_string() ? v.get<std::string>() : v.dump()) << " |\n";
    emit(o, j, md.str());
    return 0;
}

void apply_tolerances(const Options& o) {
    Tolerances t = tolerances();
    if (const char* env = std::getenv("MINSURF_TOL")) {
        std::stringstream ss(env);
        std::string kv;
        while (std::getline(ss, kv, ','))
            if (!kv.empty()) apply_tolerance_override(t, kv);
    }
    for (const auto& kv : o.tol) apply_tolerance_override(t, kv);
    set_tolerances(t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass data analysis for minimal surfaces"};
    app.set_version_flag("--version", std::string("minsurf ") + kToolVersion + " (report schema " + kSchemaVersion + ")");
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options o;
    app.add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", o.tol, "tolerance override KEY=VALUE (repeatable)");
    app.add_option("--report", o.report, "json or md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--seed", o.seed, "seed for sampled parameters");
    app.add_option("--param", o.params, "catalog parameter KEY=VALUE (repeatable)");

    std::string target, target_b, out, grid = "32x32", format, emit_path, file;
    int n = 0;

    auto* analyze = app.add_subcommand("analyze", "full analysis report");
    analyze->add_option("source", target, "data file or catalog name")->required();
    auto* verify = app.add_subcommand("verify", "theorem checks only");
    verify->add_option("source", target, "data file or catalog name")->required();
    auto* mesh = app.add_subcommand("mesh", "integrate the immersion and export a mesh");
    mesh->add_option("source", target, "data file or catalog name")->required();
    mesh->add_option("--grid", grid, "radial x angular samples, e.g. 32x32");
    mesh->add_option("--out", out, "output path")->required();
    mesh->add_option("--format", format, "obj, ply or json");
    auto* curve = app.add_subcommand("curve", "projective curve tools");
    auto* plucker = curve->add_subcommand("plucker", "stationary indices and the Plucker identity");
    plucker->add_option("file", file, "curve JSON")->required();
    curve->require_subcommand(1);
    auto* hyper = app.add_subcommand("hyperplanes", "hyperplane arrangement tools");
    auto* hcheck = hyper->add_subcommand("check", "general position test");
    hcheck->add_option("file", file, "arrangement JSON")->required();
    hcheck->add_option("--n", n, "projective dimension")->required();
    hyper->require_subcommand(1);
    auto* unicity = app.add_subcommand("unicity", "shared value count for two surfaces");
    unicity->add_option("a", target, "data file or catalog pair")->required();
    unicity->add_option("b", target_b, "second data file");
    auto* catalog = app.add_subcommand("catalog", "built-in examples");
    auto* clist = catalog->add_subcommand("list", "list entries");
    auto* cshow = catalog->add_subcommand("show", "show one entry");
    cshow->add_option("name", target, "entry name")->required();
    cshow->add_option("--emit", emit_path, "write the data JSON to this file");
    catalog->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        apply_tolerances(o);
        if (*analyze) return cmd_analyze(target, o, false);
        if (*verify) return cmd_analyze(target, o, true);
        if (*mesh) return cmd_mesh(target, grid, out, format, o);
        if (*plucker) return cmd_plucker(file, o);
        if (*hcheck) return cmd_hyperplanes(file, n, o);
        if (*unicity) return cmd_unicity(target, target_b, o);
        if (*clist) return cmd_catalog_list(o);
        if (*cshow) return cmd_catalog_show(target, emit_path, o);
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisError& e) {
        Json j{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
