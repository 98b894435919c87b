#include "minsurf/tolerances.hpp"

#include <stdexcept>

namespace minsurf {

namespace {
Tolerances& storage() {
    static Tolerances t;
    return t;
}
}  // namespace

const Tolerances& tolerances() { return storage(); }

void set_tolerances(const Tolerances& t) { storage() = t; }

void apply_tolerance_override(Tolerances& t, const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("tolerance override must be KEY=VALUE: " + kv);
    std::string key = kv.substr(0, eq);
    double v = 0.0;
    try {
        size_t used = 0;
        v = std::stod(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad tolerance value in " + kv);
    }
    if (!(v > 0.0)) throw std::invalid_argument("tolerance must be positive: " + kv);
    if (key == "eps_root") t.eps_root = v;
    else if (key == "eps_res") t.eps_res = v;
    else if (key == "eps_match") t.eps_match = v;
    else if (key == "eps_per") t.eps_per = v;
    else if (key == "eps_zero") t.eps_zero = v;
    else if (key == "quad_tol") t.quad_tol = v;
    else if (key == "area_tol") t.area_tol = v;
    else throw std::invalid_argument("unknown tolerance key: " + key);
}

}  // namespace minsurf
