#include "minsurf/weierstrass.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace minsurf {

bool PuncturedSphere::is_puncture(const SpherePoint& p, double eps) const {
    return std::any_of(punctures.begin(), punctures.end(), [&](const SpherePoint& q) { return q.matches(p, eps); });
}

void PuncturedSphere::validate() const {
    for (size_t i = 0; i < punctures.size(); ++i)
        for (size_t j = i + 1; j < punctures.size(); ++j)
            if (punctures[i].matches(punctures[j], tolerances().eps_match))
                throw std::invalid_argument("duplicate puncture " + punctures[i].to_string());
}

const PuncturedSphere& domain_of(const WData& d) {
    return std::visit([](const auto& x) -> const PuncturedSphere& { return x.domain; }, d);
}

PuncturedSphere& domain_of(WData& d) {
    return std::visit([](auto& x) -> PuncturedSphere& { return x.domain; }, d);
}

int ambient_dim(const WData& d) {
    if (std::holds_alternative<WData3>(d)) return 3;
    if (std::holds_alternative<WData4>(d)) return 4;
    return int(std::get<WDataN>(d).phis.size());
}

std::string kind_name(const WData& d) {
    if (std::holds_alternative<WData3>(d)) return "r3";
    if (std::holds_alternative<WData4>(d)) return "r4";
    return "rn";
}

bool is_exact(const WData& d) {
    auto pts_exact = [](const PuncturedSphere& s) {
        return std::all_of(s.punctures.begin(), s.punctures.end(), [](const SpherePoint& p) { return p.is_exact(); });
    };
    if (auto* a = std::get_if<WData3>(&d)) return a->h.coeff.is_exact() && a->g.is_exact() && pts_exact(a->domain);
    if (auto* b = std::get_if<WData4>(&d))
        return b->h.coeff.is_exact() && b->g1.is_exact() && b->g2.is_exact() && pts_exact(b->domain);
    const auto& c = std::get<WDataN>(d);
    return pts_exact(c.domain) &&
           std::all_of(c.phis.begin(), c.phis.end(), [](const MeromorphicForm& f) { return f.coeff.is_exact(); });
}

namespace {
PuncturedSphere float_domain(const PuncturedSphere& s) {
    PuncturedSphere out;
    out.genus = s.genus;
    for (const auto& p : s.punctures) out.punctures.push_back(p.is_infinity() ? p : SpherePoint(Scalar(p.approx())));
    return out;
}
}  // namespace

WData to_float(const WData& d) {
    if (auto* a = std::get_if<WData3>(&d)) return WData3{float_domain(a->domain), a->h.to_float(), a->g.to_float()};
    if (auto* b = std::get_if<WData4>(&d))
        return WData4{float_domain(b->domain), b->h.to_float(), b->g1.to_float(), b->g2.to_float()};
    const auto& c = std::get<WDataN>(d);
    WDataN out{float_domain(c.domain), {}};
    for (const auto& f : c.phis) out.phis.push_back(f.to_float());
    return out;
}

void require_genus0(const WData& d) {
    int g = domain_of(d).genus;
    if (g != 0) throw AnalysisError("unsupported genus", "analysis requires genus 0, got " + std::to_string(g));
}

std::vector<MeromorphicForm> forms_from_data3(const WData3& d) {
    const RationalFunction& h = d.h.coeff;
    RationalFunction g2 = d.g * d.g;
    Scalar half = Scalar(ExactComplex(mpq_class(1, 2)));
    Scalar ihalf = Scalar(ExactComplex(mpq_class(0), mpq_class(1, 2)));
    return {MeromorphicForm(RationalFunction(half) * (RationalFunction(1) - g2) * h),
            MeromorphicForm(RationalFunction(ihalf) * (RationalFunction(1) + g2) * h), MeromorphicForm(d.g * h)};
}

std::vector<MeromorphicForm> forms_from_data4(const WData4& d) {
    const RationalFunction& h = d.h.coeff;
    RationalFunction G = d.g1 * d.g2;
    Scalar half = Scalar(ExactComplex(mpq_class(1, 2)));
    Scalar ihalf = Scalar(ExactComplex(mpq_class(0), mpq_class(1, 2)));
    return {MeromorphicForm(RationalFunction(half) * (RationalFunction(1) + G) * h),
            MeromorphicForm(RationalFunction(ihalf) * (RationalFunction(1) - G) * h),
            MeromorphicForm(RationalFunction(half) * (d.g1 - d.g2) * h),
            MeromorphicForm(RationalFunction(-ihalf) * (d.g1 + d.g2) * h)};
}

std::vector<MeromorphicForm> forms(const WData& d) {
    if (auto* a = std::get_if<WData3>(&d)) return forms_from_data3(*a);
    if (auto* b = std::get_if<WData4>(&d)) return forms_from_data4(*b);
    return std::get<WDataN>(d).phis;
}

WData3 data3_from_forms(const std::vector<MeromorphicForm>& phis, const PuncturedSphere& dom) {
    if (phis.size() != 3) throw std::invalid_argument("three forms expected");
    RationalFunction h = phis[0].coeff - RationalFunction(Scalar::i()) * phis[1].coeff;
    return WData3{dom, MeromorphicForm(h), phis[2].coeff / h};
}

RationalFunction quadric(const std::vector<MeromorphicForm>& phis) {
    RationalFunction s(0);
    for (const auto& f : phis) s = s + f.coeff * f.coeff;
    return s;
}

bool is_flat(const WData& d) {
    if (auto* a = std::get_if<WData3>(&d)) return a->g.is_constant();
    if (auto* b = std::get_if<WData4>(&d)) return b->g1.is_constant() && b->g2.is_constant();
    const auto& c = std::get<WDataN>(d);
    const MeromorphicForm* ref = nullptr;
    for (const auto& f : c.phis)
        if (!f.is_zero()) {
            ref = &f;
            break;
        }
    if (!ref) return true;
    for (const auto& f : c.phis)
        if (!(f.coeff / ref->coeff).is_constant()) return false;
    return true;
}

WData rotate(const WData& d, const Scalar& phase) {
    RationalFunction p(phase);
    if (auto* a = std::get_if<WData3>(&d)) return WData3{a->domain, MeromorphicForm(a->h.coeff * p), a->g};
    if (auto* b = std::get_if<WData4>(&d)) return WData4{b->domain, MeromorphicForm(b->h.coeff * p), b->g1, b->g2};
    WDataN out = std::get<WDataN>(d);
    for (auto& f : out.phis) f = MeromorphicForm(f.coeff * p);
    return out;
}

WData rotate_angle(const WData& d, double theta) {
    double q = theta / (M_PI / 2.0);
    long k = std::lround(q);
    if (std::abs(q - double(k)) < 1e-14) {
        static const Scalar units[4] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
        return rotate(d, units[((k % 4) + 4) % 4]);
    }
    return rotate(to_float(d), Scalar(std::polar(1.0, theta)));
}

namespace {

int pole_order(const RationalFunction& f, const SpherePoint& p, const Tolerances& tol) {
    if (f.is_zero()) return 0;
    return std::max(0, -f.order_at(p, tol));
}

// Candidate points where regularity can fail: supports of the divisors involved, plus infinity.
std::vector<SpherePoint> candidates(const std::vector<const RationalFunction*>& fs, const std::vector<MeromorphicForm>& ws,
                                    const Tolerances& tol) {
    Divisor all;
    for (const auto* f : fs)
        if (!f->is_zero()) {
            for (Divisor dv = divisor_of_function(*f, tol); const auto& e : dv.entries()) all.add(e.point, 1);
        }
    for (const auto& w : ws)
        if (!w.is_zero()) {
            for (Divisor dv = divisor_of_form(w, tol); const auto& e : dv.entries()) all.add(e.point, 1);
        }
    all.add(SpherePoint::infinity(), 1);
    all.sort();
    std::vector<SpherePoint> out;
    for (const auto& e : all.entries()) out.push_back(e.point);
    return out;
}

int min_form_order(const std::vector<MeromorphicForm>& phis, const SpherePoint& p, const Tolerances& tol) {
    int m = INT_MAX;
    for (const auto& f : phis)
        if (!f.is_zero()) m = std::min(m, f.order_at(p, tol));
    return m;
}

}  // namespace

RegularityReport regularity_check(const WData& d, const Tolerances& tol) {
    if (std::holds_alternative<WDataN>(d)) return regularity_from_forms(d, tol);
    RegularityReport rep;
    const PuncturedSphere& dom = domain_of(d);
    if (auto* a = std::get_if<WData3>(&d)) {
        if (a->h.is_zero()) throw std::invalid_argument("hdz must be nonzero");
        for (const auto& p : candidates({&a->g}, {a->h}, tol)) {
            if (dom.is_puncture(p, tol.eps_match)) continue;
            RegularityPoint rp{p, pole_order(a->g, p, tol), a->h.order_at(p, tol), true, ""};
            rp.ok = rp.h_order == 2 * rp.g_pole_order;
            if (!rp.ok) {
                if (rp.h_order < 0)
                    rp.note = "hdz has a pole in M";
                else if (rp.g_pole_order > 0)
                    rp.note = "pole of g of order " + std::to_string(rp.g_pole_order) + " needs a zero of hdz of order " +
                              std::to_string(2 * rp.g_pole_order);
                else
                    rp.note = "zero of hdz without a pole of g";
            }
            if (rp.g_pole_order > 0 || rp.h_order != 0) rep.points.push_back(rp);
            rep.pass = rep.pass && rp.ok;
        }
        return rep;
    }
    const auto& b = std::get<WData4>(d);
    if (b.h.is_zero()) throw std::invalid_argument("hdz must be nonzero");
    for (const auto& p : candidates({&b.g1, &b.g2}, {b.h}, tol)) {
        if (dom.is_puncture(p, tol.eps_match)) continue;
        RegularityPoint rp{p, pole_order(b.g1, p, tol) + pole_order(b.g2, p, tol), b.h.order_at(p, tol), true, ""};
        rp.ok = rp.h_order == rp.g_pole_order;
        if (!rp.ok) {
            if (rp.h_order < 0)
                rp.note = "hdz has a pole in M";
            else
                rp.note = "zero order of hdz differs from the pole order of g1*g2";
        }
        if (rp.g_pole_order > 0 || rp.h_order != 0) rep.points.push_back(rp);
        rep.pass = rep.pass && rp.ok;
    }
    return rep;
}

RegularityReport regularity_from_forms(const WData& d, const Tolerances& tol) {
    RegularityReport rep;
    const PuncturedSphere& dom = domain_of(d);
    auto phis = forms(d);
    if (std::all_of(phis.begin(), phis.end(), [](const MeromorphicForm& f) { return f.is_zero(); }))
        throw std::invalid_argument("all forms vanish");
    for (const auto& p : candidates({}, phis, tol)) {
        if (dom.is_puncture(p, tol.eps_match)) continue;
        int m = min_form_order(phis, p, tol);
        RegularityPoint rp{p, 0, m, m == 0, ""};
        if (m < 0) rp.note = "forms have a pole in M";
        if (m > 0) rp.note = "common zero of the forms in M";
        if (!rp.ok) rep.points.push_back(rp);
        rep.pass = rep.pass && rp.ok;
    }
    return rep;
}

namespace {

std::vector<RationalFunction> chart_coeffs(const std::vector<MeromorphicForm>& phis, bool at_inf) {
    std::vector<RationalFunction> out;
    for (const auto& f : phis) out.push_back(at_inf ? f.chart_at_infinity() : f.coeff);
    return out;
}

}  // namespace

Scalar metric_factor(const WData& d, const SpherePoint& z) {
    if (domain_of(d).is_puncture(z)) throw AnalysisError("end point", "metric evaluated at puncture " + z.to_string());
    auto coeffs = chart_coeffs(forms(d), z.is_infinity());
    Scalar pt = z.is_infinity() ? Scalar(0) : z.value();
    Scalar s(0);
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        Scalar v;
        try {
            v = c.eval(pt);
        } catch (const std::domain_error&) {
            throw AnalysisError("pole", "forms have a pole at " + z.to_string());
        }
        s += v.abs2();
    }
    return s * Scalar(ExactComplex(mpq_class(1, 2)));
}

Scalar metric_factor_product(const WData& d, const SpherePoint& z) {
    if (z.is_infinity()) throw std::invalid_argument("product formula needs a finite point");
    Scalar pt = z.value();
    Scalar quarter = Scalar(ExactComplex(mpq_class(1, 4)));
    if (auto* a = std::get_if<WData3>(&d)) {
        Scalar h = a->h.coeff.eval(pt), g = a->g.eval(pt);
        Scalar t = Scalar(1) + g.abs2();
        return h.abs2() * t * t * quarter;
    }
    if (auto* b = std::get_if<WData4>(&d)) {
        Scalar h = b->h.coeff.eval(pt), g1 = b->g1.eval(pt), g2 = b->g2.eval(pt);
        return h.abs2() * (Scalar(1) + g1.abs2()) * (Scalar(1) + g2.abs2()) * quarter;
    }
    return metric_factor(d, z);
}

EndReport end_orders(const WData& d, const Tolerances& tol) {
    EndReport rep;
    auto phis = forms(d);
    for (const auto& p : domain_of(d).punctures) {
        int m = min_form_order(phis, p, tol);
        int mu = std::max(0, -m);
        rep.ends.push_back({p, mu});
        rep.complete = rep.complete && mu >= 1;
        rep.algebraic_ends = rep.algebraic_ends && mu >= 2;
    }
    return rep;
}

}  // namespace minsurf
