#include "minsurf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minsurf {

// ---- Polynomial ----

Polynomial::Polynomial(std::vector<Scalar> c) : c_(std::move(c)) { strip(); }

void Polynomial::strip() {
    while (!c_.empty()) {
        const Scalar& t = c_.back();
        if (t.is_exact() ? t.exact().is_zero() : t.value() == cplx(0.0, 0.0))
            c_.pop_back();
        else
            break;
    }
}

Polynomial Polynomial::monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(size_t(k) + 1, Scalar(0));
    v[size_t(k)] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Scalar>& roots) {
    Polynomial p(1);
    for (const auto& r : roots) p = p * Polynomial(std::vector<Scalar>{-r, Scalar(1)});
    return p;
}

bool Polynomial::is_exact() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar Polynomial::coeff(int k) const {
    if (k < 0 || k >= int(c_.size())) return Scalar(0);
    return c_[size_t(k)];
}

Scalar Polynomial::lead() const {
    if (c_.empty()) return Scalar(0);
    return c_.back();
}

Scalar Polynomial::operator()(const Scalar& z) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
}

cplx Polynomial::eval(cplx z) const {
    cplx r(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + it->value();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Scalar> d;
    d.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(long(k)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::to_float() const {
    std::vector<Scalar> d;
    for (const auto& s : c_) d.push_back(s.to_float());
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    return scaled(Scalar(1) / lead());
}

Polynomial Polynomial::trimmed(double rel) const {
    if (is_exact() || c_.empty()) return *this;
    double m = norm_inf();
    std::vector<Scalar> d = c_;
    while (!d.empty() && d.back().abs() <= rel * m) d.pop_back();
    for (auto& s : d)
        if (s.abs() <= rel * m) s = Scalar(cplx(0.0, 0.0));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shift(const Scalar& z0) const {
    // Repeated synthetic division (Taylor shift).
    std::vector<Scalar> a = c_;
    int n = int(a.size());
    for (int i = 0; i < n; ++i)
        for (int k = n - 2; k >= i; --k) a[size_t(k)] = a[size_t(k)] + z0 * a[size_t(k) + 1];
    return Polynomial(std::move(a));
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("reversal degree too small");
    std::vector<Scalar> d(size_t(n) + 1, Scalar(0));
    for (size_t k = 0; k < c_.size(); ++k) d[size_t(n) - k] = c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Polynomial(*it);
    return r;
}

double Polynomial::norm_inf() const {
    double m = 0.0;
    for (const auto& s : c_) m = std::max(m, s.abs());
    return m;
}

std::vector<cplx> Polynomial::numeric() const {
    std::vector<cplx> v;
    v.reserve(c_.size());
    for (const auto& s : c_) v.push_back(s.value());
    return v;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.c_.size() && k < b.c_.size())
            r[k] = a.c_[k] + b.c_[k];
        else if (k < a.c_.size())
            r[k] = a.c_[k];
        else
            r[k] = b.c_[k];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_exact() && a.c_[i].exact().is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    int db = b.degree();
    std::vector<Scalar> r = a.c_;
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Scalar> q(size_t(a.degree() - db) + 1, Scalar(0));
    Scalar inv = Scalar(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        Scalar t = r[size_t(k)] * inv;
        q[size_t(k - db)] = t;
        for (int j = 0; j <= db; ++j) r[size_t(k - db + j)] -= t * b.c_[size_t(j)];
        r[size_t(k)] = Scalar(0);
        if (!t.is_exact()) r[size_t(k)] = Scalar(cplx(0.0, 0.0));
    }
    r.resize(size_t(db));
    Polynomial rem(std::move(r));
    if (!rem.is_exact()) {
        double scale = std::max(a.norm_inf(), 1e-300);
        std::vector<Scalar> rc = rem.coeffs();
        for (auto& s : rc)
            if (s.abs() <= tolerances().eps_zero * scale) s = Scalar(cplx(0.0, 0.0));
        rem = Polynomial(std::move(rc));
    }
    return {Polynomial(std::move(q)), rem};
}

bool Polynomial::equals(const Polynomial& o, double tol) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t k = 0; k < n; ++k) {
        Scalar x = coeff(int(k)), y = o.coeff(int(k));
        if (x.is_exact() && y.is_exact()) {
            if (!(x.exact() == y.exact())) return false;
        } else if (std::abs(x.value() - y.value()) > tol * std::max(1.0, std::max(norm_inf(), o.norm_inf()))) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].to_string();
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    return first ? "0" : os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (!a.is_exact() || !b.is_exact()) throw std::domain_error("exact gcd requested on FLOAT polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a0 = gcd(f, df);
    Polynomial b = divmod(f, a0).first;
    Polynomial c = divmod(df, a0).first;
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
    }
    return out;
}

// ---- SpherePoint ----

SpherePoint::SpherePoint(const Scalar& s) : inf_(false), approx_(s.value()) {
    if (s.is_exact()) exact_ = s.exact();
}

SpherePoint SpherePoint::infinity() {
    SpherePoint p;
    p.inf_ = true;
    p.approx_ = cplx(INFINITY, 0.0);
    return p;
}

Scalar SpherePoint::value() const {
    if (inf_) throw std::domain_error("value of the point at infinity");
    if (exact_) return Scalar(*exact_);
    return Scalar(approx_);
}

double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf_ && b.inf_) return 0.0;
    if (a.inf_) return 1.0 / std::sqrt(1.0 + std::norm(b.approx_));
    if (b.inf_) return 1.0 / std::sqrt(1.0 + std::norm(a.approx_));
    return std::abs(a.approx_ - b.approx_) / (std::sqrt(1.0 + std::norm(a.approx_)) * std::sqrt(1.0 + std::norm(b.approx_)));
}

bool SpherePoint::matches(const SpherePoint& o, double eps) const {
    if (inf_ || o.inf_) {
        if (inf_ && o.inf_) return true;
        if (is_exact() && o.is_exact()) return false;
        return chordal(*this, o) <= eps;
    }
    if (exact_ && o.exact_) return *exact_ == *o.exact_;
    return chordal(*this, o) <= eps;
}

bool operator<(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf_ != b.inf_) return b.inf_;
    if (a.inf_) return false;
    double tol = 1e-9;
    if (std::abs(a.approx_.real() - b.approx_.real()) > tol) return a.approx_.real() < b.approx_.real();
    if (std::abs(a.approx_.imag() - b.approx_.imag()) > tol) return a.approx_.imag() < b.approx_.imag();
    return false;
}

std::string SpherePoint::to_string() const {
    if (inf_) return "inf";
    if (exact_) return exact_->to_string();
    return Scalar(approx_).to_string();
}

// ---- Divisor ----

void Divisor::add(const SpherePoint& p, int m, double eps) {
    if (m == 0) return;
    for (auto it = e_.begin(); it != e_.end(); ++it) {
        if (it->point.matches(p, eps)) {
            it->mult += m;
            // Prefer an exact representative.
            if (!it->point.is_exact() && p.is_exact()) it->point = p;
            if (it->mult == 0) e_.erase(it);
            return;
        }
    }
    e_.push_back({p, m});
}

void Divisor::add(const Divisor& d, int sign) {
    for (const auto& e : d.e_) add(e.point, sign * e.mult);
}

int Divisor::total() const {
    int t = 0;
    for (const auto& e : e_) t += e.mult;
    return t;
}

int Divisor::at(const SpherePoint& p, double eps) const {
    for (const auto& e : e_)
        if (e.point.matches(p, eps)) return e.mult;
    return 0;
}

void Divisor::sort() {
    std::stable_sort(e_.begin(), e_.end(), [](const Entry& a, const Entry& b) { return a.point < b.point; });
}

std::string Divisor::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < e_.size(); ++k) {
        if (k) os << ", ";
        os << e_[k].point.to_string() << ":" << e_[k].mult;
    }
    os << "}";
    return os.str();
}

// ---- orders ----

bool field_compatible(const Polynomial& p, const Scalar& z) {
    if (!z.is_exact()) return false;
    ExactComplex acc = z.exact();
    for (const auto& c : p.coeffs()) {
        if (!c.is_exact() || !ExactComplex::compatible(acc, c.exact())) return false;
        if (c.exact().m() != 0) acc = c.exact();
    }
    return true;
}

int poly_order_at(const Polynomial& p, const SpherePoint& z, const Tolerances& tol) {
    if (p.is_zero()) throw std::domain_error("order of the zero polynomial");
    if (z.is_infinity()) throw std::domain_error("finite point expected");
    if (p.is_exact() && z.is_exact() && field_compatible(p, z.value())) {
        Scalar z0 = z.value();
        Polynomial q = p;
        Polynomial lin(std::vector<Scalar>{-z0, Scalar(1)});
        int k = 0;
        while (q.degree() >= 1 && q(z0).is_zero()) {
            q = divmod(q, lin).first;
            ++k;
        }
        return k;
    }
    cplx z0 = z.approx();
    double r = std::max(1.0, std::abs(z0));
    double scale = 0.0, pw = 1.0;
    for (const auto& c : p.coeffs()) {
        scale += c.abs() * pw;
        pw *= r;
    }
    Polynomial s = p.to_float().shift(Scalar(z0));
    int k = 0;
    while (k < s.degree() && s.coeff(k).abs() <= tol.eps_res * scale) ++k;
    return k;
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) { reduce(); }

void RationalFunction::reduce() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (is_exact()) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    } else {
        num_ = num_.to_float().trimmed(tolerances().eps_zero);
        den_ = den_.to_float().trimmed(tolerances().eps_zero);
        if (num_.is_zero()) {
            den_ = Polynomial(Scalar(cplx(1.0, 0.0)));
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            try {
                Divisor dr = poly_roots(den_);
                for (const auto& e : dr.entries()) {
                    int k = std::min(e.mult, poly_order_at(num_, e.point));
                    Polynomial lin(std::vector<Scalar>{-Scalar(e.point.approx()), Scalar(cplx(1.0, 0.0))});
                    for (int j = 0; j < k; ++j) {
                        num_ = divmod(num_, lin).first;
                        den_ = divmod(den_, lin).first;
                    }
                }
            } catch (const std::domain_error&) {
                // Ambiguous clustering: leave unreduced.
            }
        }
    }
    Scalar l = den_.lead();
    num_ = num_.scaled(Scalar(1) / l);
    den_ = den_.scaled(Scalar(1) / l);
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

SpherePoint RationalFunction::operator()(const SpherePoint& p) const {
    if (p.is_infinity()) {
        if (num_.degree() > den_.degree()) return SpherePoint::infinity();
        if (num_.degree() < den_.degree()) return SpherePoint(Scalar(0));
        return SpherePoint(num_.lead() / den_.lead());
    }
    Scalar z = p.value();
    Scalar d = den_(z);
    if (d.is_exact() ? d.exact().is_zero() : d.value() == cplx(0.0, 0.0)) return SpherePoint::infinity();
    return SpherePoint(num_(z) / d);
}

Scalar RationalFunction::eval(const Scalar& z) const {
    Scalar d = den_(z);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_(z) / d;
}

cplx RationalFunction::eval(cplx z) const { return num_.eval(z) / den_.eval(z); }

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& q) const {
    int d = degree();
    const Polynomial& P = q.num_;
    const Polynomial& Q = q.den_;
    std::vector<Polynomial> Pp(size_t(d) + 1), Qp(size_t(d) + 1);
    Pp[0] = Polynomial(1);
    Qp[0] = Polynomial(1);
    for (int k = 1; k <= d; ++k) {
        Pp[size_t(k)] = Pp[size_t(k) - 1] * P;
        Qp[size_t(k)] = Qp[size_t(k) - 1] * Q;
    }
    Polynomial n, m;
    for (int i = 0; i <= d; ++i) {
        Polynomial t = Pp[size_t(i)] * Qp[size_t(d - i)];
        n = n + t.scaled(num_.coeff(i));
        m = m + t.scaled(den_.coeff(i));
    }
    return RationalFunction(n, m);
}

RationalFunction RationalFunction::to_float() const { return RationalFunction(num_.to_float(), den_.to_float()); }

RationalFunction RationalFunction::at_inverse() const {
    int n = degree();
    return RationalFunction(num_.reversed(n), den_.reversed(n));
}

int RationalFunction::order_at(const SpherePoint& p, const Tolerances& tol) const {
    if (num_.is_zero()) throw std::domain_error("order of the zero function");
    if (p.is_infinity()) return den_.degree() - num_.degree();
    return poly_order_at(num_, p, tol) - poly_order_at(den_, p, tol);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

bool RationalFunction::equals(const RationalFunction& o, double tol) const {
    if (is_exact() && o.is_exact()) return num_.equals(o.num_) && den_.equals(o.den_);
    return (num_ * o.den_).equals(o.num_ * den_, tol);
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0 && den_.lead().is_exact() && den_.lead().exact() == ExactComplex(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction moebius_postcompose(const RationalFunction& f, const Scalar& a, const Scalar& b, const Scalar& c,
                                     const Scalar& d) {
    Scalar det = a * d - b * c;
    double scale = std::max({a.abs() * d.abs(), b.abs() * c.abs(), 1e-300});
    if (det.is_exact() ? det.exact().is_zero() : det.abs() <= tolerances().eps_zero * scale)
        throw std::invalid_argument("degenerate Moebius transformation (ad - bc = 0)");
    return RationalFunction(f.num().scaled(a) + f.den().scaled(b), f.num().scaled(c) + f.den().scaled(d));
}

// ---- forms ----

RationalFunction MeromorphicForm::chart_at_infinity() const {
    RationalFunction inv = coeff.at_inverse();
    return RationalFunction(inv.num().scaled(Scalar(-1)), inv.den() * Polynomial::monomial(Scalar(1), 2));
}

int MeromorphicForm::order_at(const SpherePoint& p, const Tolerances& tol) const {
    if (p.is_infinity()) return coeff.order_at(p, tol) - 2;
    return coeff.order_at(p, tol);
}

Divisor divisor_of_function(const RationalFunction& f, const Tolerances& tol) {
    if (f.is_zero()) throw std::domain_error("undefined divisor");
    Divisor d;
    if (f.num().degree() > 0) d.add(poly_roots(f.num(), tol), 1);
    if (f.den().degree() > 0) d.add(poly_roots(f.den(), tol), -1);
    d.add(SpherePoint::infinity(), f.den().degree() - f.num().degree());
    d.sort();
    return d;
}

Divisor divisor_of_form(const MeromorphicForm& w, const Tolerances& tol) {
    if (w.is_zero()) throw std::domain_error("undefined divisor");
    Divisor d;
    const auto& f = w.coeff;
    if (f.num().degree() > 0) d.add(poly_roots(f.num(), tol), 1);
    if (f.den().degree() > 0) d.add(poly_roots(f.den(), tol), -1);
    d.add(SpherePoint::infinity(), f.den().degree() - f.num().degree() - 2);
    d.sort();
    return d;
}

}  // namespace minsurf
