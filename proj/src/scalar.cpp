#include "minsurf/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace minsurf {

GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    mpq_class n = b.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    GaussQ p = a * b.conj();
    return {p.re / n, p.im / n};
}

namespace {

bool perfect_square(const mpz_class& z, mpz_class& root) {
    if (sgn(z) < 0) return false;
    if (!mpz_perfect_square_p(z.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return true;
}

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
    mpz_class rn, rd;
    if (!perfect_square(q.get_num(), rn) || !perfect_square(q.get_den(), rd)) return false;
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

// Split m = s^2 * r with trial division; r keeps any factor we could not resolve.
void split_square(long m, long& s, long& r) {
    s = 1;
    r = m;
    for (long p = 2; p * p <= r && p < 100000; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            s *= p;
        }
    }
}

std::string real_string(const mpq_class& q0, const mpq_class& q1, long m) {
    if (sgn(q1) == 0 || m == 0) return q0.get_str();
    std::string tail = q1.get_str() + "*sqrt(" + std::to_string(m) + ")";
    if (sgn(q0) == 0) return tail;
    return q0.get_str() + (sgn(q1) > 0 ? "+" : "") + tail;
}

}  // namespace

ExactComplex::ExactComplex(GaussQ a, GaussQ b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    normalize();
}

void ExactComplex::normalize() {
    if (m_ < 0) {
        b_ = b_ * GaussQ(0, 1);
        m_ = -m_;
    }
    if (m_ > 1) {
        long s, r;
        split_square(m_, s, r);
        if (s != 1) {
            b_ = b_ * GaussQ(mpq_class(s));
            m_ = r;
        }
    }
    if (m_ == 1) {
        a_ = a_ + b_;
        b_ = GaussQ();
        m_ = 0;
    }
    if (m_ == 0) b_ = GaussQ();
    if (b_.is_zero()) m_ = 0;
}

ExactComplex ExactComplex::sqrt_rational(const mpq_class& q) {
    if (sgn(q) == 0) return ExactComplex();
    mpq_class aq = abs(q);
    mpq_class r;
    ExactComplex out;
    if (rational_sqrt(aq, r)) {
        out = ExactComplex(r);
    } else {
        // sqrt(p/d) = sqrt(p*d)/d
        mpz_class pd = aq.get_num() * aq.get_den();
        if (!pd.fits_slong_p()) throw std::domain_error("square root argument too large");
        out = ExactComplex(GaussQ(), GaussQ(mpq_class(1, aq.get_den())), pd.get_si());
    }
    if (sgn(q) < 0) out = out * ExactComplex::i();
    return out;
}

long ExactComplex::common_m(const ExactComplex& x, const ExactComplex& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
    throw std::domain_error("incompatible quadratic extensions sqrt(" + std::to_string(x.m_) + ") and sqrt(" +
                            std::to_string(y.m_) + ")");
}

ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
    long m = ExactComplex::common_m(x, y);
    return ExactComplex(x.a_ + y.a_, x.b_ + y.b_, m);
}

ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
    long m = ExactComplex::common_m(x, y);
    return ExactComplex(x.a_ - y.a_, x.b_ - y.b_, m);
}

ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    long m = ExactComplex::common_m(x, y);
    GaussQ a = x.a_ * y.a_;
    if (m != 0) a = a + GaussQ(mpq_class(m)) * x.b_ * y.b_;
    GaussQ b = x.a_ * y.b_ + x.b_ * y.a_;
    return ExactComplex(a, b, m);
}

ExactComplex ExactComplex::operator-() const { return ExactComplex(-a_, -b_, m_); }

bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.m_ == y.m_);
}

ExactComplex ExactComplex::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (m_ == 0) return ExactComplex(GaussQ(1) / a_);
    GaussQ n = a_ * a_ - GaussQ(mpq_class(m_)) * b_ * b_;
    return ExactComplex(a_ / n, -(b_ / n), m_);
}

ExactComplex ExactComplex::conj() const { return ExactComplex(a_.conj(), b_.conj(), m_); }

ExactComplex ExactComplex::real_part() const { return ExactComplex(GaussQ(a_.re), GaussQ(b_.re), m_); }

ExactComplex ExactComplex::imag_part() const { return ExactComplex(GaussQ(a_.im), GaussQ(b_.im), m_); }

cplx ExactComplex::to_complex() const {
    double s = m_ ? std::sqrt(double(m_)) : 0.0;
    return {a_.re.get_d() + s * b_.re.get_d(), a_.im.get_d() + s * b_.im.get_d()};
}

int ExactComplex::real_sign() const {
    if (!is_real()) throw std::domain_error("sign of a non-real value");
    int s0 = sgn(a_.re), s1 = sgn(b_.re);
    if (s1 == 0) return s0;
    if (s0 == 0 || s0 == s1) return s1;
    mpq_class l = a_.re * a_.re, r = mpq_class(m_) * b_.re * b_.re;
    return l > r ? s0 : s1;
}

std::string ExactComplex::re_string() const { return real_string(a_.re, b_.re, m_); }
std::string ExactComplex::im_string() const { return real_string(a_.im, b_.im, m_); }

std::string ExactComplex::to_string() const {
    if (is_real()) return re_string();
    return "(" + re_string() + ")+i*(" + im_string() + ")";
}

std::optional<ExactComplex> exact_sqrt(const ExactComplex& z) {
    if (!z.is_gaussian()) return std::nullopt;
    const mpq_class& x = z.a().re;
    const mpq_class& y = z.a().im;
    if (sgn(y) == 0) return ExactComplex::sqrt_rational(x);
    mpq_class t;
    if (rational_sqrt(x * x + y * y, t)) {
        mpq_class a2 = (x + t) / 2, a;
        if (rational_sqrt(a2, a) && sgn(a) != 0) return ExactComplex(a, y / (2 * a));
    }
    if (sgn(x) == 0) {
        ExactComplex one_i = sgn(y) > 0 ? ExactComplex(1, 1) : ExactComplex(1, -1);
        return ExactComplex::sqrt_rational(abs(y) / 2) * one_i;
    }
    return std::nullopt;
}

mpq_class rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    // Continued fraction convergents.
    long double v = x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        long double fl = std::floor(v);
        if (std::fabs(fl) > 1e15L) break;
        mpz_class a = static_cast<long>(fl);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        long double frac = v - fl;
        if (frac < 1e-18L) break;
        v = 1.0L / frac;
    }
    if (q1 == 0) return mpq_class(0);
    mpq_class r(p1, q1);
    r.canonicalize();
    return r;
}

// ---- Scalar ----

cplx Scalar::value() const {
    if (auto* e = std::get_if<ExactComplex>(&v_)) return e->to_complex();
    return std::get<cplx>(v_);
}

bool Scalar::is_zero(double tol) const {
    if (auto* e = std::get_if<ExactComplex>(&v_)) return e->is_zero();
    return std::abs(std::get<cplx>(v_)) <= tol;
}

Scalar Scalar::conj() const {
    if (is_exact()) return Scalar(exact().conj());
    return Scalar(std::conj(value()));
}

Scalar Scalar::abs2() const {
    if (is_exact()) return Scalar(exact().abs2());
    return Scalar(cplx(std::norm(value()), 0.0));
}

Scalar Scalar::real_part() const {
    if (is_exact()) return Scalar(exact().real_part());
    return Scalar(cplx(value().real(), 0.0));
}

Scalar Scalar::imag_part() const {
    if (is_exact()) return Scalar(exact().imag_part());
    return Scalar(cplx(value().imag(), 0.0));
}

namespace {
// Operands from different quadratic extensions fall back to floating point.
bool both_exact(const Scalar& x, const Scalar& y) {
    return x.is_exact() && y.is_exact() && ExactComplex::compatible(x.exact(), y.exact());
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (both_exact(x, y)) return Scalar(x.exact() + y.exact());
    return Scalar(x.value() + y.value());
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    if (both_exact(x, y)) return Scalar(x.exact() - y.exact());
    return Scalar(x.value() - y.value());
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (both_exact(x, y)) return Scalar(x.exact() * y.exact());
    return Scalar(x.value() * y.value());
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (both_exact(x, y)) return Scalar(x.exact() / y.exact());
    cplx d = y.value();
    if (d == cplx(0.0, 0.0)) throw std::domain_error("division by zero");
    return Scalar(x.value() / d);
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-exact());
    return Scalar(-value());
}

bool Scalar::approx_equal(const Scalar& o, double tol) const {
    if (is_exact() && o.is_exact()) return exact() == o.exact();
    cplx a = value(), b = o.value();
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

std::string Scalar::to_string() const {
    if (is_exact()) return exact().to_string();
    cplx c = value();
    return "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
}

Scalar pow(const Scalar& x, int e) {
    if (e < 0) return Scalar(1) / pow(x, -e);
    Scalar r(1), b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace minsurf
