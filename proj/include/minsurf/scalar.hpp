#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace minsurf {

using cplx = std::complex<double>;

/// Gaussian rational re + i*im.
struct GaussQ {
    mpq_class re{0}, im{0};

    GaussQ() = default;
    GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussQ conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b);
    GaussQ operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

/// Element a + b*sqrt(m) of Q(i)(sqrt m). m == 0 means no extension is in use;
/// otherwise m is a positive integer that is not a perfect square.
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long v) : a_(mpq_class(v)) {}
    ExactComplex(mpq_class re, mpq_class im = 0) : a_(std::move(re), std::move(im)) {}
    ExactComplex(GaussQ a) : a_(std::move(a)) {}
    ExactComplex(GaussQ a, GaussQ b, long m);

    static ExactComplex i() { return ExactComplex(mpq_class(0), mpq_class(1)); }
    /// sqrt of a rational; negative input gives i*sqrt(|q|).
    static ExactComplex sqrt_rational(const mpq_class& q);

    const GaussQ& a() const { return a_; }
    const GaussQ& b() const { return b_; }
    long m() const { return m_; }
    /// True when x and y live in a common field Q(i)(sqrt m).
    static bool compatible(const ExactComplex& x, const ExactComplex& y) {
        return x.m_ == 0 || y.m_ == 0 || x.m_ == y.m_;
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_gaussian() const { return b_.is_zero(); }
    bool is_real() const { return sgn(a_.im) == 0 && sgn(b_.im) == 0; }

    ExactComplex conj() const;
    ExactComplex real_part() const;
    ExactComplex imag_part() const;
    /// |z|^2, an element with zero imaginary part.
    ExactComplex abs2() const { return *this * conj(); }
    ExactComplex inverse() const;
    cplx to_complex() const;
    /// Sign of a real element (throws if not real).
    int real_sign() const;

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y);
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y);
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y);
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) { return x * y.inverse(); }
    ExactComplex operator-() const;
    friend bool operator==(const ExactComplex& x, const ExactComplex& y);

    /// "p/q" or "p/q+r/s*sqrt(m)" per real/imaginary component.
    std::string re_string() const;
    std::string im_string() const;
    std::string to_string() const;

private:
    GaussQ a_, b_;
    long m_ = 0;
    void normalize();
    static long common_m(const ExactComplex& x, const ExactComplex& y);
};

/// Try to find an exact square root inside Q(i)(sqrt m) for a Gaussian rational.
std::optional<ExactComplex> exact_sqrt(const ExactComplex& z);

/// Best rational approximation with bounded denominator.
mpq_class rationalize(double x, long max_den);

/// Complex scalar in one of two modes. Any FLOAT operand makes the result FLOAT.
class Scalar {
public:
    Scalar() : v_(ExactComplex()) {}
    Scalar(long v) : v_(ExactComplex(v)) {}
    Scalar(int v) : v_(ExactComplex(long(v))) {}
    Scalar(ExactComplex e) : v_(std::move(e)) {}
    Scalar(mpq_class q) : v_(ExactComplex(std::move(q))) {}
    Scalar(cplx c) : v_(c) {}
    Scalar(double d) : v_(cplx(d, 0.0)) {}

    static Scalar i() { return Scalar(ExactComplex::i()); }

    bool is_exact() const { return std::holds_alternative<ExactComplex>(v_); }
    const ExactComplex& exact() const { return std::get<ExactComplex>(v_); }
    cplx value() const;
    Scalar to_float() const { return Scalar(value()); }

    /// Exact zero test in EXACT mode, |z| <= tol in FLOAT mode.
    bool is_zero(double tol = 0.0) const;
    double abs() const { return std::abs(value()); }
    Scalar conj() const;
    Scalar abs2() const;
    Scalar real_part() const;
    Scalar imag_part() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Exact equality if both exact; else |x-y| <= tol*max(1,|x|,|y|).
    bool approx_equal(const Scalar& o, double tol) const;
    std::string to_string() const;

private:
    std::variant<ExactComplex, cplx> v_;
};

Scalar pow(const Scalar& x, int e);

}  // namespace minsurf
