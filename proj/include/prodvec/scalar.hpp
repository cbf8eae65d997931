#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "prodvec/rational.hpp"

namespace prodvec {

/// Exact complex scalar a + bi with rational a, b.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.norm2();
        if (n2.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    std::string str() const { return re.str() + (im.sgn() >= 0 ? "+" : "") + im.str() + "i"; }
};

/// Complex double with a no-NaN/no-Inf invariant on stored values.
/// Overflow surfaces as std::overflow_error instead of a silent Inf.
class ComplexF {
public:
    ComplexF() = default;
    ComplexF(double re, double im = 0.0) : re_(re), im_(im) { check(); }
    explicit ComplexF(std::complex<double> z) : re_(z.real()), im_(z.imag()) { check(); }

    double re() const { return re_; }
    double im() const { return im_; }
    std::complex<double> to_std() const { return {re_, im_}; }

    friend ComplexF operator+(const ComplexF& a, const ComplexF& b) {
        return ComplexF(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend ComplexF operator-(const ComplexF& a, const ComplexF& b) {
        return ComplexF(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend ComplexF operator*(const ComplexF& a, const ComplexF& b) {
        return ComplexF(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend ComplexF operator/(const ComplexF& a, const ComplexF& b) {
        if (b.is_zero()) throw std::invalid_argument("ComplexF: division by zero");
        return ComplexF(a.to_std() / b.to_std());
    }
    ComplexF operator-() const { return ComplexF(-re_, -im_); }

    ComplexF& operator+=(const ComplexF& o) { return *this = *this + o; }
    ComplexF& operator-=(const ComplexF& o) { return *this = *this - o; }
    ComplexF& operator*=(const ComplexF& o) { return *this = *this * o; }

    friend bool operator==(const ComplexF& a, const ComplexF& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexF& a, const ComplexF& b) { return !(a == b); }

    bool is_zero() const { return re_ == 0.0 && im_ == 0.0; }
    ComplexF conj() const { return ComplexF(re_, -im_); }
    double abs() const { return std::hypot(re_, im_); }

private:
    void check() const {
        if (!std::isfinite(re_) || !std::isfinite(im_))
            throw std::overflow_error("ComplexF: non-finite value");
    }

    double re_ = 0.0;
    double im_ = 0.0;
};

template <class K>
inline constexpr bool is_exact_domain_v = false;
template <>
inline constexpr bool is_exact_domain_v<GaussianRational> = true;

inline GaussianRational conj_of(const GaussianRational& x) { return x.conj(); }
inline ComplexF conj_of(const ComplexF& x) { return x.conj(); }

inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const ComplexF& x) { return x.is_zero(); }

/// Truncated magnitude estimate; never throws (may return inf on overflow).
inline double abs_approx(const GaussianRational& x) {
    return std::hypot(x.re.to_double_trunc(), x.im.to_double_trunc());
}
inline double abs_approx(const ComplexF& x) { return x.abs(); }

/// Nearest double-precision value per component.
inline ComplexF approx(const GaussianRational& x) {
    return ComplexF(x.re.to_double_nearest(), x.im.to_double_nearest());
}

inline std::complex<double> to_complex(const GaussianRational& x) { return approx(x).to_std(); }
inline std::complex<double> to_complex(const ComplexF& x) { return x.to_std(); }

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational from_long(long n) { return GaussianRational(n); }
};

template <>
struct ScalarTraits<ComplexF> {
    static ComplexF one() { return ComplexF(1.0); }
    static ComplexF zero() { return ComplexF(); }
    static ComplexF from_long(long n) { return ComplexF(double(n)); }
};

}  // namespace prodvec
