#pragma once

#include <gmp.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace prodvec {

/// Arbitrary-precision rational backed by GMP's mpq_t.
/// Always canonical: lowest terms, positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_init(q_);
        if (den < 0) { num = -num; den = -den; }
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }

    /// Accepts "p", "p/q", and decimal strings like "-3.25".
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (!parse(s)) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sgn() const { return mpq_sgn(q_); }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    /// Canonical "p/q" form, denominator always spelled out.
    std::string str() const {
        char* num = mpz_get_str(nullptr, 10, mpq_numref(q_));
        char* den = mpz_get_str(nullptr, 10, mpq_denref(q_));
        std::string s = std::string(num) + "/" + std::string(den);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(num, std::char_traits<char>::length(num) + 1);
        freefn(den, std::char_traits<char>::length(den) + 1);
        return s;
    }

    /// Truncated-toward-zero conversion; may return +/-inf for huge values.
    double to_double_trunc() const { return mpq_get_d(q_); }

    /// Correctly rounded (nearest, ties to even) conversion.
    /// Throws std::overflow_error when the magnitude exceeds the double range.
    double to_double_nearest() const {
        double d0 = mpq_get_d(q_);
        if (!std::isfinite(d0)) throw std::overflow_error("Rational: magnitude exceeds double range");
        const double inf = std::numeric_limits<double>::infinity();
        double best = d0;
        Rational best_err = (*this - from_double_exact(d0)).abs();
        for (double cand : {std::nextafter(d0, inf), std::nextafter(d0, -inf)}) {
            if (!std::isfinite(cand)) continue;
            Rational err = (*this - from_double_exact(cand)).abs();
            if (err < best_err ||
                (err == best_err && (std::bit_cast<std::uint64_t>(cand) & 1u) == 0 &&
                 (std::bit_cast<std::uint64_t>(best) & 1u) != 0)) {
                best = cand;
                best_err = err;
            }
        }
        return best;
    }

    /// Every finite double is an exact dyadic rational.
    static Rational from_double_exact(double d) {
        if (!std::isfinite(d)) throw std::invalid_argument("Rational: non-finite double");
        Rational r;
        mpq_set_d(r.q_, d);
        return r;
    }

    /// Best rational approximation of x by continued fractions, with
    /// denominator capped at max_den. Returns nothing when x is non-finite.
    static std::optional<Rational> reconstruct(double x, std::uint64_t max_den) {
        if (!std::isfinite(x)) return std::nullopt;
        Rational target = from_double_exact(x);
        // convergents p/q of the continued fraction of x
        Rational rem = target;
        Rational p_prev(1), p_cur(0), q_prev(0), q_cur(1);
        Rational max_q(static_cast<long>(max_den));
        for (int step = 0; step < 64; ++step) {
            Rational fl = rem.floor();
            Rational p_next = fl * p_cur + p_prev;
            Rational q_next = fl * q_cur + q_prev;
            if (q_next > max_q) break;
            p_prev = p_cur; p_cur = p_next;
            q_prev = q_cur; q_cur = q_next;
            Rational frac = rem - fl;
            if (frac.is_zero()) break;
            rem = Rational(1) / frac;
        }
        if (q_cur.is_zero()) return std::nullopt;
        return p_cur / q_cur;
    }

    Rational floor() const {
        Rational r;
        mpz_t f;
        mpz_init(f);
        mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
        mpq_set_z(r.q_, f);
        mpz_clear(f);
        return r;
    }

private:
    bool parse(const std::string& s) {
        if (s.empty()) return false;
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string intpart = s.substr(0, dot);
            std::string fracpart = s.substr(dot + 1);
            if (fracpart.empty() || fracpart.find_first_not_of("0123456789") != std::string::npos)
                return false;
            bool neg = false;
            if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) {
                neg = intpart[0] == '-';
                intpart = intpart.substr(1);
            }
            if (intpart.empty()) intpart = "0";
            if (intpart.find_first_not_of("0123456789") != std::string::npos) return false;
            std::string digits = intpart + fracpart;
            std::string den = "1" + std::string(fracpart.size(), '0');
            std::string combined = (neg ? "-" : "") + digits + "/" + den;
            if (mpq_set_str(q_, combined.c_str(), 10) != 0) return false;
            mpq_canonicalize(q_);
            return true;
        }
        if (mpq_set_str(q_, s.c_str(), 10) != 0) return false;
        if (mpz_sgn(mpq_denref(q_)) == 0) return false;
        mpq_canonicalize(q_);
        return true;
    }

    mpq_t q_;
};

}  // namespace prodvec
