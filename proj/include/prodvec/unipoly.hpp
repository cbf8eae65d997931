#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prodvec/scalar.hpp"

namespace prodvec {

/// Dense univariate polynomial over a coefficient ring K.
/// Carries a formal degree that may exceed the actual degree; coefficients
/// are stored for every index 0..formal_degree.
template <class K>
class UniPoly {
public:
    UniPoly() : c_(1) {}

    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }

    static UniPoly with_formal_degree(int d) {
        if (d < 0) throw std::invalid_argument("UniPoly: negative formal degree");
        UniPoly p;
        p.c_.assign(static_cast<size_t>(d) + 1, K{});
        return p;
    }

    static UniPoly constant(K v) {
        UniPoly p;
        p.c_[0] = std::move(v);
        return p;
    }

    int formal_degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Index of the last nonzero coefficient; -1 for the zero polynomial.
    int actual_degree() const {
        for (int i = formal_degree(); i >= 0; --i)
            if (!scalar_is_zero(c_[static_cast<size_t>(i)])) return i;
        return -1;
    }

    const K& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    K& coeff(int i) { return c_[static_cast<size_t>(i)]; }

    K coeff_or_zero(int i) const {
        if (i < 0 || i > formal_degree()) return K{};
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<K>& coeffs() const { return c_; }

    bool is_identically_zero() const { return actual_degree() < 0; }

    /// Formal degree shrunk to the actual degree (zero poly keeps degree 0).
    UniPoly trimmed() const {
        int d = std::max(actual_degree(), 0);
        UniPoly p = with_formal_degree(d);
        for (int i = 0; i <= d; ++i) p.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return p;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r = with_formal_degree(std::max(a.formal_degree(), b.formal_degree()));
        for (int i = 0; i <= r.formal_degree(); ++i)
            r.c_[static_cast<size_t>(i)] = a.coeff_or_zero(i) + b.coeff_or_zero(i);
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r = with_formal_degree(std::max(a.formal_degree(), b.formal_degree()));
        for (int i = 0; i <= r.formal_degree(); ++i)
            r.c_[static_cast<size_t>(i)] = a.coeff_or_zero(i) - b.coeff_or_zero(i);
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_identically_zero() || b.is_identically_zero()) return UniPoly();
        UniPoly r = with_formal_degree(a.formal_degree() + b.formal_degree());
        for (int i = 0; i <= a.formal_degree(); ++i) {
            if (scalar_is_zero(a.coeff(i))) continue;
            for (int j = 0; j <= b.formal_degree(); ++j)
                r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    UniPoly scaled(const K& s) const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    K eval(const K& x) const {
        K acc{};
        for (int i = formal_degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }

    UniPoly derivative() const {
        if (formal_degree() == 0) return UniPoly();
        UniPoly r = with_formal_degree(formal_degree() - 1);
        for (int i = 1; i <= formal_degree(); ++i)
            r.c_[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * ScalarTraits<K>::from_long(i);
        return r;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& c : c_) m = std::max(m, abs_approx(c));
        return m;
    }

    /// Value equality: formal degrees may differ, coefficients must agree.
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        int d = std::max(a.formal_degree(), b.formal_degree());
        for (int i = 0; i <= d; ++i)
            if (!scalar_is_zero(a.coeff_or_zero(i) - b.coeff_or_zero(i))) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    std::vector<K> c_;
};

/// Quotient and remainder over a coefficient field. Divisor must be nonzero.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    int db = b.actual_degree();
    if (db < 0) throw std::invalid_argument("UniPoly: division by zero polynomial");
    UniPoly<K> rem = a.trimmed();
    int da = rem.actual_degree();
    if (da < db) return {UniPoly<K>(), rem};
    UniPoly<K> quot = UniPoly<K>::with_formal_degree(da - db);
    const K& lead = b.coeff(db);
    for (int i = da; i >= db; --i) {
        K top = rem.coeff_or_zero(i);
        if (scalar_is_zero(top)) continue;
        K q = top / lead;
        quot.coeff(i - db) = q;
        for (int j = 0; j <= db; ++j)
            rem.coeff(i - db + j) = rem.coeff(i - db + j) - q * b.coeff(j);
    }
    return {quot, rem};
}

/// Exact quotient; the division must leave no remainder.
template <class K>
UniPoly<K> divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_identically_zero()) throw std::logic_error("UniPoly: inexact division");
    return q;
}

/// Monic gcd over a coefficient field (Euclid, remainders re-normalized
/// to monic each step to limit coefficient growth). gcd(0,0) = 0.
template <class K>
UniPoly<K> gcd_monic(UniPoly<K> a, UniPoly<K> b) {
    auto monic = [](UniPoly<K> p) {
        int d = p.actual_degree();
        if (d < 0) return p;
        return p.scaled(ScalarTraits<K>::one() / p.coeff(d)).trimmed();
    };
    a = monic(a.trimmed());
    b = monic(b.trimmed());
    while (!b.is_identically_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = monic(r.trimmed());
    }
    return a;
}

/// Yun squarefree decomposition over a field of characteristic zero:
/// f = lc * prod_i a_i^i with the a_i monic, squarefree and pairwise coprime.
/// Returns the (a_i, i) pairs with deg a_i > 0.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> yun_squarefree(const UniPoly<K>& f) {
    std::vector<std::pair<UniPoly<K>, int>> out;
    UniPoly<K> ft = f.trimmed();
    int d = ft.actual_degree();
    if (d <= 0) return out;
    UniPoly<K> df = ft.derivative();
    UniPoly<K> g = gcd_monic(ft, df);
    UniPoly<K> b = divexact(ft, g).trimmed();
    UniPoly<K> c = divexact(df, g).trimmed();
    UniPoly<K> dlt = (c - b.derivative()).trimmed();
    int i = 1;
    while (b.actual_degree() > 0) {
        UniPoly<K> ai = gcd_monic(b, dlt);
        if (ai.actual_degree() > 0) out.emplace_back(ai, i);
        b = divexact(b, ai).trimmed();
        c = divexact(dlt, ai).trimmed();
        dlt = (c - b.derivative()).trimmed();
        ++i;
    }
    return out;
}

/// Per-coefficient nearest-double image of an exact polynomial.
inline UniPoly<ComplexF> approx_poly(const UniPoly<GaussianRational>& p) {
    std::vector<ComplexF> c;
    c.reserve(static_cast<size_t>(p.formal_degree()) + 1);
    for (int i = 0; i <= p.formal_degree(); ++i) c.push_back(approx(p.coeff(i)));
    return UniPoly<ComplexF>(std::move(c));
}

}  // namespace prodvec
