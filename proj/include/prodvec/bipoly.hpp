#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prodvec/unipoly.hpp"

namespace prodvec {

/// Dense bivariate polynomial in (z, w) with formal bidegree (dz, dw).
/// Coefficient c(p, q) multiplies z^p w^q; the grid always has full
/// (dz+1) x (dw+1) shape with exact zeros outside the support.
template <class K>
class BiPoly {
public:
    BiPoly() : dz_(0), dw_(0), c_(1) {}

    BiPoly(int dz, int dw) : dz_(dz), dw_(dw) {
        if (dz < 0 || dw < 0) throw std::invalid_argument("BiPoly: negative formal bidegree");
        c_.assign(static_cast<size_t>(dz + 1) * static_cast<size_t>(dw + 1), K{});
    }

    static BiPoly constant(K v) {
        BiPoly p(0, 0);
        p.at(0, 0) = std::move(v);
        return p;
    }

    int dz() const { return dz_; }
    int dw() const { return dw_; }

    K& at(int p, int q) { return c_[idx(p, q)]; }
    const K& at(int p, int q) const { return c_[idx(p, q)]; }

    K at_or_zero(int p, int q) const {
        if (p < 0 || p > dz_ || q < 0 || q > dw_) return K{};
        return c_[idx(p, q)];
    }

    /// Actual bidegree (max z-power, max w-power over the support);
    /// (-1, -1) for the zero polynomial.
    std::pair<int, int> actual_bidegree() const {
        int az = -1, aw = -1;
        for (int p = 0; p <= dz_; ++p)
            for (int q = 0; q <= dw_; ++q)
                if (!scalar_is_zero(at(p, q))) {
                    az = std::max(az, p);
                    aw = std::max(aw, q);
                }
        return {az, aw};
    }

    bool is_identically_zero() const { return actual_bidegree().first < 0; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r(std::max(a.dz_, b.dz_), std::max(a.dw_, b.dw_));
        for (int p = 0; p <= r.dz_; ++p)
            for (int q = 0; q <= r.dw_; ++q)
                r.at(p, q) = a.at_or_zero(p, q) + b.at_or_zero(p, q);
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r(std::max(a.dz_, b.dz_), std::max(a.dw_, b.dw_));
        for (int p = 0; p <= r.dz_; ++p)
            for (int q = 0; q <= r.dw_; ++q)
                r.at(p, q) = a.at_or_zero(p, q) - b.at_or_zero(p, q);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.dz_ + b.dz_, a.dw_ + b.dw_);
        for (int p = 0; p <= a.dz_; ++p)
            for (int q = 0; q <= a.dw_; ++q) {
                if (scalar_is_zero(a.at(p, q))) continue;
                for (int s = 0; s <= b.dz_; ++s)
                    for (int t = 0; t <= b.dw_; ++t)
                        r.at(p + s, q + t) += a.at(p, q) * b.at(s, t);
            }
        return r;
    }

    BiPoly scaled(const K& s) const {
        BiPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    K eval(const K& z, const K& w) const {
        K acc{};
        for (int p = dz_; p >= 0; --p) {
            K row{};
            for (int q = dw_; q >= 0; --q) row = row * w + at(p, q);
            acc = acc * z + row;
        }
        return acc;
    }

    BiPoly derivative_z() const {
        if (dz_ == 0) return BiPoly(0, dw_);
        BiPoly r(dz_ - 1, dw_);
        for (int p = 1; p <= dz_; ++p)
            for (int q = 0; q <= dw_; ++q)
                r.at(p - 1, q) = at(p, q) * ScalarTraits<K>::from_long(p);
        return r;
    }

    BiPoly derivative_w() const {
        if (dw_ == 0) return BiPoly(dz_, 0);
        BiPoly r(dz_, dw_ - 1);
        for (int p = 0; p <= dz_; ++p)
            for (int q = 1; q <= dw_; ++q)
                r.at(p, q - 1) = at(p, q) * ScalarTraits<K>::from_long(q);
        return r;
    }

    /// Coefficient of w^q as a polynomial in z with formal degree dz.
    UniPoly<K> wcoeff(int q) const {
        auto p = UniPoly<K>::with_formal_degree(dz_);
        for (int i = 0; i <= dz_; ++i) p.coeff(i) = at(i, q);
        return p;
    }

    /// View as a polynomial in w whose coefficients are z-polynomials,
    /// with formal degrees preserved (w-degree dw, each coefficient dz).
    UniPoly<UniPoly<K>> as_w_poly() const {
        std::vector<UniPoly<K>> c;
        c.reserve(static_cast<size_t>(dw_) + 1);
        for (int q = 0; q <= dw_; ++q) c.push_back(wcoeff(q));
        return UniPoly<UniPoly<K>>(std::move(c));
    }

    /// The z-polynomial P(z, w0) at fixed w (formal degree dz kept).
    UniPoly<K> eval_w(const K& w0) const {
        auto p = UniPoly<K>::with_formal_degree(dz_);
        for (int i = 0; i <= dz_; ++i) {
            K acc{};
            for (int q = dw_; q >= 0; --q) acc = acc * w0 + at(i, q);
            p.coeff(i) = acc;
        }
        return p;
    }

    /// The w-polynomial P(z0, w) at fixed z (formal degree dw kept).
    UniPoly<K> eval_z(const K& z0) const {
        auto p = UniPoly<K>::with_formal_degree(dw_);
        for (int q = 0; q <= dw_; ++q) {
            K acc{};
            for (int i = dz_; i >= 0; --i) acc = acc * z0 + at(i, q);
            p.coeff(q) = acc;
        }
        return p;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& c : c_) m = std::max(m, abs_approx(c));
        return m;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        int dz = std::max(a.dz_, b.dz_), dw = std::max(a.dw_, b.dw_);
        for (int p = 0; p <= dz; ++p)
            for (int q = 0; q <= dw; ++q)
                if (!scalar_is_zero(a.at_or_zero(p, q) - b.at_or_zero(p, q))) return false;
        return true;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    size_t idx(int p, int q) const {
        return static_cast<size_t>(p) * static_cast<size_t>(dw_ + 1) + static_cast<size_t>(q);
    }

    int dz_, dw_;
    std::vector<K> c_;
};

/// Partial-conjugate companion polynomial: Q(p, q) = conj(P(q, p)),
/// with the formal bidegree swapped.
template <class K>
BiPoly<K> conjugate_poly(const BiPoly<K>& p) {
    BiPoly<K> q(p.dw(), p.dz());
    for (int a = 0; a <= p.dz(); ++a)
        for (int b = 0; b <= p.dw(); ++b)
            q.at(b, a) = conj_of(p.at(a, b));
    return q;
}

inline BiPoly<ComplexF> approx_bipoly(const BiPoly<GaussianRational>& p) {
    BiPoly<ComplexF> r(p.dz(), p.dw());
    for (int a = 0; a <= p.dz(); ++a)
        for (int b = 0; b <= p.dw(); ++b)
            r.at(a, b) = approx(p.at(a, b));
    return r;
}

}  // namespace prodvec
