#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prodvec/bipoly.hpp"
#include "prodvec/unipoly.hpp"

namespace prodvec {

template <class T>
class SmallMatrix {
public:
    SmallMatrix() = default;
    SmallMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("SmallMatrix: negative shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return a_[idx(r, c)]; }
    const T& operator()(int r, int c) const { return a_[idx(r, c)]; }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    SmallMatrix select(const std::vector<int>& rs, const std::vector<int>& cs) const {
        SmallMatrix m(int(rs.size()), int(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j)
                m(int(i), int(j)) = (*this)(rs[i], cs[j]);
        return m;
    }

    friend bool operator==(const SmallMatrix& a, const SmallMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    size_t idx(int r, int c) const { return size_t(r) * size_t(cols_) + size_t(c); }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
struct RingTraits;

template <>
struct RingTraits<GaussianRational> {
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational divexact(const GaussianRational& a, const GaussianRational& b) {
        return a / b;
    }
};

template <>
struct RingTraits<ComplexF> {
    static ComplexF one() { return ComplexF(1.0); }
    static bool is_zero(const ComplexF& x) { return x.is_zero(); }
    static ComplexF divexact(const ComplexF& a, const ComplexF& b) { return a / b; }
};

template <class K>
struct RingTraits<UniPoly<K>> {
    static UniPoly<K> one() { return UniPoly<K>::constant(ScalarTraits<K>::one()); }
    static bool is_zero(const UniPoly<K>& p) { return p.is_identically_zero(); }
    static UniPoly<K> divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
        return prodvec::divexact(a, b).trimmed();
    }
};

template <class K>
struct RingTraits<BiPoly<K>> {
    static BiPoly<K> one() { return BiPoly<K>::constant(ScalarTraits<K>::one()); }
    static bool is_zero(const BiPoly<K>& p) { return p.is_identically_zero(); }
};

/// Fraction-free Bareiss determinant over an integral domain with exact
/// division. Pivots are the first nonzero entry per column; row swaps
/// flip the sign.
template <class T>
T det_bareiss(SmallMatrix<T> m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return RingTraits<T>::one();
    bool negate = false;
    T prev = RingTraits<T>::one();
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!RingTraits<T>::is_zero(m(r, k))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return T{};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = RingTraits<T>::divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = T{};
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Division-free determinant by Laplace expansion with shared minors
/// (dynamic programming over column subsets). dp[mask] is the minor of
/// rows 0..popcount(mask)-1 against the columns in mask. Works over any
/// commutative ring; cost O(n * 2^n) ring multiplications.
template <class T>
T det_laplace(const SmallMatrix<T>& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return RingTraits<T>::one();
    if (n > 24) throw std::invalid_argument("det_laplace: matrix too large");
    std::vector<T> dp(size_t(1) << n);
    std::vector<uint32_t> level{0}, next;
    dp[0] = RingTraits<T>::one();
    for (int r = 0; r < n; ++r) {
        next.clear();
        for (uint32_t mask : level)
            for (int c = 0; c < n; ++c) {
                uint32_t bit = uint32_t(1) << c;
                if (!(mask & bit)) next.push_back(mask | bit);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (uint32_t mask : level) {
            const T acc = dp[mask];
            if (RingTraits<T>::is_zero(acc)) continue;
            for (int c = 0; c < n; ++c) {
                uint32_t bit = uint32_t(1) << c;
                if ((mask & bit) || RingTraits<T>::is_zero(m(r, c))) continue;
                T term = acc * m(r, c);
                if ((std::popcount(mask & (bit - 1)) + r) % 2 != 0) term = -term;
                dp[mask | bit] = dp[mask | bit] + term;
            }
        }
        for (uint32_t mask : level) dp[mask] = T{};
        level.swap(next);
    }
    return dp[(size_t(1) << n) - 1];
}

/// Partially pivoted complex determinant (float domain).
inline ComplexF det_pivoted(SmallMatrix<ComplexF> m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return ComplexF(1.0);
    bool negate = false;
    ComplexF det(1.0);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = m(k, k).abs();
        for (int r = k + 1; r < n; ++r)
            if (m(r, k).abs() > best) {
                best = m(r, k).abs();
                pivot = r;
            }
        if (best == 0.0) return ComplexF();
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        det = det * m(k, k);
        for (int i = k + 1; i < n; ++i) {
            ComplexF factor = m(i, k) / m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) = m(i, j) - factor * m(k, j);
            m(i, k) = ComplexF();
        }
    }
    return negate ? -det : det;
}

/// Rank over an exact coefficient field.
template <class K>
int exact_rank(SmallMatrix<K> m) {
    int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!scalar_is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) m.swap_rows(pivot, rank);
        for (int r = rank + 1; r < rows; ++r) {
            if (scalar_is_zero(m(r, c))) continue;
            K factor = m(r, c) / m(rank, c);
            for (int j = c; j < cols; ++j) m(r, j) = m(r, j) - factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Exact solve of a square nonsingular system; nullopt when singular.
template <class K>
std::optional<std::vector<K>> exact_solve(SmallMatrix<K> a, std::vector<K> b) {
    int n = a.rows();
    if (n != a.cols() || int(b.size()) != n) throw std::invalid_argument("exact_solve: shape");
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!scalar_is_zero(a(r, k))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) {
            a.swap_rows(pivot, k);
            std::swap(b[size_t(pivot)], b[size_t(k)]);
        }
        for (int r = k + 1; r < n; ++r) {
            if (scalar_is_zero(a(r, k))) continue;
            K factor = a(r, k) / a(k, k);
            for (int j = k; j < n; ++j) a(r, j) = a(r, j) - factor * a(k, j);
            b[size_t(r)] = b[size_t(r)] - factor * b[size_t(k)];
        }
    }
    std::vector<K> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        K acc = b[size_t(i)];
        for (int j = i + 1; j < n; ++j) acc = acc - a(i, j) * x[size_t(j)];
        x[size_t(i)] = acc / a(i, i);
    }
    return x;
}

/// Basis of the right null space { v : M v = 0 } over an exact field.
template <class K>
std::vector<std::vector<K>> exact_nullspace(SmallMatrix<K> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!scalar_is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) m.swap_rows(pivot, rank);
        K lead = m(rank, c);
        for (int j = c; j < cols; ++j) m(rank, j) = m(rank, j) / lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || scalar_is_zero(m(r, c))) continue;
            K factor = m(r, c);
            for (int j = c; j < cols; ++j) m(r, j) = m(r, j) - factor * m(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(size_t(cols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<K> v(static_cast<size_t>(cols));
        v[size_t(free)] = ScalarTraits<K>::one();
        for (int r = 0; r < rank; ++r) v[size_t(pivot_col[size_t(r)])] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace prodvec
