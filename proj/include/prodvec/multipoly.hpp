#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "prodvec/linalg.hpp"
#include "prodvec/scalar.hpp"

namespace prodvec {

/// Sparse multivariate polynomial. Variables are x_1..x_m followed by
/// xbar_1..xbar_m (2m variables total); exponent vectors are the keys.
template <class K>
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("MultiPoly: nonpositive variable count");
    }

    static MultiPoly constant(int nvars, K v) {
        MultiPoly p(nvars);
        if (!scalar_is_zero(v)) p.terms_[Exponents(static_cast<size_t>(nvars), 0)] = std::move(v);
        return p;
    }

    static MultiPoly variable(int nvars, int index, K coeff = ScalarTraits<K>::one()) {
        MultiPoly p(nvars);
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(index)] = 1;
        if (!scalar_is_zero(coeff)) p.terms_[std::move(e)] = std::move(coeff);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponents, K>& terms() const { return terms_; }
    bool is_identically_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Exponents& e, const K& c) {
        if (int(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent arity");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!scalar_is_zero(c)) terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    K eval(const std::vector<K>& vars) const {
        if (int(vars.size()) != nvars_) throw std::invalid_argument("MultiPoly: eval arity");
        K acc{};
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) t = t * vars[i];
            acc = acc + t;
        }
        return acc;
    }

    std::complex<double> eval_complex(const std::vector<std::complex<double>>& vars) const {
        if (int(vars.size()) != nvars_) throw std::invalid_argument("MultiPoly: eval arity");
        std::complex<double> acc = 0.0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = to_complex(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) t *= vars[i];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_identically_zero();
    }

private:
    int nvars_;
    std::map<Exponents, K> terms_;
};

template <class K>
struct RingTraits<MultiPoly<K>> {
    static MultiPoly<K> one() {
        throw std::logic_error("MultiPoly ring one needs arity; use det over prepared entries");
    }
    static bool is_zero(const MultiPoly<K>& p) { return p.is_identically_zero(); }
};

/// Division-free determinant for MultiPoly entries; the variable arity is
/// taken from the matrix itself.
template <class K>
MultiPoly<K> det_multipoly(const SmallMatrix<MultiPoly<K>>& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
    int nvars = 0;
    for (int r = 0; r < n && nvars == 0; ++r)
        for (int c = 0; c < n && nvars == 0; ++c) nvars = m(r, c).nvars();
    if (nvars == 0) throw std::invalid_argument("det_multipoly: no variables");
    // expansion along rows with shared minors, as in det_laplace
    std::vector<MultiPoly<K>> dp(size_t(1) << n, MultiPoly<K>(nvars));
    std::vector<uint32_t> level{0}, next;
    dp[0] = MultiPoly<K>::constant(nvars, ScalarTraits<K>::one());
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
            const MultiPoly<K> acc = dp[mask];
            if (acc.is_identically_zero()) continue;
            for (int c = 0; c < n; ++c) {
                uint32_t bit = uint32_t(1) << c;
                if ((mask & bit) || m(r, c).is_identically_zero()) continue;
                MultiPoly<K> term = acc * m(r, c);
                if ((std::popcount(mask & (bit - 1)) + r) % 2 != 0) term = -term;
                dp[mask | bit] = dp[mask | bit] + term;
            }
        }
        for (uint32_t mask : level) dp[mask] = MultiPoly<K>(nvars);
        level.swap(next);
    }
    return dp[(size_t(1) << n) - 1];
}

}  // namespace prodvec
