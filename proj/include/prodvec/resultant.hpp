#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

#include "prodvec/bipoly.hpp"
#include "prodvec/linalg.hpp"

namespace prodvec {

/// Sylvester matrix of f and g, built from the FORMAL degrees
/// (m = f.formal_degree, n = g.formal_degree): n rows of f-coefficients
/// laid out leading-first and shifting right, then m rows of g-coefficients.
/// Generic in the coefficient ring so it also serves the two-variable
/// resultant (entries are then z-polynomials).
template <class T>
SmallMatrix<T> sylvester_matrix(const UniPoly<T>& f, const UniPoly<T>& g) {
    int mf = f.formal_degree();
    int ng = g.formal_degree();
    if (mf == 0 && ng == 0)
        throw std::invalid_argument("sylvester_matrix: both formal degrees zero");
    SmallMatrix<T> m(mf + ng, mf + ng);
    for (int r = 0; r < ng; ++r)
        for (int c = 0; c <= mf; ++c) m(r, r + c) = f.coeff(mf - c);
    for (int r = 0; r < mf; ++r)
        for (int c = 0; c <= ng; ++c) m(ng + r, r + c) = g.coeff(ng - c);
    return m;
}

inline GaussianRational resultant(const UniPoly<GaussianRational>& f,
                                  const UniPoly<GaussianRational>& g) {
    return det_bareiss(sylvester_matrix(f, g));
}

inline ComplexF resultant(const UniPoly<ComplexF>& f, const UniPoly<ComplexF>& g) {
    return det_pivoted(sylvester_matrix(f, g));
}

/// Degree bound for Res_w(P, Q) from the formal bidegrees: each Sylvester
/// term multiplies dw(Q) coefficients of P and dw(P) coefficients of Q.
inline int resultant_w_degree_bound(int p_dz, int p_dw, int q_dz, int q_dw) {
    return q_dw * p_dz + p_dw * q_dz;
}

/// Res_w(P, Q) over the exact domain: fraction-free determinant of the
/// Sylvester matrix with z-polynomial entries, formal w-degrees fixed by
/// the bipolynomials' formal bidegrees.
inline UniPoly<GaussianRational> resultant_w(const BiPoly<GaussianRational>& p,
                                             const BiPoly<GaussianRational>& q) {
    if (p.dw() == 0 && q.dw() == 0)
        throw std::invalid_argument("resultant_w: both polynomials constant in w");
    return det_bareiss(sylvester_matrix(p.as_w_poly(), q.as_w_poly())).trimmed();
}

/// Float-domain Res_w(P, Q) by evaluation at roots of unity and inverse
/// DFT; the scalar determinants underneath use pivoted elimination.
inline UniPoly<ComplexF> resultant_w(const BiPoly<ComplexF>& p, const BiPoly<ComplexF>& q) {
    if (p.dw() == 0 && q.dw() == 0)
        throw std::invalid_argument("resultant_w: both polynomials constant in w");
    const int bound = resultant_w_degree_bound(p.dz(), p.dw(), q.dz(), q.dw());
    const int n = bound + 1;
    std::vector<std::complex<double>> values(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double theta = 2.0 * std::numbers::pi * double(j) / double(n);
        ComplexF zj(std::cos(theta), std::sin(theta));
        values[static_cast<size_t>(j)] =
            det_pivoted(sylvester_matrix(p.eval_z(zj), q.eval_z(zj))).to_std();
    }
    auto r = UniPoly<ComplexF>::with_formal_degree(bound);
    for (int c = 0; c <= bound; ++c) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j) {
            double theta = -2.0 * std::numbers::pi * double(j) * double(c) / double(n);
            acc += values[static_cast<size_t>(j)] * std::polar(1.0, theta);
        }
        acc /= double(n);
        r.coeff(c) = ComplexF(acc);
    }
    return r;
}

}  // namespace prodvec
