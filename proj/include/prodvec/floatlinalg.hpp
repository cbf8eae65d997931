#pragma once

#include <complex>
#include <vector>

#include "prodvec/linalg.hpp"

namespace prodvec {

using CMatrix = SmallMatrix<std::complex<double>>;

struct SvdInfo {
    std::vector<double> singular_values;  // descending
    // right singular vectors as columns, same order as singular_values
    std::vector<std::vector<std::complex<double>>> right_vectors;
};

SvdInfo svd_of(const CMatrix& m);

/// Count of singular values above rel_tol * sigma_max (rank 0 matrices
/// report 0 regardless of tolerance).
int rank_from_singular_values(const std::vector<double>& sv, double rel_tol);

/// Eigenvalues of the companion matrix of x^d + sum_i monic[i] x^i.
std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& monic);

}  // namespace prodvec
