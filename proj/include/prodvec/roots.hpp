#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "prodvec/unipoly.hpp"

namespace prodvec {

/// One certified root location: disjoint from every other cluster, with
/// multiplicity and the normalized evaluation residual
/// |p(center)| / sum_i |c_i| |center|^i.
struct RootCluster {
    std::complex<double> center;
    double radius = 0.0;
    int multiplicity = 1;
    double residual = 0.0;
};

/// All complex roots with multiplicity, by companion-matrix eigenvalues
/// plus Newton polishing. Deterministic: clusters are ordered by
/// (Re, Im) lexicographically. Throws std::invalid_argument on the
/// identically-zero polynomial.
std::vector<RootCluster> roots(const UniPoly<ComplexF>& p);

/// A root that has been recognized as an exact rational (real) value.
struct TaggedRoot {
    RootCluster cluster;
    std::optional<GaussianRational> exact_value;  // set only for certified rational roots
};

/// Roots of an exact polynomial: squarefree decomposition fixes the
/// multiplicities exactly, float root-finding runs on the squarefree
/// factors, and real rational roots are recognized and re-verified in
/// exact arithmetic.
std::vector<TaggedRoot> roots_exact(const UniPoly<GaussianRational>& p);

/// Normalized evaluation residual of p at z.
double poly_residual(const UniPoly<ComplexF>& p, std::complex<double> z);

}  // namespace prodvec
