#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace prodvec {

/// Trichotomy by comparing k + l against m + n - 2.
enum class Regime { InfiniteRegime, Boundary, GenericallyEmptyRegime };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::InfiniteRegime: return "InfiniteRegime";
        case Regime::Boundary: return "Boundary";
        case Regime::GenericallyEmptyRegime: return "GenericallyEmptyRegime";
    }
    return "?";
}

enum class Verdict { InU, NotInU, Indeterminate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::InU: return "InU";
        case Verdict::NotInU: return "NotInU";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

enum class NotInUReason { ResultantIdenticallyZero, RankDefectAtRoot };

inline const char* reason_name(NotInUReason r) {
    return r == NotInUReason::ResultantIdenticallyZero ? "ResultantIdenticallyZero"
                                                       : "RankDefectAtRoot";
}

/// Counting applies only on the boundary k + l = m + n - 2; off-boundary
/// inputs are rejected with the regime that does apply.
class RegimeError : public std::runtime_error {
public:
    RegimeError(Regime regime, int m, int n, int k, int l, const std::string& what)
        : std::runtime_error(what), regime(regime), m(m), n(n), k(k), l(l) {}
    Regime regime;
    int m, n, k, l;
};

/// A tolerance-band test landed between "clearly zero" and "clearly
/// nonzero"; the computation refuses to guess.
class IndeterminateError : public std::runtime_error {
public:
    IndeterminateError(const std::string& stage, double magnitude, double lo, double hi)
        : std::runtime_error("indeterminate " + stage + ": relative magnitude " +
                             std::to_string(magnitude) + " inside the ambiguous band [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          stage(stage),
          magnitude(magnitude),
          lo(lo),
          hi(hi) {}
    std::string stage;
    double magnitude, lo, hi;
};

/// Malformed or inconsistent input (parsing, preconditions, fixtures).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct Tolerances {
    double tol_conj = 1e-8;       // conjugate-consistency, relative to max |coeff of P|
    double tol_rank = 1e-8;       // rank / minor-vanishing, relative
    double band_factor = 10.0;    // ambiguous band: (tol, band_factor * tol]
    double dedup = 1e-6;          // projective identification of near-coincident solutions
    double residual_cert = 1e-9;  // certification ceiling for membership residuals
};

}  // namespace prodvec
