#include "prodvec/roots.hpp"

#include <algorithm>
#include <cmath>

#include "prodvec/floatlinalg.hpp"

namespace prodvec {

namespace {

using C = std::complex<double>;

C eval_raw(const std::vector<C>& c, C z) {
    C acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

C eval_deriv_raw(const std::vector<C>& c, C z) {
    C acc = 0.0;
    for (size_t i = c.size(); i-- > 1;) acc = acc * z + double(i) * c[i];
    return acc;
}

double eval_scale(const std::vector<C>& c, C z) {
    double az = std::abs(z);
    double scale = 0.0, zp = 1.0;
    for (const auto& ci : c) {
        scale += std::abs(ci) * zp;
        zp *= az;
    }
    return scale;
}

C newton_polish(const std::vector<C>& c, C z) {
    for (int it = 0; it < 60; ++it) {
        C f = eval_raw(c, z);
        C df = eval_deriv_raw(c, z);
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) break;
        if (std::abs(df) == 0.0) break;
        C step = f / df;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

bool lex_less(const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

/// Cluster a sorted list of points by single linkage at a relative
/// threshold, then keep merging until all clusters are pairwise disjoint.
std::vector<RootCluster> cluster_points(std::vector<std::pair<C, int>> pts,
                                        const std::vector<C>& coeffs) {
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    struct Group {
        std::vector<std::pair<C, int>> members;
    };
    std::vector<Group> groups;
    auto threshold = [](const C& a) { return 1e-6 * std::max(1.0, std::abs(a)); };
    for (const auto& p : pts) {
        bool merged = false;
        for (auto& g : groups)
            for (const auto& m : g.members)
                if (std::abs(m.first - p.first) <= threshold(m.first)) {
                    g.members.push_back(p);
                    merged = true;
                    break;
                }
        if (!merged) groups.push_back(Group{{p}});
    }
    std::vector<RootCluster> out;
    for (const auto& g : groups) {
        C mean = 0.0;
        int mult = 0;
        for (const auto& m : g.members) {
            mean += m.first * double(m.second);
            mult += m.second;
        }
        mean /= double(mult);
        double radius = 0.0;
        for (const auto& m : g.members) radius = std::max(radius, std::abs(m.first - mean));
        RootCluster rc;
        rc.center = mean;
        rc.radius = radius;
        rc.multiplicity = mult;
        if (!coeffs.empty()) {
            double s = eval_scale(coeffs, mean);
            rc.residual = s > 0.0 ? std::abs(eval_raw(coeffs, mean)) / s : 0.0;
        }
        out.push_back(rc);
    }
    // enforce pairwise disjointness (center distance > sum of radii)
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.size() && !changed; ++i)
            for (size_t j = i + 1; j < out.size() && !changed; ++j) {
                double eps = 1e-12 * (1.0 + std::abs(out[i].center));
                if (std::abs(out[i].center - out[j].center) <=
                    out[i].radius + out[j].radius + eps) {
                    double wi = double(out[i].multiplicity), wj = double(out[j].multiplicity);
                    C mean = (out[i].center * wi + out[j].center * wj) / (wi + wj);
                    RootCluster merged;
                    merged.center = mean;
                    merged.radius = std::max(std::abs(out[i].center - mean) + out[i].radius,
                                             std::abs(out[j].center - mean) + out[j].radius);
                    merged.multiplicity = out[i].multiplicity + out[j].multiplicity;
                    if (!coeffs.empty()) {
                        double s = eval_scale(coeffs, mean);
                        merged.residual = s > 0.0 ? std::abs(eval_raw(coeffs, mean)) / s : 0.0;
                    }
                    out[i] = merged;
                    out.erase(out.begin() + long(j));
                    changed = true;
                }
            }
    }
    std::sort(out.begin(), out.end(),
              [](const RootCluster& a, const RootCluster& b) { return lex_less(a.center, b.center); });
    return out;
}

std::vector<C> raw_coeffs(const UniPoly<ComplexF>& p) {
    std::vector<C> c(static_cast<size_t>(p.formal_degree()) + 1);
    for (int i = 0; i <= p.formal_degree(); ++i) c[static_cast<size_t>(i)] = p.coeff(i).to_std();
    return c;
}

/// Roots of a float polynomial (already trimmed of exact structure);
/// returns polished points, each with multiplicity 1.
std::vector<C> float_root_points(const std::vector<C>& c) {
    const double mag = [&] {
        double m = 0.0;
        for (const auto& ci : c) m = std::max(m, std::abs(ci));
        return m;
    }();
    // actual degree with a relative trim for float noise
    int deg = -1;
    for (int i = int(c.size()) - 1; i >= 0; --i)
        if (std::abs(c[size_t(i)]) > 1e-14 * mag) {
            deg = i;
            break;
        }
    if (deg <= 0) return {};
    int zero_mult = 0;
    while (zero_mult < deg && std::abs(c[size_t(zero_mult)]) <= 1e-14 * mag) ++zero_mult;
    std::vector<C> mid(c.begin() + zero_mult, c.begin() + deg + 1);
    std::vector<C> points(static_cast<size_t>(zero_mult), C(0.0, 0.0));
    int d = int(mid.size()) - 1;
    if (d > 0) {
        // scale roots toward the unit disk before the eigensolver
        double ratio = 0.0;
        for (int i = 0; i < d; ++i)
            ratio = std::max(ratio, std::abs(mid[size_t(i)]) / std::abs(mid[size_t(d)]));
        double s = 1.0 + ratio;
        double logs = std::log(s);
        std::vector<C> monic(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            C r = mid[size_t(i)] / mid[size_t(d)];
            double damp = std::exp(-double(d - i) * logs);
            monic[size_t(i)] = r * damp;
        }
        auto eigs = companion_roots(monic);
        for (auto& e : eigs) {
            C z = newton_polish(mid, e * s);
            if (std::isfinite(z.real()) && std::isfinite(z.imag())) points.push_back(z);
            else points.push_back(e * s);
        }
    }
    return points;
}

}  // namespace

double poly_residual(const UniPoly<ComplexF>& p, std::complex<double> z) {
    auto c = raw_coeffs(p);
    double s = eval_scale(c, z);
    return s > 0.0 ? std::abs(eval_raw(c, z)) / s : 0.0;
}

std::vector<RootCluster> roots(const UniPoly<ComplexF>& p) {
    if (p.is_identically_zero()) throw std::invalid_argument("roots: zero polynomial");
    auto c = raw_coeffs(p);
    auto pts = float_root_points(c);
    std::vector<std::pair<C, int>> weighted;
    weighted.reserve(pts.size());
    for (const auto& z : pts) weighted.emplace_back(z, 1);
    return cluster_points(std::move(weighted), c);
}

std::vector<TaggedRoot> roots_exact(const UniPoly<GaussianRational>& p) {
    if (p.is_identically_zero()) throw std::invalid_argument("roots: zero polynomial");
    auto factors = yun_squarefree(p);
    auto full_float = raw_coeffs(approx_poly(p));
    std::vector<TaggedRoot> out;
    for (const auto& [factor, mult] : factors) {
        auto fc = raw_coeffs(approx_poly(factor));
        auto pts = float_root_points(fc);
        for (const auto& z : pts) {
            TaggedRoot tr;
            tr.cluster.center = z;
            tr.cluster.radius = 0.0;
            tr.cluster.multiplicity = mult;
            // recognize real rational roots and certify them exactly
            if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z.real()))) {
                if (auto cand = Rational::reconstruct(z.real(), uint64_t(1) << 20)) {
                    double err = std::abs(cand->to_double_nearest() - z.real());
                    if (err <= 1e-7 * (1.0 + std::abs(z.real())) &&
                        factor.eval(GaussianRational(*cand)).is_zero()) {
                        tr.exact_value = GaussianRational(*cand);
                        tr.cluster.center = C(cand->to_double_nearest(), 0.0);
                    }
                }
            }
            {
                double s = eval_scale(full_float, tr.cluster.center);
                tr.cluster.residual =
                    s > 0.0 ? std::abs(eval_raw(full_float, tr.cluster.center)) / s : 0.0;
            }
            out.push_back(std::move(tr));
        }
    }
    std::sort(out.begin(), out.end(), [](const TaggedRoot& a, const TaggedRoot& b) {
        return lex_less(a.cluster.center, b.cluster.center);
    });
    return out;
}

}  // namespace prodvec
