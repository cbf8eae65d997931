#include "prodvec/floatlinalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace prodvec {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    return e;
}

}  // namespace

SvdInfo svd_of(const CMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
    SvdInfo info;
    const auto& sv = svd.singularValues();
    info.singular_values.assign(sv.data(), sv.data() + sv.size());
    const auto& v = svd.matrixV();
    info.right_vectors.resize(static_cast<size_t>(v.cols()));
    for (int c = 0; c < v.cols(); ++c) {
        auto& col = info.right_vectors[static_cast<size_t>(c)];
        col.resize(static_cast<size_t>(v.rows()));
        for (int r = 0; r < v.rows(); ++r) col[static_cast<size_t>(r)] = v(r, c);
    }
    return info;
}

int rank_from_singular_values(const std::vector<double>& sv, double rel_tol) {
    if (sv.empty()) return 0;
    double smax = sv.front();
    if (smax == 0.0) return 0;
    int rank = 0;
    for (double s : sv)
        if (s > rel_tol * smax) ++rank;
    return rank;
}

std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& monic) {
    const int d = static_cast<int>(monic.size());
    if (d == 0) return {};
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -monic[static_cast<size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return roots;
}

}  // namespace prodvec
