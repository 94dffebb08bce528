#pragma once

#include <vector>

#include "dugg/jacobi.hpp"

namespace dugg {

/// Eigenvalue lambda = lambda_s + lambda_d eps with unit eigenvector x, A x = x lambda.
template <BaseRing T>
struct EigenPair {
    DualNumber value;
    DualVector<T> vector;
};

struct EigenOptions {
    double hermitian_tol = 1e-10;
    /// Standard eigenvalues closer than cluster_rel_tol * max(1, |lambda_s|)
    /// are treated as one repeated eigenvalue.
    double cluster_rel_tol = 1e-8;
    /// Entries of x_s below this magnitude are skipped when fixing the gauge.
    double gauge_tol = 1e-8;
    JacobiOptions jacobi{};
};

namespace detail {

template <BaseRing T>
T unit_phase_inverse(const T& x) {
    return base_conj(x) * (1.0 / base_abs(x));
}

}  // namespace detail

/// All n eigenpairs of a dual Hermitian matrix, sorted decreasing under the
/// dual-number order.
///
/// Standard parts come from the Hermitian eigen-decomposition of A_s. Inside
/// each cluster of repeated lambda_s the orthonormal basis W is rotated so the
/// supplement matrix W* A_d W becomes diagonal; its eigenvalues are the dual
/// parts. Eigenvector dual parts use the first-order sum over the other
/// clusters,
///     x_d,i = sum_j x_s,j (x_s,j* A_d x_s,i) / (lambda_s,i - lambda_s,j),
/// so x_s* x_d = 0 and the eigenvectors stay orthonormal as dual vectors.
/// The gauge fixes the first appreciable entry of every x_s to be positive real.
template <BaseRing T>
std::vector<EigenPair<T>> hermitian_eigendecomposition(const DualMatrix<T>& a,
                                                        const EigenOptions& opt = {}) {
    if (!is_hermitian(a, opt.hermitian_tol)) throw NotHermitian();
    const Index n = a.rows();
    const Mat<T> as = (a.s + adjoint<T>(a.s)) * ring_traits<T>::from_real(0.5);
    const Mat<T> ad = (a.d + adjoint<T>(a.d)) * ring_traits<T>::from_real(0.5);

    const StandardEigen<T> base = standard_hermitian_eigen<T>(as, opt.jacobi, opt.cluster_rel_tol);
    Mat<T> xs = base.vectors;
    Eigen::VectorXd lam_s = base.values;
    Eigen::VectorXd lam_d(n);
    std::vector<Index> cluster_of(static_cast<std::size_t>(n));

    const auto clusters = cluster_ranges(base.values, opt.cluster_rel_tol);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const auto [begin, end] = clusters[c];
        const Index k = end - begin;
        const Mat<T> w = xs.middleCols(begin, k);
        Mat<T> supplement = multiply<T>(multiply<T>(adjoint<T>(w), ad), w);
        supplement = (supplement + adjoint<T>(supplement)) * ring_traits<T>::from_real(0.5);
        const StandardEigen<T> sub =
            standard_hermitian_eigen<T>(supplement, opt.jacobi, opt.cluster_rel_tol);
        xs.middleCols(begin, k) = multiply<T>(w, sub.vectors);
        const double mean = lam_s.segment(begin, k).mean();
        for (Index i = begin; i < end; ++i) {
            lam_s(i) = mean;
            lam_d(i) = sub.values(i - begin);
            cluster_of[static_cast<std::size_t>(i)] = static_cast<Index>(c);
        }
    }

    const Mat<T> coupling = multiply<T>(multiply<T>(adjoint<T>(xs), ad), xs);
    Mat<T> coef = Mat<T>::Constant(n, n, T{});
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (cluster_of[static_cast<std::size_t>(i)] != cluster_of[static_cast<std::size_t>(j)])
                coef(j, i) = coupling(j, i) * (1.0 / (lam_s(i) - lam_s(j)));
    Mat<T> xd = multiply<T>(xs, coef);

    Vec<T> gauge(n);
    for (Index i = 0; i < n; ++i) {
        gauge(i) = ring_traits<T>::from_real(1.0);
        for (Index r = 0; r < n; ++r) {
            if (base_abs(xs(r, i)) > opt.gauge_tol) {
                gauge(i) = detail::unit_phase_inverse(xs(r, i));
                break;
            }
        }
    }
    scale_columns_right<T>(xs, gauge);
    scale_columns_right<T>(xd, gauge);

    std::vector<EigenPair<T>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        out.push_back({{lam_s(i), lam_d(i)}, {Vec<T>(xs.col(i)), Vec<T>(xd.col(i))}});
    }
    return out;
}

/// Eigenvalues only, in decreasing dual order.
template <BaseRing T>
std::vector<DualNumber> hermitian_eigenvalues(const DualMatrix<T>& a, const EigenOptions& opt = {}) {
    std::vector<DualNumber> out;
    for (const auto& p : hermitian_eigendecomposition(a, opt)) out.push_back(p.value);
    return out;
}

}  // namespace dugg
