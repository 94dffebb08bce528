#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "dugg/dual_matrix.hpp"

namespace dugg {

/// Eigen-decomposition of a Hermitian matrix over a base ring: real eigenvalues
/// sorted in decreasing order and orthonormal eigenvector columns.
template <BaseRing T>
struct StandardEigen {
    Eigen::VectorXd values;
    Mat<T> vectors;
    int sweeps = 0;
};

struct JacobiOptions {
    double off_tol = 1e-12;  ///< stop when off(A) <= off_tol * max(1, ||A||_F)
    int max_sweeps = 100;
};

/// Cyclic Jacobi for real symmetric or complex Hermitian matrices.
///
/// Each rotation first removes the phase of a_pq with a diagonal unitary and
/// then applies the real symmetric rotation, so the combined 2x2 unitary is
///     U = [[c, s], [-s conj(phase), c conj(phase)]]
/// on rows/columns (p, q). Sweeps run in fixed index order, so the result is
/// a deterministic function of the input.
template <BaseRing T>
StandardEigen<T> jacobi_eigen(Mat<T> a, const JacobiOptions& opt = {}) {
    static_assert(ring_of<T> != Ring::quaternion, "embed quaternion matrices first");
    if (a.rows() != a.cols()) throw ShapeMismatch("eigen-decomposition needs a square matrix");
    const Index n = a.rows();
    Mat<T> v = Mat<T>::Identity(n, n);
    const double scale = std::max(1.0, frobenius_norm<T>(a));
    const double target = opt.off_tol * scale;

    auto off_norm = [&] {
        double acc = 0.0;
        for (Index q = 1; q < n; ++q)
            for (Index p = 0; p < q; ++p) acc += 2.0 * base_norm2(a(p, q));
        return std::sqrt(acc);
    };

    int sweep = 0;
    for (; sweep < opt.max_sweeps && off_norm() > target; ++sweep) {
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const T b = a(p, q);
                const double mag = base_abs(b);
                if (mag < 1e-290) {  // 1 / mag would overflow; the entry is numerically zero
                    a(p, q) = T{};
                    a(q, p) = T{};
                    continue;
                }
                const T phase = b / mag;
                const T cphase = base_conj(phase);
                const double app = base_real(a(p, p));
                const double aqq = base_real(a(q, q));
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (Index k = 0; k < n; ++k) {  // A <- A U
                    const T akp = a(k, p);
                    const T akq = a(k, q);
                    a(k, p) = akp * c - akq * cphase * s;
                    a(k, q) = akp * s + akq * cphase * c;
                }
                for (Index k = 0; k < n; ++k) {  // A <- U* A
                    const T apk = a(p, k);
                    const T aqk = a(q, k);
                    a(p, k) = apk * c - phase * aqk * s;
                    a(q, k) = apk * s + phase * aqk * c;
                }
                for (Index k = 0; k < n; ++k) {  // V <- V U
                    const T vkp = v(k, p);
                    const T vkq = v(k, q);
                    v(k, p) = vkp * c - vkq * cphase * s;
                    v(k, q) = vkp * s + vkq * cphase * c;
                }
                a(p, q) = T{};
                a(q, p) = T{};
                a(p, p) = ring_traits<T>::from_real(base_real(a(p, p)));
                a(q, q) = ring_traits<T>::from_real(base_real(a(q, q)));
            }
        }
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
        return base_real(a(x, x)) > base_real(a(y, y));
    });

    StandardEigen<T> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        const Index src = order[static_cast<std::size_t>(i)];
        out.values(i) = base_real(a(src, src));
        out.vectors.col(i) = v.col(src);
    }
    out.sweeps = sweep;
    return out;
}

/// Groups consecutive entries of a decreasing sequence whose gap is at most
/// rel_tol * max(1, |value|). Returns [begin, end) index ranges.
std::vector<std::pair<Index, Index>> cluster_ranges(const Eigen::VectorXd& values, double rel_tol);

/// Quaternion Hermitian eigen-decomposition via the complex adjoint embedding.
/// Paired eigenvalues are collapsed and one quaternion eigenvector per pair is
/// recovered by pivoted Gram-Schmidt inside each cluster.
StandardEigen<Quaternion> quaternion_hermitian_eigen(const Mat<Quaternion>& a,
                                                     const JacobiOptions& opt = {},
                                                     double cluster_rel_tol = 1e-8);

/// Hermitian eigen-decomposition over any base ring.
template <BaseRing T>
StandardEigen<T> standard_hermitian_eigen(const Mat<T>& a, const JacobiOptions& opt = {},
                                          double cluster_rel_tol = 1e-8) {
    if constexpr (ring_of<T> == Ring::quaternion) {
        return quaternion_hermitian_eigen(a, opt, cluster_rel_tol);
    } else {
        return jacobi_eigen<T>(a, opt);
    }
}

}  // namespace dugg
