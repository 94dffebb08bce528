#pragma once

#include <Eigen/Dense>

#include "dugg/dual.hpp"

namespace dugg {

using Index = Eigen::Index;

template <BaseRing T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <BaseRing T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Dense dual matrix A = A_s + A_d eps.
template <BaseRing T>
struct DualMatrix {
    Mat<T> s;
    Mat<T> d;

    DualMatrix() = default;
    DualMatrix(Index rows, Index cols)
        : s(Mat<T>::Constant(rows, cols, T{})), d(Mat<T>::Constant(rows, cols, T{})) {}
    DualMatrix(Mat<T> std_part, Mat<T> dual_part) : s(std::move(std_part)), d(std::move(dual_part)) {
        if (s.rows() != d.rows() || s.cols() != d.cols()) {
            throw ShapeMismatch("standard and dual parts differ in shape");
        }
    }

    static DualMatrix identity(Index n) {
        DualMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m.s(i, i) = ring_traits<T>::from_real(1.0);
        return m;
    }

    Index rows() const { return s.rows(); }
    Index cols() const { return s.cols(); }

    Dual<T> operator()(Index i, Index j) const { return {s(i, j), d(i, j)}; }
    void set(Index i, Index j, const Dual<T>& v) {
        s(i, j) = v.s;
        d(i, j) = v.d;
    }
};

/// Dual vector x = x_s + x_d eps.
template <BaseRing T>
struct DualVector {
    Vec<T> s;
    Vec<T> d;

    DualVector() = default;
    explicit DualVector(Index n) : s(Vec<T>::Constant(n, T{})), d(Vec<T>::Constant(n, T{})) {}
    DualVector(Vec<T> std_part, Vec<T> dual_part) : s(std::move(std_part)), d(std::move(dual_part)) {}

    Index size() const { return s.size(); }
    Dual<T> operator[](Index i) const { return {s(i), d(i)}; }
};

// ---------------------------------------------------------------------------
// Base-ring matrix helpers. Quaternion products are written out so that the
// factor order a_ik * b_kj is never reassociated.

template <BaseRing T, class DerivedA, class DerivedB>
Mat<T> multiply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ");
    if constexpr (ring_of<T> == Ring::quaternion) {
        Mat<T> out = Mat<T>::Constant(a.rows(), b.cols(), T{});
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < b.cols(); ++j) {
                T acc{};
                for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
                out(i, j) = acc;
            }
        return out;
    } else {
        return a * b;
    }
}

template <BaseRing T, class Derived>
Mat<T> adjoint(const Eigen::MatrixBase<Derived>& a) {
    if constexpr (ring_of<T> == Ring::quaternion) {
        Mat<T> out(a.cols(), a.rows());
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
        return out;
    } else {
        return a.adjoint();
    }
}

/// Multiplies every column j on the right by the scalar g[j].
template <BaseRing T>
void scale_columns_right(Mat<T>& m, const Vec<T>& g) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) m(i, j) = m(i, j) * g(j);
}

/// Largest componentwise absolute value of a base-ring matrix.
template <BaseRing T, class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    double out = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out = std::max(out, base_max_abs<T>(m(i, j)));
    return out;
}

template <BaseRing T>
double frobenius_norm(const Mat<T>& m) {
    double acc = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) acc += base_norm2(m(i, j));
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Complex adjoint embedding of quaternion matrices. Writing A = A1 + A2 j with
// complex A1, A2 the embedding is [[A1, A2], [-conj(A2), conj(A1)]]; it is a
// ring homomorphism and maps Hermitian matrices to Hermitian matrices.

Mat<Complex> complex_adjoint(const Mat<Quaternion>& a);

/// Inverse map of complex_adjoint, reading the two top blocks.
Mat<Quaternion> from_complex_adjoint(const Mat<Complex>& m);

/// Quaternion vector x = x1 + x2 j recovered from an eigenvector (x1; -conj(x2))
/// of the embedding.
Vec<Quaternion> quaternion_from_embedded(const Eigen::Ref<const Eigen::VectorXcd>& v);

// ---------------------------------------------------------------------------
// Dual matrix operations.

template <BaseRing T>
DualMatrix<T> matmul(const DualMatrix<T>& a, const DualMatrix<T>& b) {
    return {multiply<T>(a.s, b.s), Mat<T>(multiply<T>(a.s, b.d) + multiply<T>(a.d, b.s))};
}

template <BaseRing T>
DualMatrix<T> operator*(const DualMatrix<T>& a, const DualMatrix<T>& b) { return matmul(a, b); }

template <BaseRing T>
DualMatrix<T> operator+(const DualMatrix<T>& a, const DualMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("shapes differ");
    return {Mat<T>(a.s + b.s), Mat<T>(a.d + b.d)};
}

template <BaseRing T>
DualMatrix<T> operator-(const DualMatrix<T>& a, const DualMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("shapes differ");
    return {Mat<T>(a.s - b.s), Mat<T>(a.d - b.d)};
}

template <BaseRing T>
DualMatrix<T> adjoint(const DualMatrix<T>& a) { return {adjoint<T>(a.s), adjoint<T>(a.d)}; }

template <BaseRing T>
DualVector<T> apply(const DualMatrix<T>& a, const DualVector<T>& x) {
    Mat<T> xs = x.s;
    Mat<T> xd = x.d;
    Mat<T> ys = multiply<T>(a.s, xs);
    Mat<T> yd = multiply<T>(a.s, xd) + multiply<T>(a.d, xs);
    return {Vec<T>(ys.col(0)), Vec<T>(yd.col(0))};
}

/// x* y as a dual element.
template <BaseRing T>
Dual<T> inner(const DualVector<T>& x, const DualVector<T>& y) {
    Dual<T> acc{};
    for (Index i = 0; i < x.size(); ++i) acc += conj(x[i]) * y[i];
    return acc;
}

/// Dual 2-norm: sqrt(sum |x_i|^2) when x_s != 0, else ||x_d|| eps.
template <BaseRing T>
DualNumber norm(const DualVector<T>& x, double tol = kDefaultTol) {
    double ns2 = 0.0;
    double cross = 0.0;
    double nd2 = 0.0;
    for (Index i = 0; i < x.size(); ++i) {
        ns2 += base_norm2(x.s(i));
        cross += base_real(base_conj(x.s(i)) * x.d(i));
        nd2 += base_norm2(x.d(i));
    }
    const double ns = std::sqrt(ns2);
    if (ns <= tol) return {0.0, std::sqrt(nd2)};
    return {ns, cross / ns};
}

template <BaseRing T>
bool is_hermitian(const DualMatrix<T>& a, double tol = 1e-10) {
    if (a.rows() != a.cols()) return false;
    return max_abs<T>(a.s - adjoint<T>(a.s)) <= tol && max_abs<T>(a.d - adjoint<T>(a.d)) <= tol;
}

/// Inverse of a base-ring square matrix; throws SingularStandardPart.
template <BaseRing T>
Mat<T> invert_base(const Mat<T>& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse needs a square matrix");
    if constexpr (ring_of<T> == Ring::quaternion) {
        return from_complex_adjoint(invert_base<Complex>(complex_adjoint(a), tol));
    } else {
        Eigen::FullPivLU<Mat<T>> lu(a);
        lu.setThreshold(tol);
        if (!lu.isInvertible()) throw SingularStandardPart();
        return lu.inverse();
    }
}

/// B_s = A_s^{-1}, B_d = -A_s^{-1} A_d A_s^{-1}.
template <BaseRing T>
DualMatrix<T> inverse(const DualMatrix<T>& a, double tol = 1e-12) {
    Mat<T> bs = invert_base<T>(a.s, tol);
    Mat<T> bd = -multiply<T>(multiply<T>(bs, a.d), bs);
    return {std::move(bs), std::move(bd)};
}

}  // namespace dugg
