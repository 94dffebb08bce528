#include "dugg/dual_matrix.hpp"

namespace dugg {

Mat<Complex> complex_adjoint(const Mat<Quaternion>& a) {
    const Index r = a.rows();
    const Index c = a.cols();
    Mat<Complex> m(2 * r, 2 * c);
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) {
            const Quaternion& q = a(i, j);
            const Complex a1(q.w, q.x);
            const Complex a2(q.y, q.z);
            m(i, j) = a1;
            m(i, j + c) = a2;
            m(i + r, j) = -std::conj(a2);
            m(i + r, j + c) = std::conj(a1);
        }
    }
    return m;
}

Mat<Quaternion> from_complex_adjoint(const Mat<Complex>& m) {
    const Index r = m.rows() / 2;
    const Index c = m.cols() / 2;
    Mat<Quaternion> a(r, c);
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) {
            const Complex a1 = m(i, j);
            const Complex a2 = m(i, j + c);
            a(i, j) = {a1.real(), a1.imag(), a2.real(), a2.imag()};
        }
    }
    return a;
}

Vec<Quaternion> quaternion_from_embedded(const Eigen::Ref<const Eigen::VectorXcd>& v) {
    const Index n = v.size() / 2;
    Vec<Quaternion> x(n);
    for (Index i = 0; i < n; ++i) {
        const Complex x1 = v(i);
        const Complex x2 = -std::conj(v(i + n));
        x(i) = {x1.real(), x1.imag(), x2.real(), x2.imag()};
    }
    return x;
}

}  // namespace dugg
