#include "dugg/transcendental.hpp"

#include <cmath>
#include <numbers>

namespace dugg {

using std::numbers::pi;

double canonical_angle(double theta) {
    double t = std::remainder(theta, 2.0 * pi);
    if (t <= -pi) t += 2.0 * pi;
    return t;
}

DualComplex dc_exp(const DualComplex& a) {
    const Complex e = std::exp(a.s);
    return {e, a.d * e};
}

DualComplex dc_log(const DualComplex& a, double tol) {
    if (!appreciable(a, tol)) throw InfinitesimalNotInvertible();
    Complex l = std::log(a.s);
    // std::log puts a negative real with a -0 imaginary part on -pi.
    if (l.imag() <= -pi) l.imag(pi);
    return {l, a.d / a.s};
}

DualAngle unit_to_angle(const DualComplex& a, double tol) {
    if (!is_unit(a, tol)) throw NotUnit();
    const double theta_s = canonical_angle(std::arg(a.s));
    // theta_d = -i a_d a_s^*, real for a unit.
    const double theta_d = (a.d * std::conj(a.s)).imag();
    return {theta_s, theta_d};
}

DualComplex exp_i(const DualAngle& theta) {
    const Complex e = std::polar(1.0, theta.s);
    return {e, Complex(0.0, theta.d) * e};
}

DualNumber dual_cos(const DualAngle& theta) {
    return {std::cos(theta.s), -theta.d * std::sin(theta.s)};
}

std::vector<DualComplex> nth_roots(const DualComplex& a, int n, double tol) {
    if (n < 1) throw BadParameter("root order must be positive");
    const DualAngle theta = unit_to_angle(a, tol);
    std::vector<DualComplex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        roots.push_back(exp_i({(theta.s + 2.0 * pi * j) / n, theta.d / n}));
    }
    return roots;
}

DualQuaternion imag_part(const DualQuaternion& q) {
    return {{0.0, q.s.x, q.s.y, q.s.z}, {0.0, q.d.x, q.d.y, q.d.z}};
}

namespace {

// Unit quaternion u with u* v u = |v| i for the pure quaternion v = (v1, v2, v3).
// Built from x = v1 + |v| - v3 j + v2 k; the scalar part is evaluated without
// cancellation when v1 is close to -|v|.
Quaternion rotate_to_i(double v1, double v2, double v3) {
    const double nv = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    const double lead = v1 >= 0.0 ? v1 + nv : (v2 * v2 + v3 * v3) / (nv - v1);
    Quaternion x{lead, 0.0, -v3, v2};
    // v on the negative i axis: j* (-i) j = i.
    if (norm2(x) == 0.0) return Quaternion::j();
    return x / abs(x);
}

}  // namespace

ComplexReduction dq_to_dc(const DualQuaternion& q, double tol) {
    const DualQuaternion one{Quaternion{1.0}};
    auto as_complex = [](const DualQuaternion& v) {
        return DualComplex{{v.s.w, v.s.x}, {v.d.w, v.d.x}};
    };

    const bool complex_form = std::abs(q.s.y) <= tol && std::abs(q.s.z) <= tol &&
                              std::abs(q.d.y) <= tol && std::abs(q.d.z) <= tol;
    if (complex_form) return {as_complex(q), one};

    const double nq1 = std::sqrt(q.s.x * q.s.x + q.s.y * q.s.y + q.s.z * q.s.z);
    DualQuaternion u;
    if (nq1 <= tol) {
        const double nq3 = std::sqrt(q.d.x * q.d.x + q.d.y * q.d.y + q.d.z * q.d.z);
        if (nq3 <= tol) return {as_complex(q), one};
        u = {rotate_to_i(q.d.x, q.d.y, q.d.z), Quaternion{}};
    } else {
        const Quaternion us = rotate_to_i(q.s.x, q.s.y, q.s.z);
        const Quaternion r = conj(us) * q.d * us;
        const Quaternion t{0.0, 0.0, -r.z / nq1, r.y / nq1};
        u = {us, 0.5 * (us * t)};
    }
    return {as_complex(conj(u) * q * u), u};
}

}  // namespace dugg
