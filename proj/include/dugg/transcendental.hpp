#pragma once

#include <vector>

#include "dugg/dual.hpp"

namespace dugg {

/// Dual angle theta_s + theta_d eps with theta_s in (-pi, pi].
struct DualAngle {
    double s = 0.0;
    double d = 0.0;

    friend constexpr bool operator==(const DualAngle&, const DualAngle&) = default;
};

/// Wraps an angle into (-pi, pi].
double canonical_angle(double theta);

/// e^a = e^{a_s} + a_d e^{a_s} eps.
DualComplex dc_exp(const DualComplex& a);

/// log a = log a_s + a_s^{-1} a_d eps on the principal branch.
/// Throws InfinitesimalNotInvertible when a is infinitesimal.
DualComplex dc_log(const DualComplex& a, double tol = kDefaultTol);

/// The dual angle theta with e^{i theta} = a, theta = -i log(a).
/// Throws NotUnit when a is not a unit dual complex number.
DualAngle unit_to_angle(const DualComplex& a, double tol = 1e-9);

/// e^{i theta} for a dual angle.
DualComplex exp_i(const DualAngle& theta);

/// cos theta_s - theta_d sin theta_s eps.
DualNumber dual_cos(const DualAngle& theta);

/// The n roots e^{i (theta + 2 pi j) / n}, j = 0..n-1, of a unit a.
std::vector<DualComplex> nth_roots(const DualComplex& a, int n, double tol = 1e-9);

/// Result of reducing a dual quaternion to a similar dual complex number.
struct ComplexReduction {
    DualComplex a;     ///< dual complex representative
    DualQuaternion u;  ///< unit dual quaternion with a = u* q u
};

/// Finds a unit u with u* q u dual complex. Re and |Im| are preserved.
ComplexReduction dq_to_dc(const DualQuaternion& q, double tol = kDefaultTol);

/// Imaginary (vector) part of a dual quaternion.
DualQuaternion imag_part(const DualQuaternion& q);

}  // namespace dugg
