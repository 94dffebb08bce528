#pragma once

#include <compare>
#include <ostream>

#include "dugg/base_ring.hpp"
#include "dugg/errors.hpp"

namespace dugg {

/// Default absolute tolerance for comparisons against zero.
inline constexpr double kDefaultTol = 1e-12;

/// Dual element s + d eps over a base ring, with eps^2 = 0.
template <BaseRing T>
struct Dual {
    T s{};  ///< standard part
    T d{};  ///< dual (infinitesimal) part

    constexpr Dual() = default;
    constexpr Dual(const T& std_part) : s(std_part) {}
    constexpr Dual(const T& std_part, const T& dual_part) : s(std_part), d(dual_part) {}

    static constexpr Dual eps() { return {T{}, ring_traits<T>::from_real(1.0)}; }

    constexpr Dual& operator+=(const Dual& o) {
        s += o.s;
        d += o.d;
        return *this;
    }
    constexpr Dual& operator-=(const Dual& o) {
        s -= o.s;
        d -= o.d;
        return *this;
    }
    constexpr Dual& operator*=(const Dual& o) {
        d = s * o.d + d * o.s;
        s = s * o.s;
        return *this;
    }
    constexpr Dual& operator*=(double k) {
        s *= k;
        d *= k;
        return *this;
    }

    friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

using DualNumber = Dual<double>;
using DualComplex = Dual<Complex>;
using DualQuaternion = Dual<Quaternion>;

template <BaseRing T>
constexpr Dual<T> operator-(const Dual<T>& a) { return {-a.s, -a.d}; }
template <BaseRing T>
constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <BaseRing T>
constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <BaseRing T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
    return {a.s * b.s, a.s * b.d + a.d * b.s};
}
template <BaseRing T>
constexpr Dual<T> operator*(Dual<T> a, double k) { return a *= k; }
template <BaseRing T>
constexpr Dual<T> operator*(double k, Dual<T> a) { return a *= k; }

/// Dual number scaling of a dual element; dual numbers commute with every ring.
template <BaseRing T>
constexpr Dual<T> scale(const Dual<T>& a, const DualNumber& k) {
    return {a.s * k.s, a.s * k.d + a.d * k.s};
}

template <BaseRing T>
Dual<T> conj(const Dual<T>& a) { return {base_conj(a.s), base_conj(a.d)}; }

template <BaseRing T>
constexpr DualNumber real_part(const Dual<T>& a) { return {base_real(a.s), base_real(a.d)}; }

template <BaseRing T>
bool appreciable(const Dual<T>& a, double tol = kDefaultTol) { return base_abs(a.s) > tol; }

/// |a|^2 = a* a as a dual number.
template <BaseRing T>
DualNumber squared_norm(const Dual<T>& a) {
    return {base_norm2(a.s), 2.0 * base_real(base_conj(a.s) * a.d)};
}

/// Magnitude: |a_s| + (a_s* a_d + a_d* a_s) / (2|a_s|) eps, or |a_d| eps when
/// the standard part vanishes.
template <BaseRing T>
DualNumber magnitude(const Dual<T>& a, double tol = kDefaultTol) {
    const double ns = base_abs(a.s);
    if (ns <= tol) return {0.0, base_abs(a.d)};
    return {ns, base_real(base_conj(a.s) * a.d) / ns};
}

template <BaseRing T>
Dual<T> inverse(const Dual<T>& a, double tol = kDefaultTol) {
    if (!appreciable(a, tol)) throw InfinitesimalNotInvertible();
    const double n2 = base_norm2(a.s);
    const T inv_s = base_conj(a.s) * (1.0 / n2);
    return {inv_s, -(inv_s * a.d * inv_s)};
}

/// |a_s| = 1 and a_s a_d* + a_d a_s* = 0, both within tol.
template <BaseRing T>
bool is_unit(const Dual<T>& a, double tol = kDefaultTol) {
    const T cross = a.s * base_conj(a.d) + a.d * base_conj(a.s);
    return std::abs(base_abs(a.s) - 1.0) <= tol && base_abs(cross) <= tol;
}

/// Total order on dual numbers: lexicographic on (standard, dual).
constexpr std::strong_ordering compare(const DualNumber& a, const DualNumber& b) {
    if (a.s < b.s) return std::strong_ordering::less;
    if (a.s > b.s) return std::strong_ordering::greater;
    if (a.d < b.d) return std::strong_ordering::less;
    if (a.d > b.d) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

constexpr bool operator<(const DualNumber& a, const DualNumber& b) { return compare(a, b) < 0; }
constexpr bool operator>(const DualNumber& a, const DualNumber& b) { return compare(a, b) > 0; }
constexpr bool operator<=(const DualNumber& a, const DualNumber& b) { return compare(a, b) <= 0; }
constexpr bool operator>=(const DualNumber& a, const DualNumber& b) { return compare(a, b) >= 0; }

/// a >= b under the dual order with slack: standard parts within tol are
/// treated as tied and the dual parts decide, again with slack tol.
inline bool geq_tol(const DualNumber& a, const DualNumber& b, double tol) {
    if (std::abs(a.s - b.s) <= tol) return a.d > b.d - tol;
    return a.s > b.s;
}

/// Largest componentwise deviation between two dual elements.
template <BaseRing T>
double max_abs_diff(const Dual<T>& a, const Dual<T>& b) {
    return std::max(base_max_abs(a.s - b.s), base_max_abs(a.d - b.d));
}

template <BaseRing T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& a) {
    return os << a.s << " + " << a.d << "eps";
}

}  // namespace dugg
