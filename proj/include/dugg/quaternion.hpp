#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include <Eigen/Core>

namespace dugg {

/// Real quaternion q = w + x i + y j + z k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_) : w(w_) {}
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(std::complex<double> c) : w(c.real()), x(c.imag()) {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }
    constexpr Quaternion& operator*=(const Quaternion& o);

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

// Hamilton product; order matters.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double real(const Quaternion& q) { return q.w; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// Largest absolute component; used for componentwise tolerance tests.
inline double max_abs_component(const Quaternion& q) {
    return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace dugg

namespace Eigen {

// Storage-only support. Products over quaternion matrices go through dugg's
// own loops because Eigen assumes a commutative scalar field.
template <>
struct NumTraits<dugg::Quaternion> : GenericNumTraits<dugg::Quaternion> {
    using Real = double;
    using NonInteger = dugg::Quaternion;
    using Literal = dugg::Quaternion;
    using Nested = dugg::Quaternion;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 4,
        AddCost = 4,
        MulCost = 16
    };
    static inline Real epsilon() { return NumTraits<double>::epsilon(); }
    static inline Real dummy_precision() { return NumTraits<double>::dummy_precision(); }
    static inline int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
