#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dugg/dual.hpp"

namespace dugg {

/// Dual element over a base ring chosen at runtime. Arithmetic between
/// different rings is rejected rather than silently widened.
class DualScalar {
public:
    using Storage = std::variant<DualNumber, DualComplex, DualQuaternion>;

    DualScalar() : value_(DualNumber{}) {}
    DualScalar(const DualNumber& v) : value_(v) {}
    DualScalar(const DualComplex& v) : value_(v) {}
    DualScalar(const DualQuaternion& v) : value_(v) {}

    Ring ring() const { return static_cast<Ring>(value_.index()); }
    const Storage& storage() const { return value_; }

    template <BaseRing T>
    const Dual<T>& as() const {
        if (ring() != ring_of<T>) throw RingMismatch();
        return std::get<Dual<T>>(value_);
    }

    /// Lossless widening into a larger ring (real -> complex -> quaternion).
    DualScalar widen(Ring target) const;

    friend bool operator==(const DualScalar&, const DualScalar&) = default;

private:
    Storage value_;
};

DualScalar operator+(const DualScalar& a, const DualScalar& b);
DualScalar operator-(const DualScalar& a, const DualScalar& b);
DualScalar operator*(const DualScalar& a, const DualScalar& b);
DualScalar conj(const DualScalar& a);
DualScalar inverse(const DualScalar& a, double tol = kDefaultTol);
DualNumber magnitude(const DualScalar& a, double tol = kDefaultTol);
DualNumber real_part(const DualScalar& a);
bool is_unit(const DualScalar& a, double tol = kDefaultTol);

/// Shortest decimal string that reads back to exactly the same double.
std::string format_real(double v);

template <BaseRing T>
std::string format_base(const T& v);

/// Renders "S + D*eps"; non-real parts are parenthesised, e.g.
/// "(1+2i) + (3-1i)*eps".
std::string to_string(const DualScalar& a);

template <BaseRing T>
std::string to_string(const Dual<T>& a) { return to_string(DualScalar(a)); }

/// Parses the grammar produced by to_string. When `ring` is given the value
/// is widened to it; a value that needs a wider ring is an error. Throws
/// BadParameter on malformed text.
DualScalar parse_dual_scalar(std::string_view text, std::optional<Ring> ring = std::nullopt);

}  // namespace dugg
