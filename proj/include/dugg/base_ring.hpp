#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string_view>

#include "dugg/quaternion.hpp"

namespace dugg {

using Complex = std::complex<double>;

enum class Ring { real, complex, quaternion };

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view name);

template <class T>
struct ring_traits;

template <>
struct ring_traits<double> {
    static constexpr Ring ring = Ring::real;
    static constexpr double conj(double a) { return a; }
    static constexpr double real(double a) { return a; }
    static double abs(double a) { return std::abs(a); }
    static constexpr double norm2(double a) { return a * a; }
    static double max_abs_component(double a) { return std::abs(a); }
    static constexpr double from_real(double a) { return a; }
};

template <>
struct ring_traits<Complex> {
    static constexpr Ring ring = Ring::complex;
    static Complex conj(const Complex& a) { return std::conj(a); }
    static double real(const Complex& a) { return a.real(); }
    static double abs(const Complex& a) { return std::abs(a); }
    static double norm2(const Complex& a) { return std::norm(a); }
    static double max_abs_component(const Complex& a) {
        return std::max(std::abs(a.real()), std::abs(a.imag()));
    }
    static Complex from_real(double a) { return {a, 0.0}; }
};

template <>
struct ring_traits<Quaternion> {
    static constexpr Ring ring = Ring::quaternion;
    static constexpr Quaternion conj(const Quaternion& a) { return dugg::conj(a); }
    static constexpr double real(const Quaternion& a) { return a.w; }
    static double abs(const Quaternion& a) { return dugg::abs(a); }
    static constexpr double norm2(const Quaternion& a) { return dugg::norm2(a); }
    static double max_abs_component(const Quaternion& a) { return dugg::max_abs_component(a); }
    static constexpr Quaternion from_real(double a) { return {a}; }
};

/// One of the three base rings a dual element can be built over.
template <class T>
concept BaseRing = requires { ring_traits<T>::ring; };

template <BaseRing T>
inline constexpr Ring ring_of = ring_traits<T>::ring;

template <BaseRing T>
auto base_conj(const T& a) { return ring_traits<T>::conj(a); }
template <BaseRing T>
double base_real(const T& a) { return ring_traits<T>::real(a); }
template <BaseRing T>
double base_abs(const T& a) { return ring_traits<T>::abs(a); }
template <BaseRing T>
double base_norm2(const T& a) { return ring_traits<T>::norm2(a); }
template <BaseRing T>
double base_max_abs(const T& a) { return ring_traits<T>::max_abs_component(a); }

/// Number of real components in the base ring (1, 2 or 4).
template <BaseRing T>
constexpr int component_count() {
    if constexpr (ring_of<T> == Ring::real) return 1;
    else if constexpr (ring_of<T> == Ring::complex) return 2;
    else return 4;
}

}  // namespace dugg
