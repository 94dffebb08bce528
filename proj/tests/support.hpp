#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dugg/graph_io.hpp"
#include "dugg/spectra.hpp"

namespace support {

using namespace dugg;

inline const double kRoot2 = std::sqrt(2.0);

inline std::string data_path(const std::string& name) { return std::string(DUGG_DATA_DIR) + "/" + name; }

/// Triangle with a12 = 1 - i eps, a23 = -i + d23 eps and the given a13.
inline GainGraph<Complex> example_triangle(Complex a13, double d23) {
    return GainGraph<Complex>::build(3, {{0, 1, {{1, 0}, {0, -1}}},
                                         {1, 2, {{0, -1}, {d23, 0}}},
                                         {0, 2, {a13, {0, 0}}}});
}

inline GainGraph<Complex> phi1() { return example_triangle({0, -1}, 1.0); }
inline GainGraph<Complex> phi2() { return example_triangle(Complex(1, -1) / kRoot2, 1.0); }
inline GainGraph<Complex> phi3() { return example_triangle(Complex(1, -1) / kRoot2, 2.0); }

/// Walk gain of phi3 around 0 1 2 0.
inline DualComplex phi3_walk_gain() {
    return {std::polar(1.0, -std::numbers::pi / 4), Complex(1, 1) / kRoot2};
}

template <BaseRing T>
double max_diff(const std::vector<Dual<T>>& a, const std::vector<Dual<T>>& b) {
    if (a.size() != b.size()) return INFINITY;
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, max_abs_diff(a[i], b[i]));
    return out;
}

}  // namespace support
