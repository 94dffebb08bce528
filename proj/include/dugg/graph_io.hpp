#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dugg/dual_scalar.hpp"
#include "dugg/gain_graph.hpp"

namespace dugg {

using AnyGainGraph = std::variant<GainGraph<double>, GainGraph<Complex>, GainGraph<Quaternion>>;

inline Ring graph_ring(const AnyGainGraph& g) { return static_cast<Ring>(g.index()); }

/// Real components of a base ring element: [x], [re, im] or [w, x, y, z].
template <BaseRing T>
std::vector<double> components(const T& v) {
    if constexpr (ring_of<T> == Ring::real) return {v};
    else if constexpr (ring_of<T> == Ring::complex) return {v.real(), v.imag()};
    else return {v.w, v.x, v.y, v.z};
}

/// Inverse of components(); the caller guarantees the length.
template <BaseRing T>
T from_components(const std::vector<double>& c) {
    if constexpr (ring_of<T> == Ring::real) return c[0];
    else if constexpr (ring_of<T> == Ring::complex) return {c[0], c[1]};
    else return {c[0], c[1], c[2], c[3]};
}

/// Reads a gain graph document:
///
///   {"format": "dugg-gain-graph", "version": 1, "ring": "complex", "n": 3,
///    "edges": [{"u": 0, "v": 1, "gain_std": [1, 0], "gain_dual": [0, -1]}, ...]}
///
/// Throws SyntaxError (line 0 for structural problems), BadRing, NotUnitGain
/// and the GraphError family.
AnyGainGraph parse_gain_graph(std::string_view text, double tol = kGainTol);

/// Full-precision rendering; parse_gain_graph(serialize(g)) == g exactly.
std::string serialize(const AnyGainGraph& g);

AnyGainGraph read_gain_graph_file(const std::string& path, double tol = kGainTol);
void write_text_file(const std::string& path, const std::string& text);

// ---- generators ----------------------------------------------------------

template <BaseRing T>
Dual<T> one() {
    return Dual<T>{ring_traits<T>::from_real(1.0)};
}

/// P_n with every gain 1.
template <BaseRing T>
GainGraph<T> path_graph(int n) {
    if (n < 1) throw BadParameter("path needs at least one vertex");
    std::vector<GainEdge<T>> edges;
    for (int k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1, one<T>()});
    return GainGraph<T>::build(n, edges);
}

/// C_n with gain 1 on v_k v_{k+1} and q on the closing edge v_n v_1, so the
/// walk v_1 v_2 ... v_n v_1 has gain q.
template <BaseRing T>
GainGraph<T> cycle_graph(int n, const Dual<T>& q = one<T>()) {
    if (n < 3) throw BadParameter("cycle needs at least three vertices");
    std::vector<GainEdge<T>> edges;
    for (int k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1, one<T>()});
    edges.push_back({n - 1, 0, q});
    return GainGraph<T>::build(n, edges);
}

/// K_n with every gain 1.
template <BaseRing T>
GainGraph<T> complete_graph(int n) {
    if (n < 1) throw BadParameter("complete graph needs at least one vertex");
    std::vector<GainEdge<T>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, one<T>()});
    return GainGraph<T>::build(n, edges);
}

using Rng = std::mt19937_64;

/// Random unit dual element. Real: +-1. Complex: e^{i t_s} (1 + i t_d eps).
/// Quaternion: normalised Gaussian standard part, Gaussian dual part with its
/// component along the standard part removed.
template <BaseRing T>
Dual<T> random_unit(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    if constexpr (ring_of<T> == Ring::real) {
        return {std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0, 0.0};
    } else if constexpr (ring_of<T> == Ring::complex) {
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        const double ts = angle(rng);
        const double td = gauss(rng);
        const Complex ps = std::polar(1.0, ts);
        return {ps, Complex(0.0, td) * ps};
    } else {
        Quaternion ps;
        do {
            ps = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        } while (norm2(ps) < 1e-6);
        ps = ps * (1.0 / abs(ps));
        const Quaternion d{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        return {ps, d - ps * real(conj(ps) * d)};
    }
}

/// Erdos-Renyi G(n, p) edge list.
std::vector<std::pair<int, int>> random_edges(int n, double p, Rng& rng);

/// A uniformly random recursive spanning tree plus G(n, p) extra edges.
std::vector<std::pair<int, int>> random_connected_edges(int n, double p, Rng& rng);

template <BaseRing T>
GainGraph<T> random_gains(int n, const std::vector<std::pair<int, int>>& pairs, Rng& rng) {
    std::vector<GainEdge<T>> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, random_unit<T>(rng)});
    return GainGraph<T>::build(n, edges);
}

/// G(n, p) with independent random unit gains; fixed by (n, p, seed).
template <BaseRing T>
GainGraph<T> random_gain_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw BadParameter("random graph needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw BadParameter("edge probability must lie in [0, 1]");
    Rng rng(seed);
    const auto pairs = random_edges(n, p, rng);
    return random_gains<T>(n, pairs, rng);
}

/// Balanced graph: gains theta_u^{-1} theta_v from a random potential.
template <BaseRing T>
GainGraph<T> random_balanced(int n, const std::vector<std::pair<int, int>>& pairs, Rng& rng) {
    std::vector<Dual<T>> theta;
    for (int v = 0; v < n; ++v) theta.push_back(random_unit<T>(rng));
    std::vector<GainEdge<T>> edges;
    for (auto [u, v] : pairs) {
        edges.push_back({u, v, conj(theta[static_cast<std::size_t>(u)]) * theta[static_cast<std::size_t>(v)]});
    }
    return GainGraph<T>::build(n, edges);
}

/// Connected graph whose standard-part gain graph is neither balanced nor
/// antibalanced (mismatch at least `margin`). Needs n >= 3, or n >= 4 for
/// real gains: a real triangle is always balanced or antibalanced.
template <BaseRing T>
GainGraph<T> random_unbalanced_connected(int n, double p, Rng& rng, double margin = 1e-3) {
    const int min_n = ring_of<T> == Ring::real ? 4 : 3;
    if (n < min_n) throw BadParameter("an unbalanced graph needs at least " + std::to_string(min_n) + " vertices");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const auto pairs = random_connected_edges(n, p, rng);
        if (pairs.size() < static_cast<std::size_t>(n)) continue;  // a tree is always balanced
        GainGraph<T> g = random_gains<T>(n, pairs, rng);
        const GainGraph<T> st = standard_part(g);
        if (balance_certificate(st, margin).balanced || is_antibalanced(st, margin)) continue;
        return g;
    }
    throw BadParameter("no unbalanced graph found; raise the edge probability");
}

enum class Family { path, cycle, complete, random };

struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    Ring ring = Ring::complex;
    DualScalar gain = DualNumber{1.0};  ///< closing gain of a cycle
    double p = 0.5;                      ///< edge probability for random
    std::uint64_t seed = 0;
};

Family parse_family(std::string_view name);
AnyGainGraph generate(const FamilySpec& spec);

}  // namespace dugg
