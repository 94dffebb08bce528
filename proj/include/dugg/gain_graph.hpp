#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "dugg/dual.hpp"
#include "dugg/graph.hpp"

namespace dugg {

/// Default componentwise tolerance for unit and balance checks on gains.
inline constexpr double kGainTol = 1e-9;

/// Gain on the oriented edge u -> v.
template <BaseRing T>
struct GainEdge {
    int u = 0;
    int v = 0;
    Dual<T> gain{};

    friend bool operator==(const GainEdge&, const GainEdge&) = default;
};

/// Dual unit gain graph. One gain is stored per edge for the orientation
/// u -> v with u < v; the reverse orientation reads the conjugate, which is
/// the inverse of a unit.
template <BaseRing T>
class GainGraph {
public:
    using Scalar = T;

    GainGraph() = default;

    /// Validates and canonicalises. An edge given as (v, u) with v > u has its
    /// gain stored conjugated. Throws NotUnitGain, DuplicateEdge, SelfLoop.
    static GainGraph build(int n, const std::vector<GainEdge<T>>& edges, double tol = kGainTol) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edges.size());
        for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
        GainGraph g;
        g.graph_ = UnderlyingGraph(n, pairs);
        g.gains_.resize(edges.size());
        for (const auto& e : edges) {
            if (!is_unit(e.gain, tol)) throw NotUnitGain(e.u, e.v);
            const std::size_t idx = *g.graph_.edge_index(e.u, e.v);
            g.gains_[idx] = e.u < e.v ? e.gain : conj(e.gain);
        }
        return g;
    }

    /// Every edge of `graph` carries `gain` in its canonical orientation.
    static GainGraph uniform(const UnderlyingGraph& graph, const Dual<T>& gain) {
        GainGraph g;
        g.graph_ = graph;
        g.gains_.assign(graph.size(), gain);
        return g;
    }

    const UnderlyingGraph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    std::size_t size() const { return graph_.size(); }

    /// Gain of the oriented edge i -> j. Throws NotAWalk when not adjacent.
    Dual<T> gain(int i, int j) const {
        auto idx = graph_.edge_index(i, j);
        if (!idx) throw NotAWalk("vertices " + std::to_string(i) + " and " + std::to_string(j) + " are not adjacent");
        const Dual<T>& g = gains_[*idx];
        return i < j ? g : conj(g);
    }

    /// Canonical gains aligned with graph().edges().
    const std::vector<Dual<T>>& canonical_gains() const { return gains_; }

    std::vector<GainEdge<T>> edges() const {
        std::vector<GainEdge<T>> out;
        out.reserve(gains_.size());
        for (std::size_t k = 0; k < gains_.size(); ++k) {
            const Edge& e = graph_.edges()[k];
            out.push_back({e.u, e.v, gains_[k]});
        }
        return out;
    }

    friend bool operator==(const GainGraph& a, const GainGraph& b) {
        return a.graph_ == b.graph_ && a.gains_ == b.gains_;
    }

private:
    UnderlyingGraph graph_;
    std::vector<Dual<T>> gains_;
};

/// Ordered product phi(e_12) phi(e_23) ... along a vertex sequence.
template <BaseRing T>
Dual<T> gain_of_walk(const GainGraph<T>& g, const std::vector<int>& walk) {
    Dual<T> acc{ring_traits<T>::from_real(1.0)};
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) acc = acc * g.gain(walk[k], walk[k + 1]);
    return acc;
}

/// phi^zeta(e_ij) = zeta(v_i)^{-1} phi(e_ij) zeta(v_j).
template <BaseRing T>
GainGraph<T> switching(const GainGraph<T>& g, const std::vector<Dual<T>>& zeta, double tol = kGainTol) {
    if (static_cast<int>(zeta.size()) != g.order()) throw BadParameter("switching function needs one value per vertex");
    for (const auto& z : zeta)
        if (!is_unit(z, tol)) throw NotUnit("switching value is not a unit");
    std::vector<GainEdge<T>> edges = g.edges();
    for (auto& e : edges) {
        e.gain = inverse(zeta[static_cast<std::size_t>(e.u)]) * e.gain * zeta[static_cast<std::size_t>(e.v)];
    }
    return GainGraph<T>::build(g.order(), edges, std::max(tol, 1e-9));
}

/// -Phi: every gain negated.
template <BaseRing T>
GainGraph<T> negate(const GainGraph<T>& g) {
    std::vector<GainEdge<T>> edges = g.edges();
    for (auto& e : edges) e.gain = -e.gain;
    return GainGraph<T>::build(g.order(), edges, 1.0);
}

/// Standard parts of the gains only.
template <BaseRing T>
GainGraph<T> standard_part(const GainGraph<T>& g) {
    auto edges = g.edges();
    for (auto& e : edges) e.gain.d = T{};
    return GainGraph<T>::build(g.order(), edges, 1.0);
}

/// Phi[S]: vertices of S (relabelled 0..|S|-1 in increasing order) and the
/// edges among them, gains inherited.
template <BaseRing T>
GainGraph<T> induced_subgraph(const GainGraph<T>& g, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const int v = subset[k];
        if (v < 0 || v >= g.order()) throw GraphError("subset vertex " + std::to_string(v) + " out of range");
        relabel[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    std::vector<GainEdge<T>> edges;
    for (const auto& e : g.edges()) {
        const int a = relabel[static_cast<std::size_t>(e.u)];
        const int b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b, e.gain});
    }
    return GainGraph<T>::build(static_cast<int>(subset.size()), edges, 1.0);
}

/// Outcome of the balance test.
template <BaseRing T>
struct PotentialCertificate {
    bool balanced = false;
    /// theta with phi(e_ij) = theta(v_i)^{-1} theta(v_j); each component root
    /// has theta = 1. Empty when unbalanced.
    std::vector<Dual<T>> theta;
    /// A cycle v_0 v_1 ... v_k (closing edge v_k v_0 implied) whose gain is not
    /// neutral. Empty when balanced.
    std::vector<int> witness_cycle;
    /// Largest componentwise |phi(e_ij) - theta_i^{-1} theta_j| over all edges.
    double max_mismatch = 0.0;
};

/// Builds a potential along a BFS spanning forest and checks every other edge
/// against it. A failing edge closes the fundamental cycle returned as witness.
template <BaseRing T>
PotentialCertificate<T> balance_certificate(const GainGraph<T>& g, double tol = kGainTol) {
    const int n = g.order();
    const auto& graph = g.graph();
    std::vector<Dual<T>> theta(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        parent[static_cast<std::size_t>(root)] = -1;
        theta[static_cast<std::size_t>(root)] = Dual<T>{ring_traits<T>::from_real(1.0)};
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : graph.neighbors(x)) {
                if (parent[static_cast<std::size_t>(y)] != -2) continue;
                parent[static_cast<std::size_t>(y)] = x;
                depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                theta[static_cast<std::size_t>(y)] = theta[static_cast<std::size_t>(x)] * g.gain(x, y);
                q.push(y);
            }
        }
    }

    PotentialCertificate<T> cert;
    cert.balanced = true;
    for (const auto& e : g.edges()) {
        const Dual<T> expected = conj(theta[static_cast<std::size_t>(e.u)]) * theta[static_cast<std::size_t>(e.v)];
        const double mismatch = max_abs_diff(e.gain, expected);
        cert.max_mismatch = std::max(cert.max_mismatch, mismatch);
        if (mismatch > tol && cert.balanced) {
            cert.balanced = false;
            // Fundamental cycle: u up to the common ancestor, then down to v.
            std::vector<int> up{e.u};
            std::vector<int> down{e.v};
            int a = e.u;
            int b = e.v;
            while (a != b) {
                if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                    a = parent[static_cast<std::size_t>(a)];
                    up.push_back(a);
                } else {
                    b = parent[static_cast<std::size_t>(b)];
                    down.push_back(b);
                }
            }
            down.pop_back();  // common ancestor already in `up`
            cert.witness_cycle = up;
            cert.witness_cycle.insert(cert.witness_cycle.end(), down.rbegin(), down.rend());
        }
    }
    if (cert.balanced) cert.theta = std::move(theta);
    return cert;
}

/// Antibalanced iff -Phi is balanced.
template <BaseRing T>
bool is_antibalanced(const GainGraph<T>& g, double tol = kGainTol) {
    return balance_certificate(negate(g), tol).balanced;
}

}  // namespace dugg
