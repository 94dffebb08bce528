#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dugg/gain_graph.hpp"

namespace dugg {

/// Largest order accepted by the subgraph enumerations.
inline constexpr int kBasicSubgraphCap = 12;

/// Vertex-disjoint union of edges and cycles. Each component is a vertex
/// sequence; a 2-vertex component is an edge, longer ones are cycles written
/// from their smallest vertex.
struct BasicSubgraph {
    std::vector<std::vector<int>> components;
    std::uint32_t covered = 0;  ///< bit v set when vertex v is covered

    int p() const { return static_cast<int>(components.size()); }
    int c() const;
    int vertex_count() const;

    friend bool operator==(const BasicSubgraph&, const BasicSubgraph&) = default;
};

/// Every cycle of g once, starting at its smallest vertex, oriented so the
/// second vertex is smaller than the last. Throws SizeCapExceeded.
std::vector<std::vector<int>> enumerate_cycles(const UnderlyingGraph& g);

/// Calls `visit` for each basic subgraph covering exactly i vertices, or every
/// basic subgraph (including the empty one) when i < 0. Deterministic order.
void for_each_basic_subgraph(const UnderlyingGraph& g, int i,
                             const std::function<void(const BasicSubgraph&)>& visit);

std::vector<BasicSubgraph> enumerate_basic_subgraphs(const UnderlyingGraph& g, int i);

struct CycleRealGain {
    std::vector<int> cycle;
    DualNumber value;
};

/// Re of the walk gain around `cycle` (closing edge implied; a repeated first
/// vertex at the end is accepted). Throws NotACycle.
template <BaseRing T>
CycleRealGain real_gain_of_cycle(const GainGraph<T>& g, std::vector<int> cycle) {
    if (cycle.size() > 3 && cycle.front() == cycle.back()) cycle.pop_back();
    if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int v = cycle[k];
        if (v < 0 || v >= g.order()) throw NotACycle("vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)]) throw NotACycle("vertex " + std::to_string(v) + " repeats");
        seen[static_cast<std::size_t>(v)] = 1;
        if (!g.graph().adjacent(v, cycle[(k + 1) % cycle.size()]))
            throw NotACycle("missing edge {" + std::to_string(v) + "," + std::to_string(cycle[(k + 1) % cycle.size()]) + "}");
    }
    std::vector<int> walk = cycle;
    walk.push_back(cycle.front());
    return {std::move(cycle), real_part(gain_of_walk(g, walk))};
}

namespace detail {

template <BaseRing T>
DualNumber signed_weight(const GainGraph<T>& g, const BasicSubgraph& b) {
    DualNumber w{(b.p() % 2 == 0) ? 1.0 : -1.0};
    for (const auto& comp : b.components) {
        if (comp.size() < 3) continue;
        std::vector<int> walk = comp;
        walk.push_back(comp.front());
        w = w * (2.0 * real_part(gain_of_walk(g, walk)));
    }
    return w;
}

}  // namespace detail

/// c_1..c_n of det(xI - A(Phi)) = x^n + c_1 x^{n-1} + ... + c_n, each as
/// the signed sum over basic subgraphs on i vertices.
template <BaseRing T>
std::vector<DualNumber> coefficients(const GainGraph<T>& g) {
    std::vector<DualNumber> c(static_cast<std::size_t>(g.order()) + 1);
    for_each_basic_subgraph(g.graph(), -1, [&](const BasicSubgraph& b) {
        c[static_cast<std::size_t>(b.vertex_count())] += detail::signed_weight(g, b);
    });
    c.erase(c.begin());
    return c;
}

/// Moore determinant of A(Phi) from its spanning basic subgraphs.
template <BaseRing T>
DualNumber mdet_via_subgraphs(const GainGraph<T>& g) {
    DualNumber total{};
    const double sign = g.order() % 2 == 0 ? 1.0 : -1.0;
    for_each_basic_subgraph(g.graph(), g.order(), [&](const BasicSubgraph& b) {
        total += sign * detail::signed_weight(g, b);
    });
    return total;
}

}  // namespace dugg
