#include "dugg/char_poly.hpp"

#include <bit>

namespace dugg {

namespace {

std::uint32_t mask_of(const std::vector<int>& vs) {
    std::uint32_t m = 0;
    for (int v : vs) m |= 1u << v;
    return m;
}

void check_cap(const UnderlyingGraph& g) {
    if (g.order() > kBasicSubgraphCap) throw SizeCapExceeded(g.order(), kBasicSubgraphCap);
}

void extend_cycles(const UnderlyingGraph& g, std::vector<int>& path, std::vector<char>& on_path,
                   std::vector<std::vector<int>>& out) {
    const int start = path.front();
    const int tail = path.back();
    for (int y : g.neighbors(tail)) {
        if (y == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (y <= start || on_path[static_cast<std::size_t>(y)]) continue;
        on_path[static_cast<std::size_t>(y)] = 1;
        path.push_back(y);
        extend_cycles(g, path, on_path, out);
        path.pop_back();
        on_path[static_cast<std::size_t>(y)] = 0;
    }
}

struct Enumerator {
    const UnderlyingGraph& g;
    int target;
    const std::function<void(const BasicSubgraph&)>& visit;
    std::vector<std::vector<std::vector<int>>> by_leader;  // components keyed by smallest vertex
    BasicSubgraph current;

    void run(int v, int covered) {
        const int n = g.order();
        if (target >= 0 && covered > target) return;
        if (target >= 0 && covered + (n - v) < target) return;
        if (v == n) {
            if (target < 0 || covered == target) visit(current);
            return;
        }
        if (current.covered & (1u << v)) {
            run(v + 1, covered);
            return;
        }
        run(v + 1, covered);
        for (const auto& comp : by_leader[static_cast<std::size_t>(v)]) {
            const std::uint32_t m = mask_of(comp);
            if (m & current.covered) continue;
            current.components.push_back(comp);
            current.covered |= m;
            run(v + 1, covered + static_cast<int>(comp.size()));
            current.covered &= ~m;
            current.components.pop_back();
        }
    }
};

}  // namespace

int BasicSubgraph::c() const {
    int k = 0;
    for (const auto& comp : components) k += comp.size() >= 3 ? 1 : 0;
    return k;
}

int BasicSubgraph::vertex_count() const { return std::popcount(covered); }

std::vector<std::vector<int>> enumerate_cycles(const UnderlyingGraph& g) {
    check_cap(g);
    std::vector<std::vector<int>> out;
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> path{s};
        on_path[static_cast<std::size_t>(s)] = 1;
        extend_cycles(g, path, on_path, out);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return out;
}

void for_each_basic_subgraph(const UnderlyingGraph& g, int i,
                             const std::function<void(const BasicSubgraph&)>& visit) {
    check_cap(g);
    if (i > g.order()) throw BadParameter("subgraph size exceeds the vertex count");
    Enumerator e{g, i, visit, std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(g.order())), {}};
    for (const Edge& edge : g.edges()) e.by_leader[static_cast<std::size_t>(edge.u)].push_back({edge.u, edge.v});
    for (auto& cyc : enumerate_cycles(g)) e.by_leader[static_cast<std::size_t>(cyc.front())].push_back(std::move(cyc));
    e.run(0, 0);
}

std::vector<BasicSubgraph> enumerate_basic_subgraphs(const UnderlyingGraph& g, int i) {
    if (i < 0) throw BadParameter("subgraph size must be non-negative");
    std::vector<BasicSubgraph> out;
    for_each_basic_subgraph(g, i, [&](const BasicSubgraph& b) { out.push_back(b); });
    return out;
}

}  // namespace dugg
