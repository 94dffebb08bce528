#include "dugg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dugg/errors.hpp"

namespace dugg {

UnderlyingGraph::UnderlyingGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
}

UnderlyingGraph::UnderlyingGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : UnderlyingGraph(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw SelfLoop(u);
        edges_.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw DuplicateEdge(dup->u, dup->v);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void UnderlyingGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
    }
}

int UnderlyingGraph::max_degree() const {
    int out = 0;
    for (const auto& nb : adj_) out = std::max(out, static_cast<int>(nb.size()));
    return out;
}

std::optional<std::size_t> UnderlyingGraph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> UnderlyingGraph::components() const {
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int root = 0; root < n_; ++root) {
        if (label[static_cast<std::size_t>(root)] >= 0) continue;
        std::queue<int> q;
        q.push(root);
        label[static_cast<std::size_t>(root)] = next;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : neighbors(x)) {
                if (label[static_cast<std::size_t>(y)] < 0) {
                    label[static_cast<std::size_t>(y)] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return label;
}

bool UnderlyingGraph::is_connected() const {
    const auto label = components();
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

Eigen::MatrixXd UnderlyingGraph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const Edge& e : edges_) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    return a;
}

Eigen::MatrixXd UnderlyingGraph::laplacian() const {
    Eigen::MatrixXd l = -adjacency();
    for (int v = 0; v < n_; ++v) l(v, v) = degree(v);
    return l;
}

Eigen::MatrixXd UnderlyingGraph::signless_laplacian() const {
    Eigen::MatrixXd q = adjacency();
    for (int v = 0; v < n_; ++v) q(v, v) = degree(v);
    return q;
}

}  // namespace dugg
