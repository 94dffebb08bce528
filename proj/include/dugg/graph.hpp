#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace dugg {

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept in
/// lexicographic order of their canonical (u < v) form.
class UnderlyingGraph {
public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int n);
    /// Throws SelfLoop, DuplicateEdge, or GraphError for out-of-range vertices.
    UnderlyingGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }
    /// Position of {u, v} in edges(), in either orientation.
    std::optional<std::size_t> edge_index(int u, int v) const;

    /// Component label per vertex, labels numbered in order of first vertex.
    std::vector<int> components() const;
    bool is_connected() const;

    Eigen::MatrixXd adjacency() const;
    Eigen::MatrixXd laplacian() const;
    /// Q(G) = D(G) + A(G).
    Eigen::MatrixXd signless_laplacian() const;

    friend bool operator==(const UnderlyingGraph& a, const UnderlyingGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace dugg
