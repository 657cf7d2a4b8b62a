#pragma once

#include <utility>
#include <vector>

namespace planiv {

/// Simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Inserts the edge uv. Duplicates are ignored; loops throw SelfLoopError.
    void add_edge(int u, int v);

    /// Appends an isolated vertex and returns its id.
    int add_vertex();

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Normalizes an edge to (min, max) order.
inline std::pair<int, int> edge_key(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace planiv
