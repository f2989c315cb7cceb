#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tss {

using Edge = std::pair<int, int>; // always stored with first < second

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
/// construction; construction rejects loops, duplicate edges and
/// out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Canonical edge list: each pair (u,v) with u<v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

bool check_regular(const Graph& g, int r);

// Small constructions used all over the test and verification code.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph octahedron_graph();

} // namespace tss
