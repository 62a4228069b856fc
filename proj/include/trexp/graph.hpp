#pragma once

#include <span>
#include <vector>

#include "trexp/types.hpp"

namespace trexp {

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. The sorted edge list and the per-vertex
/// adjacency bitsets always describe the same edge set.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws InputError on loops, duplicates, or endpoints >= n.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from adjacency masks; assumes symmetric, loop-free input.
    static Graph from_adjacency(std::vector<Mask> adjacency);

    int n() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    Mask neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<Mask>& adjacency() const { return adj_; }
    int degree(Vertex v) const { return popcount(neighbors(v)); }
    bool has_edge(Vertex u, Vertex v) const { return (neighbors(u) >> v) & 1U; }
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
    Mask vertex_mask() const { return low_mask(n_); }
    /// Vertices with at least one incident edge.
    Mask non_isolated() const;
    int max_degree() const;

    /// Index of an edge in edges(), or -1.
    int edge_index(const Edge& e) const;

    /// New graph with the given edge removed (vertices kept).
    Graph without_edge(const Edge& e) const;
    /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(Mask keep) const;
    /// Subgraph with vertices outside `keep` isolated (labels unchanged).
    Graph restricted(Mask keep) const;
    /// Relabel: new id of vertex v is perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    /// Drops isolated vertices and relabels the rest in increasing order.
    Graph without_isolated() const;

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const;
    /// Connected components as vertex masks, in order of smallest vertex.
    std::vector<Mask> components() const;
    /// Two-colouring (side 0/1 per vertex) if bipartite.
    bool bipartition(std::vector<int>& side) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Mask> adj_;
};

// Named small graphs used throughout (vertices 0..).
Graph path_graph(int length);       ///< P_k: k edges, k+1 vertices
Graph cycle_graph(int length);      ///< C_k, k >= 3
Graph complete_graph(int n);
Graph star_graph(int leaves);       ///< K_{1,leaves}, centre 0
Graph empty_graph(int n);

}  // namespace trexp
