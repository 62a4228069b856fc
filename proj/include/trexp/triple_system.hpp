#pragma once

#include <span>
#include <vector>

#include "trexp/graph.hpp"
#include "trexp/types.hpp"

namespace trexp {

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// The codegree index (pair -> bitset of third vertices) is built once at
/// construction; values are immutable and safe to share across threads.
class TripleSystem {
public:
    TripleSystem() = default;
    explicit TripleSystem(int n);
    /// Throws InputError on repeated vertices, duplicates, or ids >= n.
    TripleSystem(int n, std::span<const Triple> edges);
    TripleSystem(int n, std::initializer_list<Triple> edges)
        : TripleSystem(n, std::span<const Triple>(edges.begin(), edges.size())) {}

    int n() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Triple>& edges() const { return edges_; }

    /// N_H(uv): bitset of w with uvw an edge. u != v required.
    Mask neighborhood(Vertex u, Vertex v) const {
        return nbr_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(v)];
    }
    Mask neighborhood(const Edge& e) const { return neighborhood(e.u, e.v); }
    int codegree(Vertex u, Vertex v) const { return popcount(neighborhood(u, v)); }
    int codegree(const Edge& e) const { return codegree(e.u, e.v); }
    bool contains(const Triple& t) const { return (neighborhood(t[0], t[1]) >> t[2]) & 1U; }
    /// Vertices sharing at least one edge with v (shadow neighbourhood).
    Mask shadow_neighbors(Vertex v) const { return shadow_adj_[static_cast<std::size_t>(v)]; }
    /// d_H(v): number of edges through v.
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    /// Maximum codegree over all pairs (0 on the empty system).
    int max_codegree() const;

    TripleSystem without(std::span<const Triple> removed) const;
    /// Keeps only edges for which keep(e) is true.
    template <class Pred>
    TripleSystem filtered(Pred keep) const {
        std::vector<Triple> es;
        for (const Triple& t : edges_)
            if (keep(t)) es.push_back(t);
        return TripleSystem(n_, es);
    }

    bool operator==(const TripleSystem& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<Mask> nbr_;
    std::vector<Mask> shadow_adj_;
    std::vector<int> degree_;
};

/// All C(n,3) triples of [n] in lexicographic order.
std::vector<Triple> all_triples(int n);
/// Complete 3-graph on n vertices.
TripleSystem complete_triple_system(int n);

}  // namespace trexp
