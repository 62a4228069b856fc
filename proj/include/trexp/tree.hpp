#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trexp/graph.hpp"

namespace trexp {

/// (I, R): I independent, R = edges missed by I. Optimal when |I|+|R| = σ.
struct CrosscutPair {
    std::vector<Vertex> independent;
    std::vector<Edge> remainder;

    int cost() const { return static_cast<int>(independent.size() + remainder.size()); }
    bool operator==(const CrosscutPair&) const = default;
};

/// The pair induced by an independent set I.
CrosscutPair crosscut_pair_from(const Graph& g, const std::vector<Vertex>& independent);

/// σ(G) = min over independent I of |I| + |G - I|, for any graph.
/// Forests use a linear DP; other graphs an exact branch and bound (n <= 40).
int crosscut_value(const Graph& g);

struct CrosscutResult {
    int sigma = 0;
    /// Optimal pair with |I| maximum, then I lexicographically smallest.
    CrosscutPair best;
};

/// σ of a tree, or of a connected unicyclic graph (used for cycles).
/// Throws InputError for any other input.
CrosscutResult crosscut_number(const Graph& g);

/// All optimal crosscut pairs in lexicographic order of I, at most `cap`.
/// `overflow` is set when more exist.
std::vector<CrosscutPair> crosscut_pairs(const Graph& g, std::size_t cap, bool* overflow = nullptr);

/// τ(G): minimum vertex cover, exact.
int covering_number(const Graph& g);

/// τ_ind(G): minimum |S| meeting every edge exactly once, or nullopt if no
/// such S exists (some component is not bipartite).
std::optional<int> independent_covering_number(const Graph& g);

/// A minimum S meeting every edge exactly once; lexicographically smallest
/// among the per-component choices. nullopt if none exists.
std::optional<std::vector<Vertex>> minimum_independent_cover(const Graph& g);

/// Edges e of tree T with σ(T \ e) <= σ(T) - 1 (T \ e keeps both endpoints).
std::vector<Edge> critical_edges(const Graph& t);

struct TreeProfile {
    Graph tree;
    int sigma = 0;
    int tau = 0;
    std::optional<int> tau_ind;
    CrosscutPair best_pair;
    std::vector<CrosscutPair> crosscut_pairs;
    bool crosscut_pairs_overflow = false;
    std::vector<Edge> critical_edges;
    bool strongly_edge_critical = false;
    bool sigma_equals_tau_ind = false;
};

inline constexpr std::size_t kDefaultPairCap = 10000;

TreeProfile analyze_tree(const Graph& t, std::size_t pair_cap = kDefaultPairCap);

enum class WitnessKind { LeafNeighborVertex, PendantEdge };

struct CrosscutWitness {
    CrosscutPair pair;
    WitnessKind kind = WitnessKind::LeafNeighborVertex;
    Vertex vertex = -1;  ///< LeafNeighborVertex: v in I, all but <= 1 neighbours leaves
    Edge edge;           ///< PendantEdge: pendant edge in R
};

/// Structural witness for a crosscut pair of a tree: a vertex of I whose
/// neighbours are all leaves but at most one, else a pendant edge of R.
/// Throws InputError if `pair` is not a crosscut pair of T.
CrosscutWitness decomposition_witness(const Graph& t, const CrosscutPair& pair);

struct PendantCriticalEdge {
    Edge edge;                 ///< pendant and critical
    Vertex leaf = -1;          ///< leaf endpoint, inside `cover`
    std::vector<Vertex> cover; ///< a minimum independent vertex cover
};

/// For a tree with σ = τ_ind and a critical edge: a pendant critical edge
/// whose leaf lies in a minimum independent cover. nullopt when the
/// hypotheses fail. Throws InputError on non-trees.
std::optional<PendantCriticalEdge> pendant_critical_edge(const Graph& t);

/// Same, using the given minimum independent cover.
std::optional<PendantCriticalEdge> pendant_critical_edge(const Graph& t,
                                                         const std::vector<Vertex>& cover);

/// One canonical representative per isomorphism class of trees on n vertices,
/// 1 <= n <= 10, sorted by canonical key.
std::vector<Graph> enumerate_trees(int n);

/// Leaves (degree-1 vertices) of g.
Mask leaves(const Graph& g);

}  // namespace trexp
