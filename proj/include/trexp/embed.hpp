#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trexp/budget.hpp"
#include "trexp/builders.hpp"
#include "trexp/graph.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

enum class HostKind { TripleSystem, Graph };

/// An embedding of F³ (or F^△ into a graph host).
struct Embedding {
    Graph pattern;
    std::vector<Vertex> core_map;       ///< indexed by pattern vertex
    std::vector<Vertex> expansion_map;  ///< indexed by pattern edge (sorted order)
    HostKind host_kind = HostKind::TripleSystem;

    bool operator==(const Embedding&) const = default;
};

/// Injectivity, disjointness, and every image triple present in H.
bool validate_embedding(const TripleSystem& h, const Embedding& e);
/// Same for a graph host: every image triple spans a triangle of G.
bool validate_embedding(const Graph& g, const Embedding& e);

struct SearchOptions {
    /// Return the least certificate: core images compared in search order
    /// (see search_order), then expansion vertices in edge order.
    bool deterministic = true;
    int workers = 1;
    Budget budget{};
    /// Decision-only symmetry breaking on pattern automorphisms. The returned
    /// certificate is still valid but need not be the least one.
    bool pattern_symmetry = false;
};

/// Order in which pattern vertices are assigned: non-isolated vertices,
/// most-connected to earlier ones first, then by degree, then by id;
/// isolated vertices last.
std::vector<Vertex> search_order(const Graph& f);

/// Exact decision of F³ ⊆ H with a certificate. Throws InputError if F has
/// no edges and ResourceError when the budget runs out.
std::optional<Embedding> find_expansion(const TripleSystem& h, const Graph& f, const SearchOptions& opt = {});

/// Reference implementation of find_expansion without twin reduction or
/// threading; used to cross-check the optimized search.
std::optional<Embedding> find_expansion_reference(const TripleSystem& h, const Graph& f, Budget budget = {});

/// Decides F^△ ⊆ G through K_G; the certificate refers to G.
std::optional<Embedding> find_blowup(const Graph& g, const Graph& f, const SearchOptions& opt = {});

/// Extends a fixed core map by distinct expansion vertices (exact matching).
/// pre_assigned[i] >= 0 fixes the expansion vertex of pattern edge i.
/// Throws InputError on inconsistent input.
std::optional<Embedding> complete_partial_expansion(const TripleSystem& h, const Graph& f,
                                                    const std::vector<Vertex>& core_map,
                                                    const std::vector<Vertex>& pre_assigned);

/// Same, with the copy of F given directly as host pairs. Pattern vertices
/// are the pair endpoints in increasing order; pre_assigned is keyed by pair.
std::optional<Embedding> complete_partial_expansion(const TripleSystem& h, const std::vector<Edge>& shadow_copy,
                                                    const std::map<Edge, Vertex>& pre_assigned);

/// Whether the partial assignment meets the sufficient condition that every
/// unassigned pair has codegree at least 3|F|.
bool partial_expansion_condition(const TripleSystem& h, const std::vector<Edge>& shadow_copy,
                                 const std::map<Edge, Vertex>& pre_assigned);

/// Builds T³ in H from two t-sets with dense common links (t = σ(T)-1).
/// G1, G2 are graphs on host ids; V_i are their non-isolated vertices.
/// Throws HypothesisError naming the violated hypothesis.
std::optional<Embedding> embed_tree_two_sets(const TripleSystem& h, const Graph& t,
                                             const std::vector<Vertex>& s1, const std::vector<Vertex>& s2,
                                             const Graph& g1, const Graph& g2);

struct CycleVariation {
    std::map<int, Embedding> embeddings;  ///< keyed by length ℓ
    std::vector<std::string> warnings;
};

/// From w_0..w_{t-1} (cycle) or w_0..w_t (path) and v_0..v_{t-1}, where
/// v_i sits on the pair w_i w_{i+1}, builds C_ℓ³ (or P_ℓ³) for all ℓ in [t,2t].
/// Throws HypothesisError if the witness is invalid.
CycleVariation vary_cycle_length(const TripleSystem& h, const std::vector<Vertex>& w,
                                 const std::vector<Vertex>& v, bool cycle = true);

struct RainbowCertificate {
    Embedding embedding;
    std::vector<int> colors;  ///< colour of each pattern edge's triple
};

/// Exact search for an F³ copy in K_n³ whose |F| triples get distinct colours.
std::optional<RainbowCertificate> find_rainbow_expansion(const Coloring& chi, const Graph& f,
                                                         const SearchOptions& opt = {});

}  // namespace trexp
