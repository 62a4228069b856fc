#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trexp/budget.hpp"
#include "trexp/builders.hpp"
#include "trexp/embed.hpp"
#include "trexp/graph.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

struct ExtremalOptions {
    Budget budget{};
    int workers = 1;
    std::size_t witness_cap = 8;
    /// false: only the lower-bound construction is evaluated.
    bool exhaustive = true;
};

struct TuranResult {
    std::string mode;  ///< "hypergraph" or "triangles"
    int n = 0;
    Graph pattern;
    std::optional<std::int64_t> value;  ///< exact optimum (exhaustive mode)
    /// One representative per isomorphism class attaining the optimum, capped.
    std::vector<TripleSystem> hypergraph_witnesses;
    std::vector<Graph> graph_witnesses;
    std::optional<std::int64_t> construction_value;
    std::string construction;              ///< e.g. "S(7,1)"
    std::optional<bool> construction_free; ///< construction verified pattern-free
    std::optional<bool> matches_construction;
    std::int64_t nodes = 0;
};

/// ex(n, F³) by orderly branch and bound over 3-graphs on n <= 8 vertices.
/// The lower-bound construction is S(n, σ(F)-1) when F is a tree.
/// Throws ResourceError when the budget runs out.
TuranResult exact_turan_hypergraph(int n, const Graph& f, const ExtremalOptions& opt = {});

/// ex(n, K₃, F^△) by orderly branch and bound over graphs on n <= 8 vertices.
/// The construction is S_bi(n, σ(F)-1), or S⁺_bi for even paths and cycles.
TuranResult exact_generalized_turan(int n, const Graph& f, const ExtremalOptions& opt = {});

struct ClosenessCondition {
    std::string name;
    double value = 0;
    double threshold = 0;
    bool holds = false;
};

struct ClosenessReport {
    std::vector<Vertex> l;
    double delta = 0;
    std::vector<ClosenessCondition> conditions;
    /// false when the bipartization distance is a heuristic upper bound.
    bool bipartization_exact = true;
    bool accepted = false;
};

/// First t-set L (top-degree candidates first, then all t-sets, each in
/// decreasing degree-sum order) with |H-L| <= δn² and d(v) >= (1/2-δ)n² on L.
std::optional<ClosenessReport> hypergraph_closeness(const TripleSystem& h, int t, double delta,
                                                    Budget budget = {});

/// Same search for the four graph conditions.
std::optional<ClosenessReport> graph_closeness(const Graph& g, int t, double delta, int workers = 1,
                                               Budget budget = {});

/// Evaluates the hypergraph conditions for a given L.
ClosenessReport hypergraph_closeness_at(const TripleSystem& h, const std::vector<Vertex>& l, double delta);
/// Evaluates the graph conditions for a given L.
ClosenessReport graph_closeness_at(const Graph& g, const std::vector<Vertex>& l, double delta, int workers = 1);

struct BipartizationResult {
    int value = 0;
    bool exact = true;  ///< false: local-search upper bound
};

inline constexpr int kExactMaxCutLimit = 24;

/// |E| - maxcut(G); exact up to 24 vertices, local-search bound above.
BipartizationResult bipartization_distance(const Graph& g, int workers = 1);

namespace serial {
/// Exact max cut by Gray-code enumeration (last vertex fixed to one side).
int max_cut(const Graph& g);
}
namespace parallel {
int max_cut(const Graph& g, int workers);
}

/// Local search from a BFS two-colouring; a lower bound on the max cut.
int max_cut_local_search(const Graph& g);

struct AntiRamseyReport {
    int n = 0;
    Graph tree;
    Graph augmentation;
    int sigma = 0;
    int t_default = 0;  ///< σ(T)-1
    int t_used = 0;     ///< apex size of the base actually certified
    std::vector<std::pair<Edge, bool>> deletion_free;  ///< S(n,t_default) is (F\e)³-free
    bool default_base_free = false;
    std::int64_t base_size = 0;
    std::int64_t lower = 0;
    std::int64_t upper_formula = 0;
    Coloring coloring;
    std::optional<bool> rainbow_free;  ///< checked for n <= 8
    std::optional<RainbowCertificate> rainbow_copy;
};

/// Checks that F is T plus one edge, certifies a lower bound |base|+2 for
/// ar(n, F³) and reports the upper formula C(n,3)-C(n-σ(T)+1,3)+2.
/// Throws InputError if F is not an augmentation of T.
AntiRamseyReport anti_ramsey_bounds(int n, const Graph& tree, const Graph& f, const SearchOptions& opt = {});

/// Whether F arises from tree T by adding one edge (endpoints may be new).
bool is_augmentation(const Graph& tree, const Graph& f);

/// All augmentations of T on at most |V(T)|+2 vertices, one per isomorphism
/// class, in canonical-key order.
std::vector<Graph> augmentation_shapes(const Graph& tree);

enum class CheckStatus { Pass, Fail, Info };

struct SuiteCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int max_n = 0;
    std::vector<SuiteCheck> checks;
    int count(CheckStatus s) const;
    bool passed() const { return count(CheckStatus::Fail) == 0; }
};

/// suite in {trees, odd-paths, even-paths, cycles, facts}. Throws InputError
/// for an unknown suite and ResourceError when a budget runs out.
SuiteReport verify_theorem_suite(const std::string& suite, int max_n, const ExtremalOptions& opt = {});

/// Whether g is a path (connected, max degree <= 2, acyclic) or a cycle.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

}  // namespace trexp
