#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trexp/budget.hpp"
#include "trexp/embed.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

struct CleaningStep {
    Edge pair;                   ///< f_{i+1}
    int type = 0;                ///< 1, 2 or 3 at the time of removal
    std::vector<Triple> removed; ///< edges of H_i containing the pair
};

struct CleaningTrace {
    int k = 0;
    int t = 0;
    TripleSystem input;
    TripleSystem h_star;  ///< edges whose largest pair codegree is <= 3k
    TripleSystem h0;      ///< input minus h_star
    std::vector<CleaningStep> steps;
    TripleSystem final_system;
    /// is_superfull(final, t, 3k); empty when 3k <= t (k = 0).
    std::optional<bool> superfull;

    int q() const { return static_cast<int>(steps.size()); }
};

/// Runs the cleaning process: drop sparse edges, then repeatedly remove all
/// edges through a shadow pair of minimum type (1, 2, 3), smallest pair first.
/// Throws InputError if k < t or t < 0.
CleaningTrace cleaning_algorithm(const TripleSystem& h, int k, int t);

/// H_i reconstructed from the trace (0 <= i <= q).
TripleSystem replay(const CleaningTrace& trace, int i);

/// Type (1..3) of a shadow pair of h, or 0 if untyped / not a shadow pair.
int pair_type(const TripleSystem& h, const Edge& e, int k, int t);

/// Repeatedly deletes the edges through the smallest shadow pair of codegree
/// <= d. The result is (d+1)-full.
TripleSystem extract_d_full(const TripleSystem& h, int d);

/// Greedy independent set (minimum degree first) in the graph joining edges
/// that share at least i vertices; the result has i-degree at most 1.
/// Throws InputError on an empty system or i outside {1,2}.
TripleSystem extract_linear_subgraph(const TripleSystem& h, int i);

struct FullnessCheckEntry {
    std::string name;
    Graph pattern;
    std::optional<Embedding> embedding;
};

struct FullnessReport {
    int k = 0;
    std::vector<FullnessCheckEntry> entries;
    bool all_found() const;
};

/// For a nonempty 3k-full H, searches every tree with k edges (k <= 9) and,
/// for k >= 3, the cycle C_k. Throws HypothesisError if H is empty or not
/// 3k-full.
FullnessReport fullness_embedding_check(const TripleSystem& h, int k, const SearchOptions& opt = {});

}  // namespace trexp
