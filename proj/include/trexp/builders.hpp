#pragma once

#include <cstdint>
#include <vector>

#include "trexp/graph.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

/// F³: vertex n(F)+i is added to the i-th edge of F (edges in sorted order).
/// Throws InputError if F has no edges.
TripleSystem expansion(const Graph& f);

/// Id of the fresh vertex that expansion(f) adds to edge index i.
inline Vertex expansion_vertex(const Graph& f, int edge_index) { return f.n() + edge_index; }

/// F^△: each edge uv gets a fresh w = n(F)+i with uw, vw added.
Graph triangle_blowup(const Graph& f);

/// K_G: triples spanning a triangle of G.
TripleSystem triangle_system(const Graph& g);

/// S(n,t): all triples meeting {0..t-1}.
TripleSystem s_construction(int n, int t);
std::int64_t s_size(int n, int t);

/// G1 ⋈ G2: disjoint union (G2 shifted by n(G1)) plus all cross pairs.
Graph join(const Graph& g1, const Graph& g2);

/// T(m): complete bipartite, parts {0..⌊m/2⌋-1} and the rest. With `plus`,
/// adds the edge between ids 0 and 1 of the smaller part.
Graph balanced_bipartite(int m, bool plus = false);

/// K_t ⋈ T(n-t), or K_t ⋈ T⁺(n-t).
Graph s_graph(int n, int t, bool plus = false);

/// S_bi(n,t) = K_{K_t ⋈ T(n-t)}; S⁺_bi uses T⁺.
TripleSystem sbi_construction(int n, int t, bool plus = false);
std::int64_t sbi_size(int n, int t, bool plus = false);

/// Lexicographic rank of a triple among all C(n,3) triples of [n].
std::int64_t triple_index(int n, const Triple& t);

/// Colouring of all triples of [n]; colors[i] is the colour of the i-th
/// triple in lexicographic order.
struct Coloring {
    int n = 0;
    std::vector<int> colors;
    int color_count = 0;

    int color_of(const Triple& t) const { return colors[static_cast<std::size_t>(triple_index(n, t))]; }
};

/// Builds a Coloring from a total colour table; recomputes color_count and
/// checks that colour ids are 0..count-1. Throws InputError otherwise.
Coloring make_coloring(int n, std::vector<int> colors);

/// Distinct colours on base edges (in edge order), one surplus colour for
/// every other triple. Throws InputError on an empty base.
Coloring lower_bound_coloring(const TripleSystem& base);

}  // namespace trexp
