#pragma once

#include <cstdint>
#include <vector>

#include "trexp/graph.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

/// ∂H: all pairs contained in some edge.
Graph shadow(const TripleSystem& h);

/// L_H(v): pairs uw with uvw an edge. Throws InputError if v is out of range.
Graph link(const TripleSystem& h, Vertex v);

struct CodegreeResult {
    int count = 0;
    std::vector<Vertex> witnesses;  ///< N_H(uv), ascending
};

/// d_H(uv) with its witness set. Throws InputError if u == v or out of range.
CodegreeResult codegree(const TripleSystem& h, Vertex u, Vertex v);

struct EdgeCodegreeProfile {
    Triple edge;
    int min_codegree = 0;  ///< δ₂ of the edge
    int max_codegree = 0;  ///< Δ₂ of the edge
};

/// Min/max codegree over the three pairs of e. Throws InputError if e ∉ H.
EdgeCodegreeProfile edge_codegree_profile(const TripleSystem& h, const Triple& e);

/// Every shadow pair has codegree >= d (vacuously true on the empty system).
bool is_d_full(const TripleSystem& h, int d);

/// d-full and every edge has at most one pair of codegree < k. Requires k > d.
bool is_superfull(const TripleSystem& h, int d, int k);

enum class IntersectionKind { SmallSystem, CommonPair, NotTwoIntersecting };

struct TwoIntersectingStructure {
    IntersectionKind kind = IntersectionKind::SmallSystem;
    Edge pair;  ///< valid for CommonPair
};

/// Classifies H against the 2-intersecting structure theorem: either the
/// system is small (<= 4 edges, no common pair), all edges share a pair, or
/// two edges meet in at most one vertex. Throws std::logic_error if H is
/// 2-intersecting with more than 4 edges and no common pair.
TwoIntersectingStructure two_intersecting_structure(const TripleSystem& h);

bool is_two_intersecting(const TripleSystem& h);

enum class MatchingKind { Empty, Triangle, Star, MatchingAtLeast2 };

struct MatchingStructure {
    MatchingKind kind = MatchingKind::Empty;
    Vertex center = -1;  ///< valid for Star
};

/// Classifies graphs of matching number <= 1 as empty, a triangle, or a star.
/// Throws std::logic_error if none applies.
MatchingStructure matching_le1_structure(const Graph& g);

/// N(K₃, G). Dispatches to the OpenMP kernel when workers > 1.
std::int64_t count_triangles(const Graph& g, int workers = 1);

namespace serial {
std::int64_t count_triangles(const Graph& g);
}
namespace parallel {
std::int64_t count_triangles(const Graph& g, int workers);
}

/// Δ_i(H) for i in {1,2}: maximum vertex degree or maximum codegree.
int max_i_degree(const TripleSystem& h, int i);

}  // namespace trexp
