#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trexp/graph.hpp"
#include "trexp/types.hpp"

namespace trexp {

/// Canonical labelling of a graph by individualisation-refinement.
struct CanonicalForm {
    std::vector<Vertex> labeling;  ///< labeling[v] = canonical id of v
    Graph graph;                   ///< relabelled graph
    std::string key;               ///< "n:u-v,u-v,..." of the relabelled graph
};

CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// All automorphisms are not enumerated; this returns the orbit of v under
/// Aut(G) by testing, for each w, whether some automorphism maps v to w.
Mask automorphism_orbit(const Graph& g, Vertex v);

/// 64-bit FNV-1a of a string; stable across runs and platforms.
std::uint64_t stable_hash(const std::string& s);

/// Orderly generation of r-uniform hypergraphs (r in {2,3}) on n vertices.
///
/// A hypergraph is a code: bit p set iff the p-th r-subset (colex order) is an
/// edge. The canonical member of an isomorphism class is the one whose code,
/// read with position 0 most significant, is largest. Removing the last edge of
/// a canonical code yields a canonical code, so extending canonical codes by
/// positions after their last edge and keeping canonical results visits every
/// class exactly once.
class OrderlyGenerator {
public:
    OrderlyGenerator(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int positions() const { return static_cast<int>(subsets_.size()); }
    /// Vertex mask of the r-subset at a position.
    Mask subset(int position) const { return subsets_[static_cast<std::size_t>(position)]; }
    int rank(Mask subset) const;

    bool is_canonical(std::uint64_t code) const;

    /// Depth-first orderly generation from the empty code. The visitor gets the
    /// canonical code and its last position (-1 for empty) and returns whether
    /// to extend it.
    void enumerate(const std::function<bool(std::uint64_t code, int last)>& visit) const;

private:
    bool beats_identity(std::uint64_t code, std::vector<Vertex>& order, Mask used, int depth) const;

    int n_;
    int r_;
    std::vector<Mask> subsets_;
};

/// Expands a code from OrderlyGenerator(n,2) into a Graph.
Graph graph_from_code(const OrderlyGenerator& gen, std::uint64_t code);

}  // namespace trexp
