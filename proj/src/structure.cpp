#include "trexp/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trexp {

namespace {

void check_vertex(const TripleSystem& h, Vertex v) {
    if (v < 0 || v >= h.n())
        throw InputError("vertex " + std::to_string(v) + " outside [0," + std::to_string(h.n()) + ")");
}

}  // namespace

Graph shadow(const TripleSystem& h) {
    std::vector<Mask> adj(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) adj[static_cast<std::size_t>(v)] = h.shadow_neighbors(v);
    return Graph::from_adjacency(std::move(adj));
}

Graph link(const TripleSystem& h, Vertex v) {
    check_vertex(h, v);
    std::vector<Edge> es;
    for (const Triple& t : h.edges()) {
        if (!t.contains(v)) continue;
        Vertex a = -1, b = -1;
        for (int i = 0; i < 3; ++i) {
            if (t[i] == v) continue;
            (a < 0 ? a : b) = t[i];
        }
        es.emplace_back(a, b);
    }
    return Graph(h.n(), es);
}

CodegreeResult codegree(const TripleSystem& h, Vertex u, Vertex v) {
    check_vertex(h, u);
    check_vertex(h, v);
    if (u == v) throw InputError("codegree needs two distinct vertices");
    Mask nb = h.neighborhood(u, v);
    return {popcount(nb), mask_to_vector(nb)};
}

EdgeCodegreeProfile edge_codegree_profile(const TripleSystem& h, const Triple& e) {
    if (e[0] < 0 || e[2] >= h.n() || !e.distinct() || !h.contains(e))
        throw InputError("edge_codegree_profile: triple is not an edge of H");
    EdgeCodegreeProfile p{e, h.n(), 0};
    for (const Edge& pr : e.pairs()) {
        int d = h.codegree(pr);
        p.min_codegree = std::min(p.min_codegree, d);
        p.max_codegree = std::max(p.max_codegree, d);
    }
    return p;
}

bool is_d_full(const TripleSystem& h, int d) {
    for (int u = 0; u < h.n(); ++u) {
        Mask nb = h.shadow_neighbors(u) & ~low_mask(u + 1);
        bool ok = true;
        for_each_bit(nb, [&](int v) { ok = ok && h.codegree(u, v) >= d; });
        if (!ok) return false;
    }
    return true;
}

bool is_superfull(const TripleSystem& h, int d, int k) {
    if (k <= d)
        throw InputError("superfull needs k > d (got d=" + std::to_string(d) +
                         ", k=" + std::to_string(k) + ")");
    if (!is_d_full(h, d)) return false;
    for (const Triple& t : h.edges()) {
        int low = 0;
        for (const Edge& pr : t.pairs()) low += h.codegree(pr) < k ? 1 : 0;
        if (low > 1) return false;
    }
    return true;
}

bool is_two_intersecting(const TripleSystem& h) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (popcount(es[i].mask() & es[j].mask()) != 2) return false;
    return true;
}

TwoIntersectingStructure two_intersecting_structure(const TripleSystem& h) {
    if (!is_two_intersecting(h)) return {IntersectionKind::NotTwoIntersecting, {}};
    if (h.empty()) return {IntersectionKind::SmallSystem, {}};
    Mask common = ~Mask{0};
    for (const Triple& t : h.edges()) common &= t.mask();
    if (popcount(common) >= 2) {
        auto vs = mask_to_vector(common);
        return {IntersectionKind::CommonPair, Edge(vs[0], vs[1])};
    }
    if (h.size() <= 4) return {IntersectionKind::SmallSystem, {}};
    throw std::logic_error("2-intersecting system with " + std::to_string(h.size()) +
                           " edges and no common pair");
}

MatchingStructure matching_le1_structure(const Graph& g) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!es[i].contains(es[j].u) && !es[i].contains(es[j].v))
                return {MatchingKind::MatchingAtLeast2, -1};
    if (es.empty()) return {MatchingKind::Empty, -1};
    Mask common = bit(es[0].u) | bit(es[0].v);
    for (const Edge& e : es) common &= bit(e.u) | bit(e.v);
    if (common) return {MatchingKind::Star, lowest(common)};
    if (es.size() == 3) return {MatchingKind::Triangle, -1};
    throw std::logic_error("intersecting graph that is neither a star nor a triangle");
}

namespace serial {

std::int64_t count_triangles(const Graph& g) {
    std::int64_t total = 0;
    for (const Edge& e : g.edges())
        total += popcount(g.neighbors(e.u) & g.neighbors(e.v) & ~low_mask(e.v + 1));
    return total;
}

}  // namespace serial

namespace parallel {

std::int64_t count_triangles(const Graph& g, int workers) {
    const auto& es = g.edges();
    const auto m = static_cast<std::int64_t>(es.size());
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) num_threads(workers) schedule(static)
    for (std::int64_t i = 0; i < m; ++i) {
        const Edge& e = es[static_cast<std::size_t>(i)];
        total += popcount(g.neighbors(e.u) & g.neighbors(e.v) & ~low_mask(e.v + 1));
    }
    (void)workers;
    return total;
}

}  // namespace parallel

std::int64_t count_triangles(const Graph& g, int workers) {
    return workers > 1 ? parallel::count_triangles(g, workers) : serial::count_triangles(g);
}

int max_i_degree(const TripleSystem& h, int i) {
    if (i == 1) {
        int d = 0;
        for (int v = 0; v < h.n(); ++v) d = std::max(d, h.degree(v));
        return d;
    }
    if (i == 2) return h.max_codegree();
    throw InputError("i-degree supported for i in {1,2}");
}

}  // namespace trexp
