// Independent brute-force oracles used to derive and cross-check values.
// They share only the plain data types with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "trexp/graph.hpp"
#include "trexp/triple_system.hpp"

namespace oracle {

using trexp::Edge;
using trexp::Graph;
using trexp::Mask;
using trexp::Triple;
using trexp::TripleSystem;
using trexp::Vertex;

inline bool independent(const Graph& g, Mask s) {
    for (const Edge& e : g.edges())
        if (((s >> e.u) & 1U) && ((s >> e.v) & 1U)) return false;
    return true;
}

inline int missed(const Graph& g, Mask s) {
    int c = 0;
    for (const Edge& e : g.edges())
        if (!((s >> e.u) & 1U) && !((s >> e.v) & 1U)) ++c;
    return c;
}

/// min over independent I of |I| + #edges missed by I (all 2^n subsets).
inline int sigma(const Graph& g) {
    int best = g.size();
    for (Mask s = 0; s < (Mask{1} << g.n()); ++s)
        if (independent(g, s)) best = std::min(best, std::popcount(s) + missed(g, s));
    return best;
}

/// All independent I reaching sigma, as sorted vertex lists in lex order.
inline std::vector<std::vector<Vertex>> sigma_sets(const Graph& g) {
    const int s = sigma(g);
    std::vector<std::vector<Vertex>> out;
    for (Mask m = 0; m < (Mask{1} << g.n()); ++m)
        if (independent(g, m) && std::popcount(m) + missed(g, m) == s) {
            std::vector<Vertex> v;
            for (int i = 0; i < g.n(); ++i)
                if ((m >> i) & 1U) v.push_back(i);
            out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline int tau(const Graph& g) {
    int best = g.n();
    for (Mask s = 0; s < (Mask{1} << g.n()); ++s)
        if (missed(g, s) == 0) best = std::min(best, std::popcount(s));
    return best;
}

/// Minimum size of a set meeting every edge exactly once; -1 if none.
inline int tau_ind(const Graph& g) {
    int best = -1;
    for (Mask s = 0; s < (Mask{1} << g.n()); ++s)
        if (missed(g, s) == 0 && independent(g, s) && (best < 0 || std::popcount(s) < best)) best = std::popcount(s);
    return best;
}

inline std::int64_t triangles(const Graph& g) {
    std::int64_t c = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int d = b + 1; d < g.n(); ++d)
                if (g.has_edge(a, b) && g.has_edge(a, d) && g.has_edge(b, d)) ++c;
    return c;
}

/// Triangles of g as 3-sets.
inline std::set<std::vector<int>> triangle_sets(const Graph& g) {
    std::set<std::vector<int>> out;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int d = b + 1; d < g.n(); ++d)
                if (g.has_edge(a, b) && g.has_edge(a, d) && g.has_edge(b, d)) out.insert({a, b, d});
    return out;
}

/// Whether F^3 lies in the 3-graph given by `has(a,b,c)` on n vertices:
/// every injective map of V(F), then every choice of distinct fresh vertices.
inline bool expansion_in(int n, const std::function<bool(int, int, int)>& has, const Graph& f) {
    const int k = f.n();
    if (k > n) return false;
    std::vector<int> img(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    const auto& es = f.edges();
    std::function<bool(std::size_t)> fresh = [&](std::size_t i) -> bool {
        if (i == es.size()) return true;
        const int a = img[static_cast<std::size_t>(es[i].u)], b = img[static_cast<std::size_t>(es[i].v)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || !has(a, b, w)) continue;
            used[static_cast<std::size_t>(w)] = 1;
            if (fresh(i + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    std::function<bool(int)> place = [&](int p) -> bool {
        if (p == k) return fresh(0);
        for (int x = 0; x < n; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            img[static_cast<std::size_t>(p)] = x;
            used[static_cast<std::size_t>(x)] = 1;
            if (place(p + 1)) return true;
            used[static_cast<std::size_t>(x)] = 0;
        }
        return false;
    };
    return place(0);
}

inline bool expansion_in(const TripleSystem& h, const Graph& f) {
    std::set<std::vector<int>> es;
    for (const Triple& t : h.edges()) es.insert({t[0], t[1], t[2]});
    return expansion_in(h.n(), [&](int a, int b, int c) {
        std::vector<int> v{a, b, c};
        std::sort(v.begin(), v.end());
        return v[0] != v[1] && v[1] != v[2] && es.count(v) > 0;
    }, f);
}

inline bool blowup_in(const Graph& g, const Graph& f) {
    return expansion_in(g.n(), [&](int a, int b, int c) {
        return a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
    }, f);
}

/// ex(n, F^3) over all subsets of the C(n,3) triples (n <= 5).
inline int turan_hypergraph(int n, const Graph& f) {
    std::vector<Triple> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) all.emplace_back(a, b, c);
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << all.size()); ++s) {
        if (std::popcount(s) <= best) continue;
        std::vector<Triple> es;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((s >> i) & 1U) es.push_back(all[i]);
        if (!expansion_in(TripleSystem(n, es), f)) best = std::popcount(s);
    }
    return best;
}

/// ex(n, K3, F^triangle) over all labelled graphs on n <= 6 vertices.
inline std::int64_t generalized_turan(int n, const Graph& f) {
    std::vector<Edge> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::int64_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << all.size()); ++s) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((s >> i) & 1U) es.push_back(all[i]);
        Graph g(n, es);
        const auto t = triangles(g);
        if (t > best && !blowup_in(g, f)) best = t;
    }
    return best;
}

inline int max_cut(const Graph& g) {
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
        int c = 0;
        for (const Edge& e : g.edges()) c += (((s >> e.u) ^ (s >> e.v)) & 1U) ? 1 : 0;
        best = std::max(best, c);
    }
    return best;
}

/// Triangles of K_t joined with the balanced complete bipartite graph on
/// n - t vertices (plus one edge in the smaller part), counted from the
/// adjacency rule directly.
inline std::int64_t sbi_triangles(int n, int t, bool plus) {
    const int m = n - t, lo = m / 2;
    auto part = [&](int v) { return v < t ? -1 : (v - t < lo ? 0 : 1); };
    auto adj = [&](int a, int b) {
        const int pa = part(a), pb = part(b);
        if (pa < 0 || pb < 0) return true;
        if (pa != pb) return true;
        return plus && pa == 0 && std::min(a, b) == t && std::max(a, b) == t + 1;
    };
    std::int64_t c = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
                if (adj(a, b) && adj(a, d) && adj(b, d)) ++c;
    return c;
}

/// Seeded random 3-graph with edge probability p.
inline TripleSystem random_system(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (coin(rng)) es.emplace_back(a, b, c);
    return TripleSystem(n, es);
}

struct CleaningInstance {
    TripleSystem h;
    int k;
    int t;
};

/// The fixed 200-instance corpus: n in [6,12], k in {3,4}, t in {1,2}.
inline std::vector<CleaningInstance> cleaning_corpus() {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> nd(6, 12), kd(3, 4), td(1, 2);
    std::uniform_real_distribution<double> pd(0.15, 0.9);
    std::vector<CleaningInstance> out;
    while (out.size() < 200) {
        const int n = nd(rng), k = kd(rng), t = td(rng);
        const double p = pd(rng);
        TripleSystem h = random_system(rng, n, p);
        if (h.empty()) continue;
        out.push_back({h, k, t});
    }
    return out;
}

}  // namespace oracle
