#include "trexp/builders.hpp"

#include <algorithm>
#include <string>

namespace trexp {

TripleSystem expansion(const Graph& f) {
    if (f.empty()) throw InputError("expansion of a graph without edges");
    if (f.n() + f.size() > kMaxVertices) throw InputError("expansion exceeds 64 vertices");
    std::vector<Triple> es;
    es.reserve(f.edges().size());
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const Edge& e = f.edges()[i];
        es.emplace_back(e.u, e.v, expansion_vertex(f, static_cast<int>(i)));
    }
    return TripleSystem(f.n() + f.size(), es);
}

Graph triangle_blowup(const Graph& f) {
    if (f.empty()) throw InputError("triangle blowup of a graph without edges");
    if (f.n() + f.size() > kMaxVertices) throw InputError("blowup exceeds 64 vertices");
    std::vector<Edge> es = f.edges();
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const Edge& e = f.edges()[i];
        Vertex w = expansion_vertex(f, static_cast<int>(i));
        es.emplace_back(e.u, w);
        es.emplace_back(e.v, w);
    }
    return Graph(f.n() + f.size(), es);
}

TripleSystem triangle_system(const Graph& g) {
    std::vector<Triple> es;
    for (const Edge& e : g.edges())
        for_each_bit(g.neighbors(e.u) & g.neighbors(e.v) & ~low_mask(e.v + 1),
                     [&](int w) { es.emplace_back(e.u, e.v, w); });
    std::sort(es.begin(), es.end());
    return TripleSystem(g.n(), es);
}

TripleSystem s_construction(int n, int t) {
    if (n < 0 || n > kMaxVertices) throw InputError("S(n,t) needs 0 <= n <= 64");
    if (t < 0 || t > n) throw InputError("S(n,t) needs 0 <= t <= n");
    std::vector<Triple> es;
    for (const Triple& tr : all_triples(n))
        if (tr[0] < t) es.push_back(tr);
    return TripleSystem(n, es);
}

std::int64_t s_size(int n, int t) { return binom(n, 3) - binom(n - t, 3); }

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.n(), n = g1.n() + g2.n();
    if (n > kMaxVertices) throw InputError("join exceeds 64 vertices");
    std::vector<Edge> es = g1.edges();
    for (const Edge& e : g2.edges()) es.emplace_back(e.u + n1, e.v + n1);
    for (int a = 0; a < n1; ++a)
        for (int b = n1; b < n; ++b) es.emplace_back(a, b);
    return Graph(n, es);
}

Graph balanced_bipartite(int m, bool plus) {
    if (m < 0 || m > kMaxVertices) throw InputError("T(m) needs 0 <= m <= 64");
    const int small = m / 2;
    if (plus && small < 2) throw InputError("T+(m) needs a part of size at least 2");
    std::vector<Edge> es;
    for (int a = 0; a < small; ++a)
        for (int b = small; b < m; ++b) es.emplace_back(a, b);
    if (plus) es.emplace_back(0, 1);
    return Graph(m, es);
}

Graph s_graph(int n, int t, bool plus) {
    if (t < 0 || t > n) throw InputError("S-graph needs 0 <= t <= n");
    return join(complete_graph(t), balanced_bipartite(n - t, plus));
}

TripleSystem sbi_construction(int n, int t, bool plus) { return triangle_system(s_graph(n, t, plus)); }

std::int64_t sbi_size(int n, int t, bool plus) {
    const std::int64_t m = n - t, lo = m / 2, hi = m - lo;
    std::int64_t size = binom(t, 3) + binom(t, 2) * m + t * lo * hi;
    if (plus) size += t + hi;
    return size;
}

std::int64_t triple_index(int n, const Triple& t) {
    const std::int64_t a = t[0], b = t[1], c = t[2];
    return binom(n, 3) - binom(n - a, 3) + binom(n - a - 1, 2) - binom(n - b, 2) + (c - b - 1);
}

Coloring make_coloring(int n, std::vector<int> colors) {
    if (n < 0 || n > kMaxVertices) throw InputError("colouring needs 0 <= n <= 64");
    if (static_cast<std::int64_t>(colors.size()) != binom(n, 3))
        throw InputError("colouring must assign a colour to all " + std::to_string(binom(n, 3)) + " triples");
    int max_color = -1;
    for (int c : colors) {
        if (c < 0) throw InputError("negative colour id");
        max_color = std::max(max_color, c);
    }
    std::vector<char> used(static_cast<std::size_t>(max_color + 1), 0);
    for (int c : colors) used[static_cast<std::size_t>(c)] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end())
        throw InputError("colour ids must be exactly 0..count-1 (surjective)");
    return Coloring{n, std::move(colors), max_color + 1};
}

Coloring lower_bound_coloring(const TripleSystem& base) {
    if (base.empty()) throw InputError("lower-bound colouring needs a nonempty base");
    const int n = base.n();
    const int surplus = base.size();
    std::vector<int> colors(static_cast<std::size_t>(binom(n, 3)), surplus);
    for (std::size_t i = 0; i < base.edges().size(); ++i)
        colors[static_cast<std::size_t>(triple_index(n, base.edges()[i]))] = static_cast<int>(i);
    return make_coloring(n, std::move(colors));
}

}  // namespace trexp
