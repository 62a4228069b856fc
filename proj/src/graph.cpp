#include "trexp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trexp {

namespace {

void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_vertex_count(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        Edge e(raw.u, raw.v);
        if (e.u < 0 || e.v >= n)
            throw InputError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                             "} has an endpoint outside [0," + std::to_string(n) + ")");
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        if (has_edge(e)) throw InputError("duplicate edge {" + std::to_string(e.u) + "," +
                                          std::to_string(e.v) + "}");
        adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
        adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_adjacency(std::vector<Mask> adjacency) {
    Graph g(static_cast<int>(adjacency.size()));
    g.adj_ = std::move(adjacency);
    for (int u = 0; u < g.n_; ++u)
        for_each_bit(g.adj_[static_cast<std::size_t>(u)] & ~low_mask(u + 1),
                     [&](int v) { g.edges_.emplace_back(u, v); });
    return g;
}

Mask Graph::non_isolated() const {
    Mask m = 0;
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(v)]) m |= bit(v);
    return m;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::without_edge(const Edge& e) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) rest.push_back(f);
    return Graph(n_, rest);
}

Graph Graph::induced(Mask keep) const {
    std::vector<Vertex> label(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for_each_bit(keep & vertex_mask(), [&](int v) { label[static_cast<std::size_t>(v)] = next++; });
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        Vertex a = label[static_cast<std::size_t>(e.u)], b = label[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    return Graph(next, es);
}

Graph Graph::restricted(Mask keep) const {
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (((keep >> e.u) & 1U) && ((keep >> e.v) & 1U)) es.push_back(e);
    return Graph(n_, es);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(n_, es);
}

Graph Graph::without_isolated() const { return induced(non_isolated()); }

std::vector<Mask> Graph::components() const {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1U) continue;
        Mask comp = bit(s), frontier = bit(s);
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_forest() const {
    return size() == n_ - static_cast<int>(components().size());
}

bool Graph::is_tree() const { return n_ >= 1 && size() == n_ - 1 && is_connected(); }

bool Graph::bipartition(std::vector<int>& side) const {
    side.assign(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> stack;
    for (int s = 0; s < n_; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            int sv = side[static_cast<std::size_t>(v)];
            bool ok = true;
            for_each_bit(adj_[static_cast<std::size_t>(v)], [&](int w) {
                int& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - sv;
                    stack.push_back(w);
                } else if (sw == sv) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

Graph path_graph(int length) {
    std::vector<Edge> es;
    for (int i = 0; i < length; ++i) es.emplace_back(i, i + 1);
    return Graph(length + 1, es);
}

Graph cycle_graph(int length) {
    if (length < 3) throw InputError("cycle length must be at least 3");
    std::vector<Edge> es;
    for (int i = 0; i < length; ++i) es.emplace_back(i, (i + 1) % length);
    return Graph(length, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace trexp
