#include "trexp/cleaning.hpp"

#include <algorithm>
#include <string>

#include "trexp/structure.hpp"
#include "trexp/tree.hpp"

namespace trexp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Mutable codegree index; deletions update the three pair masks in place.
class WorkingSystem {
public:
    explicit WorkingSystem(const TripleSystem& h) : n_(h.n()), nbr_(idx(h.n()) * idx(h.n()), 0) {
        for (const Triple& t : h.edges()) set(t, true);
    }

    Mask neighborhood(Vertex u, Vertex v) const { return nbr_[idx(u) * idx(n_) + idx(v)]; }
    int codegree(Vertex u, Vertex v) const { return popcount(neighborhood(u, v)); }
    int n() const { return n_; }

    std::vector<Triple> remove_pair(const Edge& e) {
        std::vector<Triple> removed;
        for_each_bit(neighborhood(e.u, e.v), [&](int w) { removed.emplace_back(e.u, e.v, w); });
        for (const Triple& t : removed) set(t, false);
        return removed;
    }

    TripleSystem snapshot() const {
        std::vector<Triple> es;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for_each_bit(neighborhood(a, b) & ~low_mask(b + 1), [&](int c) { es.emplace_back(a, b, c); });
        return TripleSystem(n_, es);
    }

private:
    void set(const Triple& t, bool on) {
        auto flip = [&](Vertex a, Vertex b, Vertex c) {
            Mask& m1 = nbr_[idx(a) * idx(n_) + idx(b)];
            Mask& m2 = nbr_[idx(b) * idx(n_) + idx(a)];
            if (on) {
                m1 |= bit(c);
                m2 |= bit(c);
            } else {
                m1 &= ~bit(c);
                m2 &= ~bit(c);
            }
        };
        flip(t[0], t[1], t[2]);
        flip(t[0], t[2], t[1]);
        flip(t[1], t[2], t[0]);
    }

    int n_;
    std::vector<Mask> nbr_;
};

template <class Sys>
int type_of(const Sys& h, const Edge& e, int k, int t) {
    const int d = h.codegree(e.u, e.v);
    if (d == 0) return 0;
    if (d <= t - 1) return 1;
    if (d == t) {
        // f' = {x, w} for x in e and w completing e to an edge of H_i.
        bool found = false;
        for_each_bit(h.neighborhood(e.u, e.v), [&](int w) {
            found = found || h.codegree(e.u, w) == t || h.codegree(e.v, w) == t;
        });
        if (found) return 2;
    }
    if (d >= t + 1 && d <= 3 * k - 1) return 3;
    return 0;
}

}  // namespace

int pair_type(const TripleSystem& h, const Edge& e, int k, int t) {
    if (e.u < 0 || e.v >= h.n() || e.u == e.v) throw InputError("pair out of range");
    return type_of(h, e, k, t);
}

CleaningTrace cleaning_algorithm(const TripleSystem& h, int k, int t) {
    if (t < 0 || k < t) throw InputError("cleaning needs k >= t >= 0");
    CleaningTrace tr;
    tr.k = k;
    tr.t = t;
    tr.input = h;
    tr.h_star = h.filtered([&](const Triple& e) {
        int mx = 0;
        for (const Edge& p : e.pairs()) mx = std::max(mx, h.codegree(p));
        return mx <= 3 * k;
    });
    tr.h0 = h.filtered([&](const Triple& e) { return !tr.h_star.contains(e); });
    WorkingSystem w(tr.h0);
    for (;;) {
        Edge best;
        int best_type = 4;
        for (int a = 0; a < w.n() && best_type > 1; ++a)
            for (int b = a + 1; b < w.n(); ++b) {
                int ty = type_of(w, Edge(a, b), k, t);
                if (ty != 0 && ty < best_type) {
                    best_type = ty;
                    best = Edge(a, b);
                    if (ty == 1) break;
                }
            }
        if (best_type == 4) break;
        tr.steps.push_back(CleaningStep{best, best_type, w.remove_pair(best)});
    }
    tr.final_system = w.snapshot();
    if (3 * k > t) tr.superfull = is_superfull(tr.final_system, t, 3 * k);
    return tr;
}

TripleSystem replay(const CleaningTrace& trace, int i) {
    if (i < 0 || i > trace.q()) throw InputError("replay index out of range");
    WorkingSystem w(trace.h0);
    for (int s = 0; s < i; ++s) w.remove_pair(trace.steps[idx(s)].pair);
    return w.snapshot();
}

TripleSystem extract_d_full(const TripleSystem& h, int d) {
    WorkingSystem w(h);
    for (bool again = true; again;) {
        again = false;
        for (int a = 0; a < w.n() && !again; ++a)
            for (int b = a + 1; b < w.n(); ++b) {
                int c = w.codegree(a, b);
                if (c >= 1 && c <= d) {
                    w.remove_pair(Edge(a, b));
                    again = true;
                    break;
                }
            }
    }
    return w.snapshot();
}

TripleSystem extract_linear_subgraph(const TripleSystem& h, int i) {
    if (i != 1 && i != 2) throw InputError("linear subgraph extraction supports i in {1,2}");
    if (h.empty()) throw InputError("linear subgraph extraction needs a nonempty system");
    const auto& es = h.edges();
    const std::size_t m = es.size();
    std::vector<std::vector<int>> adj(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (popcount(es[a].mask() & es[b].mask()) >= i) {
                adj[a].push_back(static_cast<int>(b));
                adj[b].push_back(static_cast<int>(a));
            }
    std::vector<int> deg(m);
    std::vector<char> alive(m, 1);
    for (std::size_t a = 0; a < m; ++a) deg[a] = static_cast<int>(adj[a].size());
    std::vector<Triple> keep;
    auto kill = [&](std::size_t x) {
        alive[x] = 0;
        for (int y : adj[x]) --deg[idx(y)];
    };
    for (;;) {
        std::size_t pick = m;
        for (std::size_t a = 0; a < m; ++a)
            if (alive[a] && (pick == m || deg[a] < deg[pick])) pick = a;
        if (pick == m) break;
        keep.push_back(es[pick]);
        std::vector<int> nb;
        for (int y : adj[pick])
            if (alive[idx(y)]) nb.push_back(y);
        kill(pick);
        for (int y : nb) kill(idx(y));
    }
    std::sort(keep.begin(), keep.end());
    return TripleSystem(h.n(), keep);
}

bool FullnessReport::all_found() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.embedding.has_value(); });
}

FullnessReport fullness_embedding_check(const TripleSystem& h, int k, const SearchOptions& opt) {
    if (k < 1 || k > 9) throw InputError("fullness check supports 1 <= k <= 9");
    if (h.empty()) throw HypothesisError("nonempty", "H must be nonempty");
    if (!is_d_full(h, 3 * k)) throw HypothesisError("3k-full", "H is not " + std::to_string(3 * k) + "-full");
    FullnessReport rep;
    rep.k = k;
    int index = 0;
    for (const Graph& tree : enumerate_trees(k + 1))
        rep.entries.push_back({"tree#" + std::to_string(index++), tree, find_expansion(h, tree, opt)});
    if (k >= 3) {
        Graph c = cycle_graph(k);
        rep.entries.push_back({"C" + std::to_string(k), c, find_expansion(h, c, opt)});
    }
    return rep;
}

}  // namespace trexp
