#include "trexp/tree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "trexp/canon.hpp"

namespace trexp {

namespace {

// Objective of a crosscut pair: cost first, then larger |I| preferred.
struct Val {
    int cost = 0;
    int neg_size = 0;
    auto operator<=>(const Val&) const = default;
    Val operator+(const Val& o) const { return {cost + o.cost, neg_size + o.neg_size}; }
};

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr Val kInfVal{kInf, 0};

bool is_inf(const Val& v) { return v.cost >= kInf; }
Val add(const Val& a, const Val& b) { return is_inf(a) || is_inf(b) ? kInfVal : a + b; }

// force[v]: -1 free, 0 excluded from I, 1 inside I.
using Forcing = std::vector<int>;

Val forest_optimum(const Graph& g, const Forcing& force) {
    const int n = g.n();
    std::vector<Val> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    Mask seen = 0;
    for (int r = 0; r < n; ++r) {
        if (seen & bit(r)) continue;
        std::vector<Vertex> stack{r};
        seen |= bit(r);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for_each_bit(g.neighbors(v) & ~seen, [&](int w) {
                seen |= bit(w);
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            });
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        const auto vi = static_cast<std::size_t>(v);
        Val vin{1, -1}, vout{0, 0};
        for_each_bit(g.neighbors(v), [&](int c) {
            if (parent[static_cast<std::size_t>(c)] != v) return;
            const auto ci = static_cast<std::size_t>(c);
            vin = add(vin, out[ci]);
            vout = add(vout, std::min(in[ci], add(out[ci], Val{1, 0})));
        });
        in[vi] = force[vi] == 0 ? kInfVal : vin;
        out[vi] = force[vi] == 1 ? kInfVal : vout;
    }
    Val total{0, 0};
    for (int r = 0; r < n; ++r)
        if (parent[static_cast<std::size_t>(r)] < 0)
            total = add(total, std::min(in[static_cast<std::size_t>(r)], out[static_cast<std::size_t>(r)]));
    return total;
}

// Exact branch and bound over vertices in increasing order.
struct GeneralSearch {
    const Graph& g;
    const Forcing& force;
    Val best = kInfVal;

    void run(int v, Mask in, Mask out, Val cur) {
        if (!(cur < best)) return;
        if (v == g.n()) {
            best = cur;
            return;
        }
        const auto f = force[static_cast<std::size_t>(v)];
        if (f != 0 && !(g.neighbors(v) & in)) run(v + 1, in | bit(v), out, cur + Val{1, -1});
        if (f != 1) run(v + 1, in, out | bit(v), cur + Val{popcount(g.neighbors(v) & out), 0});
    }
};

Val optimum(const Graph& g, const Forcing& force) {
    if (g.is_forest()) return forest_optimum(g, force);
    if (g.n() > 40) throw InputError("crosscut number of a non-forest is limited to 40 vertices");
    GeneralSearch s{g, force};
    s.run(0, 0, 0, Val{0, 0});
    return s.best;
}

bool forcing_consistent(const Graph& g, const Forcing& force, Vertex v) {
    for (int w = 0; w < g.n(); ++w)
        if (force[static_cast<std::size_t>(w)] == 1 && g.has_edge(v, w)) return false;
    return true;
}

void require_range(const Graph& g, const std::vector<Vertex>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.n())
            throw InputError(std::string(what) + ": vertex " + std::to_string(vs[i]) + " out of range");
        if (i && vs[i] <= vs[i - 1]) throw InputError(std::string(what) + ": vertices must be sorted and distinct");
    }
}

int vertex_cover(const Graph& g, Mask alive) {
    // Degree-one reduction: taking the neighbour of a pendant vertex is safe.
    int taken = 0;
    for (bool again = true; again;) {
        again = false;
        for_each_bit(alive, [&](int v) {
            if (again || !((alive >> v) & 1U)) return;
            Mask nb = g.neighbors(v) & alive;
            if (popcount(nb) == 1) {
                alive &= ~nb;
                ++taken;
                again = true;
            }
        });
    }
    int best_v = -1, best_d = 0;
    for_each_bit(alive, [&](int v) {
        int d = popcount(g.neighbors(v) & alive);
        if (d > best_d) best_d = d, best_v = v;
    });
    if (best_v < 0) return taken;
    Mask nb = g.neighbors(best_v) & alive;
    int a = 1 + vertex_cover(g, alive & ~bit(best_v));
    int b = popcount(nb) + vertex_cover(g, alive & ~nb & ~bit(best_v));
    return taken + std::min(a, b);
}

void require_tree(const Graph& t, const char* what) {
    if (!t.is_tree()) throw InputError(std::string(what) + " requires a tree");
}

}  // namespace

Mask leaves(const Graph& g) {
    Mask m = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) m |= bit(v);
    return m;
}

CrosscutPair crosscut_pair_from(const Graph& g, const std::vector<Vertex>& independent) {
    require_range(g, independent, "crosscut pair");
    Mask in = vector_to_mask(independent);
    CrosscutPair p;
    p.independent = independent;
    for (const Edge& e : g.edges()) {
        bool hu = (in >> e.u) & 1U, hv = (in >> e.v) & 1U;
        if (hu && hv) throw InputError("crosscut pair: I is not independent");
        if (!hu && !hv) p.remainder.push_back(e);
    }
    return p;
}

int crosscut_value(const Graph& g) {
    return optimum(g, Forcing(static_cast<std::size_t>(g.n()), -1)).cost;
}

CrosscutResult crosscut_number(const Graph& g) {
    bool unicyclic = g.is_connected() && g.size() == g.n();
    if (!g.is_tree() && !unicyclic)
        throw InputError("crosscut_number expects a tree or a connected unicyclic graph");
    Forcing force(static_cast<std::size_t>(g.n()), -1);
    const Val target = optimum(g, force);
    for (int v = 0; v < g.n(); ++v) {
        auto& f = force[static_cast<std::size_t>(v)];
        if (forcing_consistent(g, force, v)) {
            f = 1;
            if (optimum(g, force) == target) continue;
        }
        f = 0;
    }
    std::vector<Vertex> in;
    for (int v = 0; v < g.n(); ++v)
        if (force[static_cast<std::size_t>(v)] == 1) in.push_back(v);
    return {target.cost, crosscut_pair_from(g, in)};
}

std::vector<CrosscutPair> crosscut_pairs(const Graph& g, std::size_t cap, bool* overflow) {
    Forcing force(static_cast<std::size_t>(g.n()), -1);
    const int sigma = optimum(g, force).cost;
    std::vector<std::vector<Vertex>> found;
    bool over = false;
    // Every node of this search extends to an optimal pair, so the work is
    // proportional to n times the number of pairs reported.
    auto rec = [&](auto&& self, int v) -> void {
        if (over) return;
        if (v == g.n()) {
            if (found.size() == cap) {
                over = true;
                return;
            }
            std::vector<Vertex> in;
            for (int w = 0; w < g.n(); ++w)
                if (force[static_cast<std::size_t>(w)] == 1) in.push_back(w);
            found.push_back(std::move(in));
            return;
        }
        auto& f = force[static_cast<std::size_t>(v)];
        if (forcing_consistent(g, force, v)) {
            f = 1;
            if (optimum(g, force).cost == sigma) self(self, v + 1);
        }
        f = 0;
        if (optimum(g, force).cost == sigma) self(self, v + 1);
        f = -1;
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    if (overflow) *overflow = over;
    std::vector<CrosscutPair> out;
    out.reserve(found.size());
    for (const auto& in : found) out.push_back(crosscut_pair_from(g, in));
    return out;
}

int covering_number(const Graph& g) { return vertex_cover(g, g.non_isolated()); }

std::optional<std::vector<Vertex>> minimum_independent_cover(const Graph& g) {
    std::vector<int> side;
    if (!g.bipartition(side)) return std::nullopt;
    Mask cover = 0;
    for (Mask comp : g.components()) {
        if (popcount(comp) < 2) continue;
        Mask a = 0, b = 0;
        for_each_bit(comp, [&](int v) { (side[static_cast<std::size_t>(v)] == 0 ? a : b) |= bit(v); });
        int ca = popcount(a), cb = popcount(b);
        if (ca != cb) {
            cover |= ca < cb ? a : b;
        } else {
            cover |= lowest(a) < lowest(b) ? a : b;
        }
    }
    return mask_to_vector(cover);
}

std::optional<int> independent_covering_number(const Graph& g) {
    auto c = minimum_independent_cover(g);
    if (!c) return std::nullopt;
    return static_cast<int>(c->size());
}

std::vector<Edge> critical_edges(const Graph& t) {
    require_tree(t, "critical_edges");
    const int sigma = crosscut_value(t);
    std::vector<Edge> out;
    for (const Edge& e : t.edges())
        if (crosscut_value(t.without_edge(e)) <= sigma - 1) out.push_back(e);
    return out;
}

TreeProfile analyze_tree(const Graph& t, std::size_t pair_cap) {
    require_tree(t, "analyze_tree");
    TreeProfile p;
    p.tree = t;
    auto cr = crosscut_number(t);
    p.sigma = cr.sigma;
    p.best_pair = cr.best;
    p.tau = covering_number(t);
    p.tau_ind = independent_covering_number(t);
    p.crosscut_pairs = crosscut_pairs(t, pair_cap, &p.crosscut_pairs_overflow);
    p.critical_edges = critical_edges(t);
    p.sigma_equals_tau_ind = p.tau_ind && *p.tau_ind == p.sigma;
    p.strongly_edge_critical = p.sigma_equals_tau_ind && p.tau == p.sigma && !p.critical_edges.empty();
    return p;
}

CrosscutWitness decomposition_witness(const Graph& t, const CrosscutPair& pair) {
    require_tree(t, "decomposition_witness");
    if (t.empty()) throw InputError("decomposition_witness requires at least one edge");
    CrosscutPair expected = crosscut_pair_from(t, pair.independent);
    if (expected.remainder != pair.remainder)
        throw InputError("decomposition_witness: R is not the edge set of T - I");
    if (pair.cost() != crosscut_value(t))
        throw InputError("decomposition_witness: |I| + |R| is not the crosscut number");
    const Mask lv = leaves(t);
    CrosscutWitness w;
    w.pair = pair;
    int best_leaves = -1;
    for (Vertex v : pair.independent) {
        Mask nb = t.neighbors(v);
        if (popcount(nb & ~lv) > 1) continue;
        int l = popcount(nb & lv);
        if (l > best_leaves) {
            best_leaves = l;
            w.vertex = v;
        }
    }
    if (w.vertex >= 0) {
        w.kind = WitnessKind::LeafNeighborVertex;
        return w;
    }
    for (const Edge& e : pair.remainder)
        if (((lv >> e.u) & 1U) || ((lv >> e.v) & 1U)) {
            w.kind = WitnessKind::PendantEdge;
            w.edge = e;
            return w;
        }
    throw std::logic_error("optimal crosscut pair without a leaf-heavy vertex or pendant edge");
}

std::optional<PendantCriticalEdge> pendant_critical_edge(const Graph& t, const std::vector<Vertex>& cover) {
    require_tree(t, "pendant_critical_edge");
    require_range(t, cover, "independent cover");
    const Mask c = vector_to_mask(cover);
    for (const Edge& e : t.edges())
        if (popcount(c & (bit(e.u) | bit(e.v))) != 1)
            throw InputError("cover must meet every edge exactly once");
    auto tau_ind = independent_covering_number(t);
    if (!tau_ind || static_cast<int>(cover.size()) != *tau_ind)
        throw InputError("cover is not a minimum independent cover");
    const int sigma = crosscut_value(t);
    if (sigma != *tau_ind) return std::nullopt;
    auto crit = critical_edges(t);
    if (crit.empty()) return std::nullopt;
    const Mask lv = leaves(t);
    for (Vertex leaf : cover) {
        if (!((lv >> leaf) & 1U)) continue;
        Edge e(leaf, lowest(t.neighbors(leaf)));
        if (std::find(crit.begin(), crit.end(), e) != crit.end()) return PendantCriticalEdge{e, leaf, cover};
    }
    throw std::logic_error("no pendant critical edge with its leaf in the independent cover");
}

std::optional<PendantCriticalEdge> pendant_critical_edge(const Graph& t) {
    require_tree(t, "pendant_critical_edge");
    auto cover = minimum_independent_cover(t);
    return pendant_critical_edge(t, *cover);
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 10) throw InputError("tree enumeration supports 1 <= n <= 10");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const Graph& t : level)
            for (int v = 0; v < t.n(); ++v) {
                std::vector<Edge> es = t.edges();
                es.emplace_back(v, m - 1);
                auto cf = canonical_form(Graph(m, es));
                if (seen.insert(cf.key).second) next.emplace_back(cf.key, cf.graph);
            }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [k, g] : next) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace trexp
