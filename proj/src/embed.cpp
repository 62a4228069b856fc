#include "trexp/embed.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <stdexcept>

#include "trexp/canon.hpp"
#include "trexp/matching.hpp"
#include "trexp/structure.hpp"
#include "trexp/tree.hpp"

namespace trexp {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct Plan {
    std::vector<Vertex> order;
    int core_count = 0;
    int isolated = 0;
    std::vector<std::vector<Vertex>> earlier;  // already-placed neighbours, per position
    std::vector<std::vector<int>> completed;   // edge indices whose last endpoint is at this position
    Mask first_orbit = 0;                      // orbit of order[0] minus itself
};

Plan make_plan(const Graph& f, bool symmetry) {
    Plan plan;
    plan.order = search_order(f);
    plan.core_count = popcount(f.non_isolated());
    plan.isolated = f.n() - plan.core_count;
    plan.earlier.resize(plan.order.size());
    plan.completed.resize(plan.order.size());
    Mask placed = 0;
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
        Vertex p = plan.order[i];
        for_each_bit(f.neighbors(p) & placed, [&](int q) {
            plan.earlier[i].push_back(q);
            plan.completed[i].push_back(f.edge_index(Edge(p, q)));
        });
        placed |= bit(p);
    }
    if (symmetry && plan.core_count > 0) plan.first_orbit = automorphism_orbit(f, plan.order[0]) & ~bit(plan.order[0]);
    return plan;
}

// x ~ y iff swapping x and y is an automorphism of H.
std::vector<Mask> host_twins(const TripleSystem& h) {
    const int n = h.n();
    std::vector<Mask> tw(idx(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool same = true;
            for (int a = 0; a < n && same; ++a) {
                if (a == x || a == y) continue;
                same = (h.neighborhood(x, a) & ~bit(y)) == (h.neighborhood(y, a) & ~bit(x));
            }
            if (same) {
                tw[idx(x)] |= bit(y);
                tw[idx(y)] |= bit(x);
            }
        }
    return tw;
}

Mask smallest_free(int n, Mask used, int count) {
    Mask out = 0;
    for (int v = 0; v < n && count > 0; ++v)
        if (!((used >> v) & 1U)) {
            out |= bit(v);
            --count;
        }
    return out;
}

class ExpansionSearch {
public:
    ExpansionSearch(const TripleSystem& h, const Graph& f, const Plan& plan, const std::vector<Mask>* twins,
                    bool deterministic, bool symmetry, BudgetMeter& meter)
        : h_(h), f_(f), plan_(plan), twins_(twins), deterministic_(deterministic), symmetry_(symmetry),
          meter_(meter), img_(idx(f.n()), -1), allowed_(idx(f.n()), 0) {
        for (int p = 0; p < f.n(); ++p)
            for (int x = 0; x < h.n(); ++x)
                if (popcount(h.shadow_neighbors(x)) >= f.degree(p)) allowed_[idx(p)] |= bit(x);
    }

    void set_cutoff(const std::atomic<int>* cutoff, int index) {
        cutoff_ = cutoff;
        index_ = index;
    }

    std::optional<Embedding> run(Mask first_level) {
        first_level_ = first_level;
        if (f_.n() + f_.size() > h_.n()) return std::nullopt;
        dfs(0);
        return result_;
    }

    /// Candidates at the first position after static twin reduction.
    Mask first_candidates() const {
        Mask cand = allowed_[idx(plan_.order[0])] & low_mask(h_.n());
        if (!twins_) return cand;
        Mask keep = 0;
        for_each_bit(cand, [&](int x) {
            if (!(keep & (*twins_)[idx(x)])) keep |= bit(x);
        });
        return keep;
    }

private:
    bool feasible() const {
        std::vector<Mask> cand;
        cand.reserve(active_.size());
        for (int e : active_) {
            const Edge& pe = f_.edges()[idx(e)];
            cand.push_back(h_.neighborhood(img_[idx(pe.u)], img_[idx(pe.v)]) & ~used_);
        }
        return find_sdr(cand).has_value();
    }

    bool finish() {
        std::vector<Mask> cand;
        cand.reserve(f_.edges().size());
        for (const Edge& pe : f_.edges())
            cand.push_back(h_.neighborhood(img_[idx(pe.u)], img_[idx(pe.v)]) & ~used_);
        auto sdr = deterministic_ ? lex_least_sdr(cand) : find_sdr(cand);
        if (!sdr) return false;
        Embedding e;
        e.pattern = f_;
        e.core_map = img_;
        e.expansion_map = *sdr;
        Mask taken = used_ | vector_to_mask(*sdr);
        auto extra = mask_to_vector(smallest_free(h_.n(), taken, plan_.isolated));
        for (int i = 0; i < plan_.isolated; ++i)
            e.core_map[idx(plan_.order[idx(plan_.core_count + i)])] = extra[idx(i)];
        result_ = std::move(e);
        return true;
    }

    bool dfs(int pos) {
        meter_.tick();
        if (cutoff_ && cutoff_->load(std::memory_order_relaxed) < index_) {
            aborted_ = true;
            return false;
        }
        if (pos == plan_.core_count) return finish();
        const Vertex p = plan_.order[idx(pos)];
        Mask cand = allowed_[idx(p)] & ~used_ & low_mask(h_.n());
        for (Vertex q : plan_.earlier[idx(pos)]) cand &= h_.shadow_neighbors(img_[idx(q)]);
        if (pos == 0) cand &= first_level_;
        const int f0 = pos > 0 ? img_[idx(plan_.order[0])] : -1;
        if (symmetry_ && pos > 0 && ((plan_.first_orbit >> p) & 1U)) cand &= ~low_mask(f0 + 1);
        Mask tried = 0;
        while (cand) {
            const int x = lowest(cand);
            cand &= cand - 1;
            if (twins_) {
                Mask peers = tried & (*twins_)[idx(x)];
                if (symmetry_ && pos > 0) peers &= x > f0 ? ~low_mask(f0 + 1) : low_mask(f0);
                if (peers) continue;
            }
            tried |= bit(x);
            img_[idx(p)] = x;
            used_ |= bit(x);
            const auto& done = plan_.completed[idx(pos)];
            active_.insert(active_.end(), done.begin(), done.end());
            bool ok = feasible() && dfs(pos + 1);
            if (ok) return true;
            active_.resize(active_.size() - done.size());
            used_ &= ~bit(x);
            img_[idx(p)] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    const TripleSystem& h_;
    const Graph& f_;
    const Plan& plan_;
    const std::vector<Mask>* twins_;
    bool deterministic_;
    bool symmetry_;
    BudgetMeter& meter_;
    std::vector<Vertex> img_;
    std::vector<Mask> allowed_;
    std::vector<int> active_;
    Mask used_ = 0;
    Mask first_level_ = ~Mask{0};
    const std::atomic<int>* cutoff_ = nullptr;
    int index_ = 0;
    bool aborted_ = false;
    std::optional<Embedding> result_;
};

// Runs `task(i)` for each first-level branch on `workers` threads and keeps
// the result of the smallest branch index that succeeds.
template <class Result, class Task>
std::optional<Result> first_success(int branches, int workers, bool stop_on_any, Task&& task) {
    std::vector<std::optional<Result>> results(idx(branches));
    std::atomic<int> best{INT_MAX};
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int i = 0; i < branches; ++i) {
        if (i > best.load(std::memory_order_relaxed)) continue;
        try {
            auto r = task(i, &best);
            if (r) {
                results[idx(i)] = std::move(r);
                int cur = best.load();
                const int mark = stop_on_any ? -1 : i;
                while (mark < cur && !best.compare_exchange_weak(cur, mark)) {
                }
            }
        } catch (...) {
#pragma omp critical(trexp_first_success)
            {
                if (!error) error = std::current_exception();
            }
            best.store(-1);
        }
    }
    if (error) std::rethrow_exception(error);
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

std::optional<Embedding> run_expansion_search(const TripleSystem& h, const Graph& f, const SearchOptions& opt,
                                              bool use_twins) {
    if (f.empty()) throw InputError("pattern must have at least one edge");
    if (f.n() + f.size() > h.n()) return std::nullopt;
    const bool symmetry = opt.pattern_symmetry;
    const Plan plan = make_plan(f, symmetry);
    const std::vector<Mask> twins = use_twins ? host_twins(h) : std::vector<Mask>{};
    const std::vector<Mask>* tw = use_twins ? &twins : nullptr;
    if (opt.workers <= 1) {
        BudgetMeter meter(opt.budget, "expansion search");
        ExpansionSearch s(h, f, plan, tw, opt.deterministic, symmetry, meter);
        return s.run(~Mask{0});
    }
    std::atomic<std::int64_t> shared{0};
    Mask firsts_mask;
    {
        BudgetMeter probe_meter(opt.budget);
        ExpansionSearch probe(h, f, plan, tw, opt.deterministic, symmetry, probe_meter);
        firsts_mask = probe.first_candidates();
    }
    const auto firsts = mask_to_vector(firsts_mask);
    return first_success<Embedding>(
        static_cast<int>(firsts.size()), opt.workers, !opt.deterministic,
        [&](int i, const std::atomic<int>* best) {
            BudgetMeter meter(opt.budget, "expansion search", &shared);
            ExpansionSearch s(h, f, plan, tw, opt.deterministic, symmetry, meter);
            s.set_cutoff(best, i);
            return s.run(bit(firsts[idx(i)]));
        });
}

void require_core_map(int host_n, const Graph& f, const std::vector<Vertex>& core_map) {
    if (static_cast<int>(core_map.size()) != f.n()) throw InputError("core map must cover every pattern vertex");
    Mask seen = 0;
    for (Vertex x : core_map) {
        if (x < 0 || x >= host_n) throw InputError("core map vertex out of range");
        if ((seen >> x) & 1U) throw InputError("core map is not injective");
        seen |= bit(x);
    }
}

}  // namespace

std::vector<Vertex> search_order(const Graph& f) {
    std::vector<Vertex> order;
    const Mask core = f.non_isolated();
    Mask placed = 0;
    while (placed != core) {
        int best = -1, best_links = -1, best_deg = -1;
        for_each_bit(core & ~placed, [&](int v) {
            int links = popcount(f.neighbors(v) & placed), deg = f.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        });
        order.push_back(best);
        placed |= bit(best);
    }
    for_each_bit(f.vertex_mask() & ~core, [&](int v) { order.push_back(v); });
    return order;
}

bool validate_embedding(const TripleSystem& h, const Embedding& e) {
    const Graph& f = e.pattern;
    if (static_cast<int>(e.core_map.size()) != f.n() || static_cast<int>(e.expansion_map.size()) != f.size())
        return false;
    Mask seen = 0;
    auto take = [&](Vertex x) {
        if (x < 0 || x >= h.n() || ((seen >> x) & 1U)) return false;
        seen |= bit(x);
        return true;
    };
    for (Vertex x : e.core_map)
        if (!take(x)) return false;
    for (Vertex x : e.expansion_map)
        if (!take(x)) return false;
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const Edge& pe = f.edges()[i];
        if (!h.contains(Triple(e.core_map[idx(pe.u)], e.core_map[idx(pe.v)], e.expansion_map[i]))) return false;
    }
    return true;
}

bool validate_embedding(const Graph& g, const Embedding& e) {
    return validate_embedding(triangle_system(g), e);
}

std::optional<Embedding> find_expansion(const TripleSystem& h, const Graph& f, const SearchOptions& opt) {
    return run_expansion_search(h, f, opt, true);
}

std::optional<Embedding> find_expansion_reference(const TripleSystem& h, const Graph& f, Budget budget) {
    SearchOptions opt;
    opt.budget = budget;
    return run_expansion_search(h, f, opt, false);
}

std::optional<Embedding> find_blowup(const Graph& g, const Graph& f, const SearchOptions& opt) {
    auto e = find_expansion(triangle_system(g), f, opt);
    if (e) e->host_kind = HostKind::Graph;
    return e;
}

std::optional<Embedding> complete_partial_expansion(const TripleSystem& h, const Graph& f,
                                                    const std::vector<Vertex>& core_map,
                                                    const std::vector<Vertex>& pre_assigned) {
    require_core_map(h.n(), f, core_map);
    if (static_cast<int>(pre_assigned.size()) != f.size())
        throw InputError("pre-assignment must list one entry per pattern edge (-1 for free)");
    const Mask core = vector_to_mask(core_map);
    Mask fixed = 0;
    std::vector<Mask> cand(f.edges().size());
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const Vertex w = pre_assigned[i];
        if (w < 0) continue;
        const Edge& pe = f.edges()[i];
        const Vertex a = core_map[idx(pe.u)], b = core_map[idx(pe.v)];
        if (w >= h.n() || ((core >> w) & 1U)) throw InputError("pre-assigned vertex inside the core or out of range");
        if ((fixed >> w) & 1U) throw InputError("pre-assigned vertices must be distinct");
        if (!h.contains(Triple(a, b, w))) throw InputError("pre-assigned vertex does not complete its pair to an edge");
        fixed |= bit(w);
        cand[i] = bit(w);
    }
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        if (pre_assigned[i] >= 0) continue;
        const Edge& pe = f.edges()[i];
        cand[i] = h.neighborhood(core_map[idx(pe.u)], core_map[idx(pe.v)]) & ~core & ~fixed;
    }
    auto sdr = lex_least_sdr(cand);
    if (!sdr) return std::nullopt;
    return Embedding{f, core_map, *sdr, HostKind::TripleSystem};
}

namespace {

struct CopyPattern {
    Graph f;
    std::vector<Vertex> core_map;
    std::vector<Vertex> pre;
};

CopyPattern pattern_of_copy(const TripleSystem& h, const std::vector<Edge>& copy,
                            const std::map<Edge, Vertex>& pre_assigned) {
    Mask vs = 0;
    for (const Edge& e : copy) {
        if (e.u < 0 || e.v >= h.n() || e.u == e.v) throw InputError("copy pair out of range");
        vs |= bit(e.u) | bit(e.v);
    }
    CopyPattern cp;
    cp.core_map = mask_to_vector(vs);
    std::vector<Vertex> local(idx(h.n()), -1);
    for (std::size_t i = 0; i < cp.core_map.size(); ++i) local[idx(cp.core_map[i])] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (const Edge& e : copy) es.emplace_back(local[idx(e.u)], local[idx(e.v)]);
    cp.f = Graph(static_cast<int>(cp.core_map.size()), es);
    cp.pre.assign(cp.f.edges().size(), -1);
    for (const auto& [pair, w] : pre_assigned) {
        if (pair.u < 0 || pair.v >= h.n() || local[idx(pair.u)] < 0 || local[idx(pair.v)] < 0)
            throw InputError("pre-assigned pair is not in the copy");
        int i = cp.f.edge_index(Edge(local[idx(pair.u)], local[idx(pair.v)]));
        if (i < 0) throw InputError("pre-assigned pair is not in the copy");
        cp.pre[idx(i)] = w;
    }
    return cp;
}

}  // namespace

std::optional<Embedding> complete_partial_expansion(const TripleSystem& h, const std::vector<Edge>& shadow_copy,
                                                    const std::map<Edge, Vertex>& pre_assigned) {
    if (shadow_copy.empty()) throw InputError("copy must have at least one pair");
    auto cp = pattern_of_copy(h, shadow_copy, pre_assigned);
    return complete_partial_expansion(h, cp.f, cp.core_map, cp.pre);
}

bool partial_expansion_condition(const TripleSystem& h, const std::vector<Edge>& shadow_copy,
                                 const std::map<Edge, Vertex>& pre_assigned) {
    const int m = static_cast<int>(shadow_copy.size());
    for (const Edge& e : shadow_copy)
        if (!pre_assigned.count(e) && h.codegree(e) < 3 * m) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

Mask checked_set(const TripleSystem& h, const std::vector<Vertex>& s, const char* name) {
    Mask m = 0;
    for (Vertex v : s) {
        if (v < 0 || v >= h.n()) throw HypothesisError("t-sets", std::string(name) + " has a vertex out of range");
        if ((m >> v) & 1U) throw HypothesisError("t-sets", std::string(name) + " repeats a vertex");
        m |= bit(v);
    }
    return m;
}

// Embeds the forest `r` (pattern ids) on `verts` into G[allowed] with
// root -> root_image; every vertex of `verts` gets a distinct image.
bool embed_forest(const Graph& r, const std::vector<Vertex>& verts, Vertex root, Vertex root_image,
                  const Graph& g, Mask allowed, std::vector<Vertex>& img) {
    std::vector<Vertex> order{root};
    Mask placed = bit(root), want = vector_to_mask(verts);
    while (placed != want) {
        int next = -1;
        for_each_bit(want & ~placed, [&](int v) {
            if (next < 0 && (r.neighbors(v) & placed)) next = v;
        });
        if (next < 0) next = lowest(want & ~placed);
        order.push_back(next);
        placed |= bit(next);
    }
    Mask used = 0;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        const Vertex p = order[i];
        Mask cand = allowed & ~used;
        if (i == 0) cand &= bit(root_image);
        for_each_bit(r.neighbors(p), [&](int q) {
            if (img[idx(q)] >= 0 && ((want >> q) & 1U)) cand &= g.neighbors(img[idx(q)]);
        });
        while (cand) {
            int x = lowest(cand);
            cand &= cand - 1;
            img[idx(p)] = x;
            used |= bit(x);
            if (self(self, i + 1)) return true;
            used &= ~bit(x);
            img[idx(p)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::optional<Embedding> embed_tree_two_sets(const TripleSystem& h, const Graph& t, const std::vector<Vertex>& s1,
                                             const std::vector<Vertex>& s2, const Graph& g1, const Graph& g2) {
    if (!t.is_tree()) throw HypothesisError("tree", "T must be a tree");
    const int k = t.n();
    const int sigma = crosscut_value(t);
    const int tt = sigma - 1;
    if (tt < 1) throw HypothesisError("t-sets", "sigma(T) >= 2 is needed for two distinct t-sets");
    const Mask m1 = checked_set(h, s1, "S1"), m2 = checked_set(h, s2, "S2");
    if (static_cast<int>(s1.size()) != tt || static_cast<int>(s2.size()) != tt)
        throw HypothesisError("t-sets", "S1 and S2 must have size sigma(T)-1 = " + std::to_string(tt));
    if (m1 == m2) throw HypothesisError("t-sets", "S1 and S2 must be distinct");
    if (g1.n() > h.n() || g2.n() > h.n()) throw HypothesisError("graphs", "G1, G2 must live on host vertices");
    const Mask v1 = g1.non_isolated(), v2 = g2.non_isolated();
    if ((v1 | v2) & (m1 | m2)) throw HypothesisError("disjoint", "V1, V2 must avoid S1 and S2");
    if (!(v1 & v2)) throw HypothesisError("intersection", "V1 and V2 must intersect");
    const auto tau_ind = independent_covering_number(t);
    const int min_deg = tau_ind && *tau_ind == sigma ? 1 : 3 * k;
    for (const Graph* g : {&g1, &g2})
        for_each_bit(g->non_isolated(), [&](int v) {
            if (g->degree(v) < min_deg)
                throw HypothesisError("min-degree", "vertex " + std::to_string(v) + " has degree " +
                                                        std::to_string(g->degree(v)) + " < " + std::to_string(min_deg));
        });
    auto check_link = [&](const Graph& g, const std::vector<Vertex>& s) {
        for (Vertex v : s)
            for (const Edge& e : g.edges())
                if (!h.contains(Triple(v, e.u, e.v)))
                    throw HypothesisError("link", "G is not contained in the link of " + std::to_string(v));
    };
    check_link(g1, s1);
    check_link(g2, s2);

    // Recipe: crosscut pair with |I| maximum, v* with all but one neighbour a leaf.
    const auto cr = crosscut_number(t);
    const auto wit = decomposition_witness(t, cr.best);
    const Vertex vstar = wit.vertex;
    const Mask lv = leaves(t);
    const Mask nonleaf = t.neighbors(vstar) & ~lv;
    const Vertex ustar = nonleaf ? lowest(nonleaf) : lowest(t.neighbors(vstar));
    const Mask nprime_pat = t.neighbors(vstar) & ~bit(ustar);
    const Mask in_set = vector_to_mask(cr.best.independent);
    const auto iprime = mask_to_vector(in_set & ~bit(vstar));
    const auto rest = mask_to_vector(t.vertex_mask() & ~in_set & ~nprime_pat);
    const Graph r_forest = Graph(k, cr.best.remainder);
    const Vertex vstar_img = lowest(m2 & ~m1);

    const auto s1_sorted = mask_to_vector(m1);
    for (Vertex ustar_img : mask_to_vector(v1 & v2)) {
        auto pool = mask_to_vector(v2 & ~bit(ustar_img));
        const int need = popcount(nprime_pat);
        if (static_cast<int>(pool.size()) < need) continue;
        std::vector<Vertex> img(idx(k), -1);
        img[idx(vstar)] = vstar_img;
        Mask nprime_img = 0;
        int j = 0;
        for_each_bit(nprime_pat, [&](int p) {
            img[idx(p)] = pool[idx(j)];
            nprime_img |= bit(pool[idx(j++)]);
        });
        for (std::size_t i = 0; i < iprime.size(); ++i) img[idx(iprime[i])] = s1_sorted[i];
        if (!embed_forest(r_forest, rest, ustar, ustar_img, g1, v1 & ~nprime_img, img)) continue;
        std::vector<Vertex> pre(t.edges().size(), -1);
        std::size_t spare = iprime.size();
        for (const Edge& e : cr.best.remainder) pre[idx(t.edge_index(e))] = s1_sorted[spare++];
        auto done = complete_partial_expansion(h, t, img, pre);
        if (done) return done;
    }
    // Below the 3k degree threshold the greedy recipe can get stuck; the
    // exact search still decides containment.
    return find_expansion(h, t);
}

// ---------------------------------------------------------------------------

CycleVariation vary_cycle_length(const TripleSystem& h, const std::vector<Vertex>& w, const std::vector<Vertex>& v,
                                 bool cycle) {
    const int t = static_cast<int>(v.size());
    if (t < (cycle ? 2 : 1)) throw HypothesisError("length", "witness needs t >= 2 (cycle) or t >= 1 (path)");
    if (static_cast<int>(w.size()) != (cycle ? t : t + 1))
        throw HypothesisError("length", "w must have t (cycle) or t+1 (path) vertices");
    Mask wm = 0, vm = 0;
    for (Vertex x : w) {
        if (x < 0 || x >= h.n() || ((wm >> x) & 1U)) throw HypothesisError("distinct", "w vertices must be distinct and in range");
        wm |= bit(x);
    }
    for (Vertex x : v) {
        if (x < 0 || x >= h.n() || (((vm | wm) >> x) & 1U))
            throw HypothesisError("distinct", "v vertices must be distinct, in range, and outside w");
        vm |= bit(x);
    }
    auto next_w = [&](int i) { return w[idx(cycle ? (i + 1) % t : i + 1)]; };
    const int bound = 6 * t + 6;
    for (int i = 0; i < t; ++i) {
        const Vertex a = w[idx(i)], b = next_w(i), c = v[idx(i)];
        if (!(h.shadow_neighbors(a) & bit(b))) throw HypothesisError("shadow-cycle", "consecutive w vertices must span a shadow pair");
        if (!h.contains(Triple(a, c, b))) throw HypothesisError("witness-triples", "{w_i, v_i, w_i+1} must be an edge");
        if (h.codegree(a, c) < bound || h.codegree(c, b) < bound)
            throw HypothesisError("codegree", "pairs w_i v_i and v_i w_i+1 need codegree >= " + std::to_string(bound));
    }
    CycleVariation out;
    for (int ell = t; ell <= 2 * t; ++ell) {
        if (cycle && ell < 3) {
            out.warnings.push_back("length " + std::to_string(ell) + " skipped: cycles need length >= 3");
            continue;
        }
        const int k = ell - t;
        std::vector<Vertex> seq;
        std::map<Edge, Vertex> pre;
        for (int i = 0; i < k; ++i) {
            seq.push_back(w[idx(i)]);
            seq.push_back(v[idx(i)]);
        }
        for (int i = k; i < static_cast<int>(w.size()); ++i) seq.push_back(w[idx(i)]);
        for (int i = k; i < t; ++i) pre[Edge(w[idx(i)], next_w(i))] = v[idx(i)];
        const Graph pattern = cycle ? cycle_graph(ell) : path_graph(ell);
        std::vector<Vertex> pre_vec(pattern.edges().size(), -1);
        for (std::size_t i = 0; i < pattern.edges().size(); ++i) {
            const Edge& pe = pattern.edges()[i];
            auto it = pre.find(Edge(seq[idx(pe.u)], seq[idx(pe.v)]));
            if (it != pre.end()) pre_vec[i] = it->second;
        }
        auto e = complete_partial_expansion(h, pattern, seq, pre_vec);
        if (!e) throw std::logic_error("cycle-length variation failed although the witness is valid");
        out.embeddings.emplace(ell, std::move(*e));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class RainbowSearch {
public:
    RainbowSearch(const Coloring& chi, const Graph& f, const Plan& plan, BudgetMeter& meter)
        : chi_(chi), f_(f), plan_(plan), meter_(meter), img_(idx(f.n()), -1), exp_(f.edges().size(), -1),
          color_used_(idx(chi.color_count), 0) {}

    void set_cutoff(const std::atomic<int>* cutoff, int index) {
        cutoff_ = cutoff;
        index_ = index;
    }

    std::optional<RainbowCertificate> run(Mask first_level) {
        first_level_ = first_level;
        if (f_.n() + f_.size() > chi_.n || f_.size() > chi_.color_count) return std::nullopt;
        core(0);
        return result_;
    }

private:
    bool stop() {
        if (cutoff_ && cutoff_->load(std::memory_order_relaxed) < index_) aborted_ = true;
        return aborted_;
    }

    bool finish() {
        RainbowCertificate c;
        c.embedding.pattern = f_;
        c.embedding.core_map = img_;
        c.embedding.expansion_map = exp_;
        auto extra = mask_to_vector(smallest_free(chi_.n, used_, plan_.isolated));
        for (int i = 0; i < plan_.isolated; ++i)
            c.embedding.core_map[idx(plan_.order[idx(plan_.core_count + i)])] = extra[idx(i)];
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            const Edge& pe = f_.edges()[i];
            c.colors.push_back(chi_.color_of(Triple(img_[idx(pe.u)], img_[idx(pe.v)], exp_[i])));
        }
        result_ = std::move(c);
        return true;
    }

    // Assigns expansion vertices to the edges completed at `pos`, then moves on.
    bool expand(int pos, std::size_t j) {
        const auto& done = plan_.completed[idx(pos)];
        if (j == done.size()) return core(pos + 1);
        const int e = done[j];
        const Edge& pe = f_.edges()[idx(e)];
        const Vertex a = img_[idx(pe.u)], b = img_[idx(pe.v)];
        Mask cand = low_mask(chi_.n) & ~used_;
        while (cand) {
            meter_.tick();
            const int x = lowest(cand);
            cand &= cand - 1;
            const int c = chi_.color_of(Triple(a, b, x));
            if (color_used_[idx(c)]) continue;
            color_used_[idx(c)] = 1;
            used_ |= bit(x);
            exp_[idx(e)] = x;
            if (expand(pos, j + 1)) return true;
            exp_[idx(e)] = -1;
            used_ &= ~bit(x);
            color_used_[idx(c)] = 0;
            if (stop()) return false;
        }
        return false;
    }

    bool core(int pos) {
        meter_.tick();
        if (stop()) return false;
        if (pos == plan_.core_count) return finish();
        const Vertex p = plan_.order[idx(pos)];
        Mask cand = low_mask(chi_.n) & ~used_;
        if (pos == 0) cand &= first_level_;
        while (cand) {
            const int x = lowest(cand);
            cand &= cand - 1;
            img_[idx(p)] = x;
            used_ |= bit(x);
            if (expand(pos, 0)) return true;
            used_ &= ~bit(x);
            img_[idx(p)] = -1;
            if (stop()) return false;
        }
        return false;
    }

    const Coloring& chi_;
    const Graph& f_;
    const Plan& plan_;
    BudgetMeter& meter_;
    std::vector<Vertex> img_;
    std::vector<Vertex> exp_;
    std::vector<char> color_used_;
    Mask used_ = 0;
    Mask first_level_ = ~Mask{0};
    const std::atomic<int>* cutoff_ = nullptr;
    int index_ = 0;
    bool aborted_ = false;
    std::optional<RainbowCertificate> result_;
};

}  // namespace

std::optional<RainbowCertificate> find_rainbow_expansion(const Coloring& chi, const Graph& f, const SearchOptions& opt) {
    if (f.empty()) throw InputError("pattern must have at least one edge");
    const Plan plan = make_plan(f, false);
    if (opt.workers <= 1) {
        BudgetMeter meter(opt.budget, "rainbow search");
        RainbowSearch s(chi, f, plan, meter);
        return s.run(~Mask{0});
    }
    std::atomic<std::int64_t> shared{0};
    return first_success<RainbowCertificate>(chi.n, opt.workers, !opt.deterministic,
                                             [&](int i, const std::atomic<int>* best) {
                                                 BudgetMeter meter(opt.budget, "rainbow search", &shared);
                                                 RainbowSearch s(chi, f, plan, meter);
                                                 s.set_cutoff(best, i);
                                                 return s.run(bit(i));
                                             });
}

}  // namespace trexp
