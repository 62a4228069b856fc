// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "trexp/builders.hpp"
#include "trexp/canon.hpp"
#include "trexp/cleaning.hpp"
#include "trexp/embed.hpp"
#include "trexp/extremal.hpp"
#include "trexp/io.hpp"
#include "trexp/structure.hpp"
#include "trexp/tree.hpp"

using namespace trexp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        o.pass = false;
        o.detail += " [time limit " + std::to_string(static_cast<int>(limit_seconds)) + "s exceeded]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
}

void info(const std::string& text) {
    std::printf("      info: %s\n", text.c_str());
    std::fflush(stdout);
}

std::string key(const Graph& g) { return canonical_form(g).key; }

SearchOptions decision() {
    SearchOptions s;
    s.deterministic = false;
    s.pattern_symmetry = true;
    return s;
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

std::vector<Graph> pattern_corpus() {
    return {path_graph(1),
            path_graph(2),
            path_graph(3),
            star_graph(3),
            cycle_graph(3),
            Graph(4, {{0, 1}, {2, 3}}),
            Graph(4, {{0, 1}, {1, 2}}),
            cycle_graph(4),
            Graph(5, {{0, 1}, {1, 2}, {3, 4}}),
            paw()};
}

}  // namespace

int main() {
    run(1, 1.0, [] {
        Outcome o;
        int checked = 0;
        for (int t = 0; t <= 5; ++t)
            for (int n = t; n <= 40; ++n) {
                const std::int64_t expect = binom(n, 3) - binom(n - t, 3);
                ++checked;
                if (s_size(n, t) != expect || s_construction(n, t).size() != expect) {
                    o.pass = false;
                    o.detail += " n=" + std::to_string(n) + ",t=" + std::to_string(t);
                }
            }
        o.detail = std::to_string(checked) + " (n,t) pairs" + o.detail;
        return o;
    });

    run(2, 300.0, [] {
        Outcome o;
        int trees = 0, hosts = 0, tau_eq = 0;
        std::string bad, bad_tau_eq;
        for (int k = 2; k <= 8; ++k)
            for (const Graph& t : enumerate_trees(k)) {
                ++trees;
                const int sigma = crosscut_value(t);
                const bool eq = covering_number(t) == sigma;
                tau_eq += eq ? 1 : 0;
                for (int n = sigma - 1; n <= 14; ++n) {
                    ++hosts;
                    if (find_expansion(s_construction(n, sigma - 1), t, decision())) {
                        bad += " " + key(t) + "@n=" + std::to_string(n);
                        if (eq) bad_tau_eq += " " + key(t) + "@n=" + std::to_string(n);
                        break;
                    }
                }
            }
        o.pass = bad.empty();
        o.detail = std::to_string(trees) + " trees, " + std::to_string(hosts) + " hosts";
        if (!o.pass) o.detail += "; S(n,sigma-1) contains T^3 for:" + bad;
        info("trees with tau = sigma: " + std::to_string(tau_eq) + ", containments among them: " +
             (bad_tau_eq.empty() ? "none" : bad_tau_eq));
        return o;
    });

    run(3, 1.0, [] {
        Outcome o;
        for (int k = 3; k <= 12; ++k) {
            const int s = crosscut_number(cycle_graph(k)).sigma;
            if (s != (k + 1) / 2 || s != oracle::sigma(cycle_graph(k))) {
                o.pass = false;
                o.detail += " C" + std::to_string(k) + "->" + std::to_string(s);
            }
        }
        if (o.pass) o.detail = "C3..C12";
        return o;
    });

    run(4, 1.0, [] {
        Outcome o;
        auto oracle_critical = [](const Graph& t) {
            int c = 0;
            const int s = oracle::sigma(t);
            for (const Edge& e : t.edges()) c += oracle::sigma(t.without_edge(e)) <= s - 1 ? 1 : 0;
            return c;
        };
        for (int len : {3, 5, 7}) {
            const auto p = analyze_tree(path_graph(len));
            const bool ok = p.strongly_edge_critical && oracle_critical(path_graph(len)) > 0;
            if (!ok) o.pass = false;
            o.detail += " P" + std::to_string(len) + (ok ? ":critical" : ":NOT-critical");
        }
        for (int len : {4, 6}) {
            const auto p = analyze_tree(path_graph(len));
            const bool ok = p.critical_edges.empty() && oracle_critical(path_graph(len)) == 0;
            if (!ok) o.pass = false;
            o.detail += " P" + std::to_string(len) + (ok ? ":no-critical-edge" : ":HAS-critical-edge");
        }
        return o;
    });

    run(5, 120.0, [] {
        Outcome o;
        int applicable = 0;
        for (int k = 1; k <= 9; ++k)
            for (const Graph& t : enumerate_trees(k)) {
                const int s = oracle::sigma(t);
                const int ti = oracle::tau_ind(t);
                bool has_critical = false;
                for (const Edge& e : t.edges()) has_critical = has_critical || oracle::sigma(t.without_edge(e)) <= s - 1;
                const auto w = pendant_critical_edge(t);
                if (s != ti || !has_critical) {
                    if (w) {
                        o.pass = false;
                        o.detail += " unexpected:" + key(t);
                    }
                    continue;
                }
                ++applicable;
                bool ok = w.has_value();
                if (ok) {
                    const Mask cover = vector_to_mask(w->cover);
                    ok = t.degree(w->leaf) == 1 && w->edge.contains(w->leaf) && t.has_edge(w->edge) &&
                         oracle::sigma(t.without_edge(w->edge)) <= s - 1 && ((cover >> w->leaf) & 1U) &&
                         oracle::missed(t, cover) == 0 && oracle::independent(t, cover) &&
                         static_cast<int>(w->cover.size()) == ti;
                }
                if (!ok) {
                    o.pass = false;
                    o.detail += " " + key(t);
                }
            }
        o.detail = std::to_string(applicable) + " trees meet the hypotheses" + o.detail;
        return o;
    });

    run(6, 120.0, [] {
        Outcome o;
        int pairs = 0;
        for (int k = 2; k <= 9; ++k)
            for (const Graph& t : enumerate_trees(k)) {
                bool overflow = false;
                const auto all = crosscut_pairs(t, kDefaultPairCap, &overflow);
                const auto expect = oracle::sigma_sets(t);
                if (overflow || all.size() != expect.size()) {
                    o.pass = false;
                    o.detail += " pair-count:" + key(t);
                    continue;
                }
                std::size_t max_i = 0;
                for (const auto& p : all) max_i = std::max(max_i, p.independent.size());
                const Mask lv = leaves(t);
                for (std::size_t i = 0; i < all.size(); ++i) {
                    ++pairs;
                    const auto& p = all[i];
                    bool ok = p.independent == expect[i];
                    try {
                        const auto w = decomposition_witness(t, p);
                        if (w.kind == WitnessKind::LeafNeighborVertex) {
                            const bool in_i = std::find(p.independent.begin(), p.independent.end(), w.vertex) !=
                                              p.independent.end();
                            ok = ok && in_i && popcount(t.neighbors(w.vertex) & ~lv) <= 1;
                        } else {
                            const bool in_r = std::find(p.remainder.begin(), p.remainder.end(), w.edge) != p.remainder.end();
                            ok = ok && in_r && (t.degree(w.edge.u) == 1 || t.degree(w.edge.v) == 1);
                            ok = ok && p.independent.size() != max_i;
                        }
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    if (!ok) {
                        o.pass = false;
                        o.detail += " " + key(t);
                    }
                }
            }
        o.detail = std::to_string(pairs) + " crosscut pairs" + o.detail;
        return o;
    });

    run(7, 60.0, [] {
        const auto rep = verify_theorem_suite("facts", 6);
        Outcome o{rep.passed(), ""};
        for (const auto& c : rep.checks) o.detail += " " + c.name.substr(6) + "[" + c.detail + "]";
        return o;
    });

    const auto corpus = [] {
        auto c = oracle::cleaning_corpus();
        for (int k : {3, 4}) c.push_back({s_construction(12, 1), k, 1});
        return c;
    }();

    run(8, 60.0, [&] {
        Outcome o;
        int steps = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& in = corpus[i];
            const auto tr = cleaning_algorithm(in.h, in.k, in.t);
            steps += tr.q();
            bool ok = tr.superfull.value_or(false) && is_superfull(tr.final_system, in.t, 3 * in.k);
            const std::string text = dump(to_json(tr));
            ok = ok && dump(to_json(cleaning_algorithm(in.h, in.k, in.t))) == text;
            ok = ok && dump(to_json(cleaning_trace_from_json(Json::parse(text)))) == text;
            ok = ok && replay(tr, tr.q()) == tr.final_system && replay(tr, 0) == tr.h0;
            for (int s = 0; ok && s < tr.q(); ++s) {
                const auto hi = replay(tr, s);
                const auto hn = replay(tr, s + 1);
                const auto& st = tr.steps[static_cast<std::size_t>(s)];
                ok = hi.size() - hn.size() == static_cast<int>(st.removed.size()) &&
                     pair_type(hi, st.pair, in.k, in.t) == st.type;
            }
            if (!ok) {
                o.pass = false;
                o.detail += " #" + std::to_string(i);
            }
        }
        o.detail = std::to_string(corpus.size()) + " traces, " + std::to_string(steps) + " steps" + o.detail;
        return o;
    });

    run(9, 60.0, [&] {
        Outcome o;
        int checks = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& h = corpus[i].h;
            const int shadow_size = shadow(h).size();
            for (int d = 1; d <= 3; ++d) {
                const auto out = extract_d_full(h, d);
                ++checks;
                const bool sub = std::all_of(out.edges().begin(), out.edges().end(), [&](const Triple& e) { return h.contains(e); });
                if (!sub || !is_d_full(out, d + 1) || out.size() < h.size() - d * shadow_size) {
                    o.pass = false;
                    o.detail += " full#" + std::to_string(i) + "/d=" + std::to_string(d);
                }
            }
            for (int r = 1; r <= 2; ++r) {
                const auto out = extract_linear_subgraph(h, r);
                ++checks;
                const bool bound = 3.0 * max_i_degree(h, r) * out.size() >= h.size();
                if (max_i_degree(out, r) > 1 || !bound) {
                    o.pass = false;
                    o.detail += " linear#" + std::to_string(i) + "/i=" + std::to_string(r);
                }
            }
        }
        o.detail = std::to_string(checks) + " extractions" + o.detail;
        return o;
    });

    run(10, 600.0, [] {
        Outcome o;
        const auto patterns = pattern_corpus();
        std::int64_t hyper = 0, graphs = 0, positives = 0;
        auto compare = [&](const auto& host, bool expect, const std::optional<Embedding>& got, const Graph& f,
                           const std::string& what) {
            if (got.has_value() != expect || (got && !validate_embedding(host, *got)) || (got && !(got->pattern == f))) {
                o.pass = false;
                if (o.detail.size() < 400) o.detail += " " + what + ":" + key(f);
            }
            positives += expect ? 1 : 0;
        };
        for (int n = 1; n <= 6; ++n) {
            OrderlyGenerator gen(n, 3);
            gen.enumerate([&](std::uint64_t code, int) {
                std::vector<Triple> es;
                for_each_bit(code, [&](int p) {
                    auto v = mask_to_vector(gen.subset(p));
                    es.emplace_back(v[0], v[1], v[2]);
                });
                const TripleSystem h(n, es);
                ++hyper;
                for (const Graph& f : patterns) compare(h, oracle::expansion_in(h, f), find_expansion(h, f), f, "3graph");
                return true;
            });
        }
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> pd(0.05, 0.6);
        for (int i = 0; i < 400; ++i) {
            const TripleSystem h = oracle::random_system(rng, 7, pd(rng));
            ++hyper;
            for (const Graph& f : patterns) {
                const bool expect = oracle::expansion_in(h, f);
                compare(h, expect, find_expansion(h, f), f, "3graph7");
                if (find_expansion_reference(h, f).has_value() != expect) {
                    o.pass = false;
                    o.detail += " reference:" + key(f);
                }
            }
        }
        for (int n = 1; n <= 8; ++n) {
            OrderlyGenerator gen(n, 2);
            gen.enumerate([&](std::uint64_t code, int) {
                const Graph g = graph_from_code(gen, code);
                ++graphs;
                for (const Graph& f : patterns) compare(g, oracle::blowup_in(g, f), find_blowup(g, f), f, "graph");
                return true;
            });
        }
        o.detail = std::to_string(hyper) + " 3-graph hosts, " + std::to_string(graphs) + " graph hosts, " +
                   std::to_string(patterns.size()) + " patterns, " + std::to_string(positives) + " positive pairs" +
                   o.detail;
        return o;
    });

    run(11, 60.0, [] {
        Outcome o;
        const Graph p2 = path_graph(2);
        for (auto [n, expect] : {std::pair{4, 4}, std::pair{5, 4}}) {
            const int naive = oracle::turan_hypergraph(n, p2);
            const auto r = exact_turan_hypergraph(n, p2);
            const bool ok = naive == expect && r.value == expect;
            if (!ok) o.pass = false;
            o.detail += " ex(" + std::to_string(n) + ",P2^3): oracle=" + std::to_string(naive) +
                        " search=" + std::to_string(r.value.value_or(-1));
        }
        return o;
    });

    run(12, 600.0, [] {
        Outcome o;
        int sizes = 0;
        for (int t = 0; t <= 3; ++t)
            for (int n = t; n <= 30; ++n)
                for (bool plus : {false, true}) {
                    if (plus && (n - t) / 2 < 2) continue;
                    const std::int64_t m = n - t, lo = m / 2, hi = m - lo;
                    std::int64_t formula = binom(t, 3) + binom(t, 2) * m + t * lo * hi;
                    if (plus) formula += t + hi;
                    ++sizes;
                    if (sbi_size(n, t, plus) != formula || oracle::sbi_triangles(n, t, plus) != formula ||
                        count_triangles(s_graph(n, t, plus)) != formula) {
                        o.pass = false;
                        o.detail += " size n=" + std::to_string(n) + ",t=" + std::to_string(t) + (plus ? "+" : "");
                    }
                }
        struct Case {
            std::string name;
            Graph f;
            int t;
            bool plus;
        };
        std::vector<Case> cases;
        for (int t = 1; t <= 3; ++t) {
            cases.push_back({"P" + std::to_string(2 * t + 1), path_graph(2 * t + 1), t, false});
            cases.push_back({"P" + std::to_string(2 * t + 2), path_graph(2 * t + 2), t, true});
        }
        for (int k = 5; k <= 8; ++k) cases.push_back({"C" + std::to_string(k), cycle_graph(k), (k - 1) / 2, k % 2 == 0});
        int hosts = 0;
        for (const auto& c : cases)
            for (int n = c.t; n <= 12; ++n) {
                if (c.plus && (n - c.t) / 2 < 2) continue;
                ++hosts;
                if (find_blowup(s_graph(n, c.t, c.plus), c.f, decision())) {
                    o.pass = false;
                    o.detail += " " + c.name + "^tri in n=" + std::to_string(n);
                }
            }
        o.detail = std::to_string(sizes) + " closed-form sizes, " + std::to_string(hosts) + " freeness hosts" + o.detail;
        return o;
    });

    run(13, 600.0, [] {
        Outcome o;
        const Graph p3 = path_graph(3);
        const int sigma = crosscut_value(p3);
        const std::int64_t target = binom(8, 3) - binom(7, 3) + 2;
        const Coloring chi = lower_bound_coloring(s_construction(8, sigma - 1));
        for (const Graph& f : augmentation_shapes(p3)) {
            if (f.n() > 8) continue;
            const auto rainbow = find_rainbow_expansion(chi, f);
            const auto rep = anti_ramsey_bounds(8, p3, f);
            const bool ok = !rainbow && rep.lower == target && rep.upper_formula == target;
            if (!ok) o.pass = false;
            o.detail += " [" + key(f) + ": rainbow=" + (rainbow ? "yes" : "no") + " lower=" + std::to_string(rep.lower) +
                        " upper=" + std::to_string(rep.upper_formula) + "]";
        }
        return o;
    });

    run(14, 600.0, [] {
        Outcome o;
        ExtremalOptions opt;
        opt.budget.max_nodes = 5'000'000;
        int reports = 0;
        for (const Graph& t : {path_graph(2), path_graph(3), star_graph(3)})
            for (int n = 4; n <= 7; ++n) {
                try {
                    const auto r = exact_turan_hypergraph(n, t, opt);
                    ++reports;
                    info("ex(" + std::to_string(n) + ", " + key(t) + "^3) = " + std::to_string(*r.value) + ", " + r.construction +
                         " has " + std::to_string(*r.construction_value) +
                         (*r.matches_construction ? "" : " (below asymptotic threshold)"));
                    if (!r.construction_free.value_or(false)) o.pass = false;
                } catch (const ResourceError& e) {
                    info("ex(" + std::to_string(n) + ", " + key(t) + "^3): " + e.what());
                }
            }
        for (const Graph& f : {path_graph(3), path_graph(4), cycle_graph(5)})
            for (int n = 4; n <= 7; ++n) {
                try {
                    const auto r = exact_generalized_turan(n, f, opt);
                    ++reports;
                    info("ex(" + std::to_string(n) + ", K3, " + key(f) + "^tri) = " + std::to_string(*r.value) + ", " +
                         r.construction + " has " + std::to_string(*r.construction_value) +
                         (*r.matches_construction ? "" : " (below asymptotic threshold)"));
                    if (!r.construction_free.value_or(false)) o.pass = false;
                } catch (const ResourceError& e) {
                    info("ex(" + std::to_string(n) + ", K3, " + key(f) + "^tri): " + e.what());
                }
            }
        o.detail = std::to_string(reports) + " informational brute-force reports; constructions verified free";
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
