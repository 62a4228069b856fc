#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trexp/canon.hpp"
#include "trexp/cleaning.hpp"
#include "trexp/config.hpp"
#include "trexp/embed.hpp"
#include "trexp/extremal.hpp"
#include "trexp/io.hpp"
#include "trexp/tree.hpp"

using namespace trexp;

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 3;
constexpr int kUsage = 2;
constexpr int kResource = 4;
constexpr int kInput = 5;

struct Globals {
    std::string config_path;
    std::optional<int> workers;
    std::optional<bool> deterministic;
    std::optional<std::int64_t> max_nodes;
    std::optional<double> time_limit;
    std::optional<std::string> format;
    std::optional<std::string> cache_dir;
    std::optional<std::uint64_t> seed;
    std::string out;
};

RunConfig resolve(const Globals& g) {
    RunConfig cfg;
    if (!g.config_path.empty()) apply_config_file(cfg, g.config_path);
    apply_environment(cfg);
    if (g.workers) apply_config_value(cfg, "workers", std::to_string(*g.workers));
    if (g.deterministic) cfg.deterministic = *g.deterministic;
    if (g.max_nodes) apply_config_value(cfg, "max_nodes", std::to_string(*g.max_nodes));
    if (g.time_limit) apply_config_value(cfg, "time_limit", std::to_string(*g.time_limit));
    if (g.format) cfg.format = parse_format(*g.format);
    if (g.cache_dir) cfg.cache_dir = *g.cache_dir;
    if (g.seed) cfg.seed = *g.seed;
    return cfg;
}

SearchOptions search_options(const RunConfig& cfg) {
    SearchOptions s;
    s.deterministic = cfg.deterministic;
    s.workers = cfg.workers;
    s.budget = cfg.budget;
    return s;
}

ExtremalOptions extremal_options(const RunConfig& cfg) {
    ExtremalOptions e;
    e.budget = cfg.budget;
    e.workers = cfg.workers;
    return e;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty())
        std::cout << text;
    else
        write_file(g.out, text);
}

void emit_json(const Globals& g, const Json& j) { emit(g, dump(j)); }

void emit_structure(const Globals& g, const RunConfig& cfg, const Structure& s) {
    const bool json = cfg.format == OutputFormat::Json;
    std::visit([&](const auto& x) { emit(g, json ? dump(to_json(x)) : to_edgelist(x)); }, s);
}

std::string hex(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crosscut, expansion and extremal search toolkit for 3-graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "key=value config file")->check(CLI::ExistingFile);
    app.add_option("--workers", g.workers, "worker threads (>= 1)");
    app.add_option("--deterministic", g.deterministic, "canonical certificate selection (true|false)");
    app.add_option("--max-nodes", g.max_nodes, "search node budget (0 = unlimited)");
    app.add_option("--time-limit", g.time_limit, "wall-clock budget in seconds (0 = unlimited)");
    app.add_option("--format", g.format, "json|csv|edgelist");
    app.add_option("--cache-dir", g.cache_dir, "result cache directory");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--out", g.out, "write the result here instead of stdout");

    std::function<int(const RunConfig&)> action;

    // tree
    auto* tree = app.add_subcommand("tree", "tree invariants");
    tree->require_subcommand(1);
    std::string tree_file;
    auto* tree_stats = tree->add_subcommand("stats", "print the TreeProfile of a tree");
    tree_stats->add_option("file", tree_file, "tree edge list")->required();
    std::size_t pair_cap = kDefaultPairCap;
    tree_stats->add_option("--pair-cap", pair_cap, "maximum number of crosscut pairs listed");
    tree_stats->callback([&] {
        action = [&](const RunConfig&) {
            emit_json(g, to_json(analyze_tree(read_graph(tree_file), pair_cap)));
            return kFound;
        };
    });
    int enum_n = 0;
    std::string enum_dir;
    auto* tree_enum = tree->add_subcommand("enum", "write all trees on n vertices");
    tree_enum->add_option("--n", enum_n, "vertex count (1..10)")->required();
    tree_enum->add_option("--dir", enum_dir, "output directory")->required();
    tree_enum->callback([&] {
        action = [&](const RunConfig&) {
            const auto trees = enumerate_trees(enum_n);
            Json files = Json::array();
            for (std::size_t i = 0; i < trees.size(); ++i) {
                const std::string path = (std::filesystem::path(enum_dir) / ("tree_" + std::to_string(i) + ".edges")).string();
                write_file(path, to_edgelist(trees[i]));
                files.push_back(path);
            }
            emit_json(g, Json{{"n", enum_n}, {"count", trees.size()}, {"files", files}});
            return kFound;
        };
    });

    // construct
    auto* construct = app.add_subcommand("construct", "build constructions");
    std::string ckind, cin;
    int cn = 0, ct = 0;
    construct->add_option("kind", ckind, "s|sbi|sbi-plus|expansion|blowup|kg|coloring")
        ->required()
        ->check(CLI::IsMember({"s", "sbi", "sbi-plus", "expansion", "blowup", "kg", "coloring"}));
    construct->add_option("--n", cn, "vertex count");
    construct->add_option("--t", ct, "apex size");
    construct->add_option("--in", cin, "input edge list");
    construct->callback([&] {
        action = [&](const RunConfig& cfg) {
            auto need_in = [&] {
                if (cin.empty()) throw InputError("construct " + ckind + " needs --in");
            };
            if (ckind == "s") {
                emit_structure(g, cfg, s_construction(cn, ct));
            } else if (ckind == "sbi" || ckind == "sbi-plus") {
                emit_structure(g, cfg, s_graph(cn, ct, ckind == "sbi-plus"));
            } else if (ckind == "expansion") {
                need_in();
                emit_structure(g, cfg, expansion(read_graph(cin)));
            } else if (ckind == "blowup") {
                need_in();
                emit_structure(g, cfg, triangle_blowup(read_graph(cin)));
            } else if (ckind == "kg") {
                need_in();
                emit_structure(g, cfg, triangle_system(read_graph(cin)));
            } else {
                need_in();
                emit(g, to_coloring_text(lower_bound_coloring(read_triple_system(cin))));
            }
            return kFound;
        };
    });

    // contains
    auto* contains = app.add_subcommand("contains", "decide containment of F^3 or F^triangle");
    std::string pkind = "expansion", pattern_file, host_file, cert_file;
    contains->add_option("--pattern-kind", pkind, "expansion|blowup")->check(CLI::IsMember({"expansion", "blowup"}));
    contains->add_option("--pattern", pattern_file, "pattern graph")->required();
    contains->add_option("--host", host_file, "host 3-graph (expansion) or graph (blowup)")->required();
    contains->add_option("--certificate", cert_file, "write the embedding JSON here");
    contains->callback([&] {
        action = [&](const RunConfig& cfg) {
            const Graph f = read_graph(pattern_file);
            std::optional<Embedding> e;
            if (pkind == "expansion") {
                auto host = read_structure(host_file);
                if (auto* h = std::get_if<TripleSystem>(&host))
                    e = find_expansion(*h, f, search_options(cfg));
                else
                    e = find_expansion(triangle_system(std::get<Graph>(host)), f, search_options(cfg));
            } else {
                e = find_blowup(read_graph(host_file), f, search_options(cfg));
            }
            Json j{{"found", e.has_value()}, {"embedding", e ? to_json(*e) : Json(nullptr)}};
            if (e && !cert_file.empty()) write_file(cert_file, dump(to_json(*e)));
            emit_json(g, j);
            return e ? kFound : kNotFound;
        };
    });

    // rainbow
    auto* rainbow = app.add_subcommand("rainbow", "search a rainbow F^3 in a colouring of K_n^3");
    std::string coloring_file;
    rainbow->add_option("--coloring", coloring_file, "colouring file (u v w c lines)")->required();
    rainbow->add_option("--pattern", pattern_file, "pattern graph")->required();
    rainbow->add_option("--certificate", cert_file, "write the certificate JSON here");
    rainbow->callback([&] {
        action = [&](const RunConfig& cfg) {
            auto c = find_rainbow_expansion(read_coloring(coloring_file), read_graph(pattern_file), search_options(cfg));
            if (c && !cert_file.empty()) write_file(cert_file, dump(to_json(*c)));
            emit_json(g, Json{{"found", c.has_value()}, {"certificate", c ? to_json(*c) : Json(nullptr)}});
            return c ? kFound : kNotFound;
        };
    });

    // clean
    auto* clean = app.add_subcommand("clean", "run the cleaning process");
    int ck = 0, ctt = 0;
    std::string trace_file;
    clean->add_option("--k", ck, "k")->required();
    clean->add_option("--t", ctt, "t")->required();
    clean->add_option("--in", cin, "input 3-graph")->required();
    clean->add_option("--trace", trace_file, "write the full trace JSON here");
    clean->callback([&] {
        action = [&](const RunConfig&) {
            auto tr = cleaning_algorithm(read_triple_system(cin), ck, ctt);
            Json full = to_json(tr);
            if (!trace_file.empty()) {
                write_file(trace_file, dump(full));
                emit_json(g, Json{{"q", tr.q()},
                                  {"finalSize", tr.final_system.size()},
                                  {"superfull", tr.superfull ? Json(*tr.superfull) : Json(nullptr)},
                                  {"trace", trace_file}});
            } else {
                emit_json(g, full);
            }
            return kFound;
        };
    });

    // fullness
    auto* fullness = app.add_subcommand("fullness", "embed all k-edge trees (and C_k) in a 3k-full 3-graph");
    fullness->add_option("--k", ck, "k (1..9)")->required();
    fullness->add_option("--in", cin, "input 3-graph")->required();
    fullness->callback([&] {
        action = [&](const RunConfig& cfg) {
            auto rep = fullness_embedding_check(read_triple_system(cin), ck, search_options(cfg));
            emit_json(g, to_json(rep));
            return rep.all_found() ? kFound : kNotFound;
        };
    });

    // turan
    auto* turan = app.add_subcommand("turan", "exact small Turan numbers");
    std::string mode = "hypergraph";
    int tn = 0;
    bool exhaustive = false, lower_only = false;
    turan->add_option("--mode", mode, "hypergraph|triangles")->check(CLI::IsMember({"hypergraph", "triangles"}));
    turan->add_option("--n", tn, "vertex count")->required();
    turan->add_option("--pattern", pattern_file, "pattern graph")->required();
    auto* ex_flag = turan->add_flag("--exhaustive", exhaustive, "exact branch and bound (default)");
    turan->add_flag("--lower-only", lower_only, "only evaluate the construction")->excludes(ex_flag);
    turan->callback([&] {
        action = [&](const RunConfig& cfg) {
            const Graph f = read_graph(pattern_file);
            ExtremalOptions opt = extremal_options(cfg);
            opt.exhaustive = !lower_only;
            std::string cache_path;
            if (!cfg.cache_dir.empty()) {
                const std::string key = mode + "|" + std::to_string(tn) + "|" + canonical_form(f).key + "|" +
                                        (opt.exhaustive ? "exact" : "lower");
                cache_path = (std::filesystem::path(cfg.cache_dir) / ("turan-" + hex(stable_hash(key)) + ".json")).string();
                if (cfg.format == OutputFormat::Json && std::filesystem::exists(cache_path)) {
                    emit(g, read_file(cache_path));
                    return kFound;
                }
            }
            auto r = mode == "hypergraph" ? exact_turan_hypergraph(tn, f, opt) : exact_generalized_turan(tn, f, opt);
            const std::string text = dump(to_json(r));
            if (!cache_path.empty()) write_file(cache_path, text);
            emit(g, cfg.format == OutputFormat::Csv ? to_csv(r) : text);
            return kFound;
        };
    });

    // closeness
    auto* closeness = app.add_subcommand("closeness", "find a t-set witnessing delta-closeness");
    std::string kind = "graph";
    double delta = 0.1;
    closeness->add_option("--kind", kind, "graph|3graph")->check(CLI::IsMember({"graph", "3graph"}));
    closeness->add_option("--t", ctt, "size of L")->required();
    closeness->add_option("--delta", delta, "delta in (0, 1/2)")->required();
    closeness->add_option("--in", cin, "input structure")->required();
    closeness->callback([&] {
        action = [&](const RunConfig& cfg) {
            std::optional<ClosenessReport> rep;
            if (kind == "graph")
                rep = graph_closeness(read_graph(cin), ctt, delta, cfg.workers, cfg.budget);
            else
                rep = hypergraph_closeness(read_triple_system(cin), ctt, delta, cfg.budget);
            emit_json(g, Json{{"close", rep.has_value()}, {"report", rep ? to_json(*rep) : Json(nullptr)}});
            return rep ? kFound : kNotFound;
        };
    });

    // anti-ramsey
    auto* ar = app.add_subcommand("anti-ramsey", "anti-Ramsey bounds for an augmented tree");
    std::string tree_in, aug_in;
    int arn = 0;
    ar->add_option("--tree", tree_in, "tree T")->required();
    ar->add_option("--aug", aug_in, "augmentation F = T + e")->required();
    ar->add_option("--n", arn, "vertex count")->required();
    std::string coloring_out;
    ar->add_option("--coloring-out", coloring_out, "write the lower-bound colouring here");
    ar->callback([&] {
        action = [&](const RunConfig& cfg) {
            auto rep = anti_ramsey_bounds(arn, read_graph(tree_in), read_graph(aug_in), search_options(cfg));
            if (!coloring_out.empty()) write_file(coloring_out, to_coloring_text(rep.coloring));
            emit_json(g, to_json(rep));
            return kFound;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem-check suite");
    std::string suite;
    int max_n = 6;
    verify->add_option("--suite", suite, "trees|odd-paths|even-paths|cycles|facts")->required();
    verify->add_option("--max-n", max_n, "size bound");
    verify->callback([&] {
        action = [&](const RunConfig& cfg) {
            auto rep = verify_theorem_suite(suite, max_n, extremal_options(cfg));
            emit(g, cfg.format == OutputFormat::Csv ? to_csv(rep) : dump(to_json(rep)));
            return rep.passed() ? kFound : kNotFound;
        };
    });

    // check
    auto* check = app.add_subcommand("check", "replay and validate an emitted certificate");
    std::string cert_kind, cert_in;
    check->add_option("kind", cert_kind, "embedding|rainbow|trace")
        ->required()
        ->check(CLI::IsMember({"embedding", "rainbow", "trace"}));
    check->add_option("--cert", cert_in, "certificate JSON")->required();
    check->add_option("--host", host_file, "host structure (embedding)");
    check->add_option("--coloring", coloring_file, "colouring file (rainbow)");
    check->callback([&] {
        action = [&](const RunConfig&) {
            Json j;
            try {
                j = Json::parse(read_file(cert_in));
            } catch (const Json::exception& e) {
                throw InputError(std::string("invalid certificate JSON: ") + e.what());
            }
            bool ok = false;
            std::string reason;
            if (cert_kind == "embedding") {
                if (host_file.empty()) throw InputError("check embedding needs --host");
                const Embedding e = embedding_from_json(j);
                auto host = read_structure(host_file);
                ok = std::visit([&](const auto& h) { return validate_embedding(h, e); }, host);
            } else if (cert_kind == "rainbow") {
                if (coloring_file.empty()) throw InputError("check rainbow needs --coloring");
                const Coloring chi = read_coloring(coloring_file);
                const Embedding e = embedding_from_json(j);
                ok = validate_embedding(complete_triple_system(chi.n), e);
                std::set<int> colors;
                const auto& es = e.pattern.edges();
                for (std::size_t i = 0; ok && i < es.size(); ++i)
                    colors.insert(chi.color_of(Triple(e.core_map[static_cast<std::size_t>(es[i].u)],
                                                      e.core_map[static_cast<std::size_t>(es[i].v)], e.expansion_map[i])));
                ok = ok && colors.size() == es.size();
            } else {
                const CleaningTrace tr = cleaning_trace_from_json(j);
                const CleaningTrace again = cleaning_algorithm(tr.input, tr.k, tr.t);
                ok = dump(to_json(again)) == dump(j);
                if (!ok) reason = "trace differs from a fresh run";
                for (int i = 0; ok && i < tr.q(); ++i) {
                    const TripleSystem hi = replay(tr, i);
                    std::vector<Triple> through;
                    const Edge p = tr.steps[static_cast<std::size_t>(i)].pair;
                    for (const Triple& e : hi.edges())
                        if (e.contains(p)) through.push_back(e);
                    ok = through == tr.steps[static_cast<std::size_t>(i)].removed &&
                         pair_type(hi, p, tr.k, tr.t) == tr.steps[static_cast<std::size_t>(i)].type;
                    if (!ok) reason = "step " + std::to_string(i) + " does not replay";
                }
                if (ok && !(replay(tr, tr.q()) == tr.final_system)) {
                    ok = false;
                    reason = "final system does not replay";
                }
            }
            emit_json(g, Json{{"kind", cert_kind}, {"valid", ok}, {"reason", reason}});
            return ok ? kFound : kNotFound;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    try {
        const RunConfig cfg = resolve(g);
        return action(cfg);
    } catch (const ResourceError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return kResource;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis '" << e.hypothesis() << "' failed: " << e.what() << "\n";
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
}
