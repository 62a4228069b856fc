#include <filesystem>

#include "doctest.h"
#include "trexp/builders.hpp"
#include "trexp/cleaning.hpp"
#include "trexp/config.hpp"
#include "trexp/embed.hpp"
#include "trexp/io.hpp"

using namespace trexp;

TEST_CASE("edge list parsing") {
    const auto s = parse_structure("# a path\nkind=graph n=4\n0 1\n1 2 # middle\n\n2 3\n");
    const Graph* g = std::get_if<Graph>(&s);
    REQUIRE(g != nullptr);
    CHECK(*g == path_graph(3));
    const auto h = parse_structure("kind=3graph n=5\n0 1 2\n2 3 4\n");
    REQUIRE(std::holds_alternative<TripleSystem>(h));
    CHECK(std::get<TripleSystem>(h).size() == 2);
}

TEST_CASE("edge list errors") {
    CHECK_THROWS_AS(parse_structure("0 1\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=tree n=3\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=3\n0 3\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=3\n1 1\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=3\n0 1\n1 0\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=3\n0 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=3\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse_structure("kind=graph n=65\n"), InputError);
    CHECK_THROWS_AS(parse_structure("{\"kind\":\"graph\"}"), InputError);
    CHECK_THROWS_AS(read_structure("/nonexistent/file"), InputError);
}

TEST_CASE("structure round trips") {
    const Graph g = s_graph(9, 2, true);
    CHECK(std::get<Graph>(parse_structure(to_edgelist(g))) == g);
    CHECK(std::get<Graph>(parse_structure(dump(to_json(g)))) == g);
    CHECK(graph_from_json(to_json(g)) == g);
    const TripleSystem h = s_construction(7, 1);
    CHECK(std::get<TripleSystem>(parse_structure(to_edgelist(h))) == h);
    CHECK(triple_system_from_json(to_json(h)) == h);
}

TEST_CASE("colouring text") {
    const Coloring c = lower_bound_coloring(s_construction(5, 1));
    const Coloring back = parse_coloring(to_coloring_text(c));
    CHECK(back.n == 5);
    CHECK(back.colors == c.colors);
    CHECK(parse_coloring("0 1 2 0\n").n == 3);
}

TEST_CASE("colouring text errors") {
    CHECK_THROWS_AS(parse_coloring("0 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_coloring("0 1 3 0\n"), InputError);
    CHECK_THROWS_AS(parse_coloring("0 1 2 -1\n"), InputError);
}

TEST_CASE("embedding JSON round trip") {
    const auto e = find_expansion(s_construction(12, 2), path_graph(3));
    REQUIRE(e.has_value());
    const Embedding back = embedding_from_json(to_json(*e));
    CHECK(back.pattern == e->pattern);
    CHECK(back.core_map == e->core_map);
    CHECK(back.expansion_map == e->expansion_map);
    CHECK(validate_embedding(s_construction(12, 2), back));
}

TEST_CASE("cleaning trace JSON round trip") {
    const TripleSystem h(7, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4, 5}, {4, 5, 6}});
    const auto tr = cleaning_algorithm(h, 2, 1);
    const auto back = cleaning_trace_from_json(to_json(tr));
    CHECK(back.k == tr.k);
    CHECK(back.t == tr.t);
    CHECK(back.input == tr.input);
    CHECK(back.steps.size() == tr.steps.size());
    CHECK(dump(to_json(back)) == dump(to_json(tr)));
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "trexp_io_test";
    std::filesystem::remove_all(dir);
    const std::string path = (dir / "a" / "b.txt").string();
    write_file(path, "kind=graph n=2\n0 1\n");
    CHECK(read_graph(path).size() == 1);
    CHECK_THROWS_AS(read_triple_system(path), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run configuration") {
    RunConfig cfg;
    apply_config_text(cfg, "# comment\n[run]\nmax_nodes = 100\ntime_limit=2.5\nworkers=3\n"
                           "deterministic=false\nformat=\"csv\"\ncache_dir=/tmp/x\nseed=7\n");
    CHECK(cfg.budget.max_nodes == 100);
    CHECK(cfg.budget.time_limit_seconds == doctest::Approx(2.5));
    CHECK(cfg.workers == 3);
    CHECK_FALSE(cfg.deterministic);
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.cache_dir == "/tmp/x");
    CHECK(cfg.seed == 7);
    CHECK_THROWS_AS(apply_config_text(cfg, "colour=red\n"), InputError);
    CHECK_THROWS_AS(apply_config_text(cfg, "workers=0\n"), InputError);
    CHECK_THROWS_AS(apply_config_text(cfg, "workers\n"), InputError);
    CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("suite CSV") {
    SuiteReport r;
    r.suite = "x";
    r.checks.push_back({"a", CheckStatus::Pass, "ok, fine"});
    const std::string csv = to_csv(r);
    CHECK(csv.find("\"ok, fine\"") != std::string::npos);
}
