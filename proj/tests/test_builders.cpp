#include "doctest.h"
#include "oracles.hpp"
#include "trexp/builders.hpp"
#include "trexp/embed.hpp"
#include "trexp/structure.hpp"

using namespace trexp;

TEST_CASE("expansion of a graph") {
    const Graph p3 = path_graph(3);
    const TripleSystem e = expansion(p3);
    CHECK(e.n() == 7);
    CHECK(e.size() == 3);
    CHECK(e.contains(Triple(0, 1, 4)));
    CHECK(e.contains(Triple(1, 2, 5)));
    CHECK(e.contains(Triple(2, 3, 6)));
    CHECK(expansion_vertex(p3, 2) == 6);
    CHECK_THROWS_AS(expansion(Graph(3)), InputError);
}

TEST_CASE("triangle blowup and triangle system") {
    const Graph b = triangle_blowup(path_graph(2));
    CHECK(b.n() == 5);
    CHECK(b.size() == 6);
    CHECK(oracle::triangles(b) == 2);
    const TripleSystem k = triangle_system(complete_graph(5));
    CHECK(k.size() == 10);
    CHECK(triangle_system(cycle_graph(5)).empty());
}

TEST_CASE("S(n,t)") {
    for (int t = 0; t <= 4; ++t)
        for (int n = t; n <= 12; ++n) {
            const TripleSystem s = s_construction(n, t);
            CHECK(s.size() == s_size(n, t));
            CHECK(s.size() == binom(n, 3) - binom(n - t, 3));
            for (const Triple& e : s.edges()) CHECK(e[0] < t);
        }
    CHECK_THROWS_AS(s_construction(3, 4), InputError);
    CHECK_THROWS_AS(s_construction(-1, 0), InputError);
}

TEST_CASE("S-graphs and their triangle counts") {
    CHECK(balanced_bipartite(5).size() == 6);
    CHECK(balanced_bipartite(5, true).size() == 7);
    CHECK_THROWS_AS(balanced_bipartite(3, true), InputError);
    for (int t = 0; t <= 3; ++t)
        for (int n = t; n <= 16; ++n)
            for (bool plus : {false, true}) {
                if (plus && (n - t) / 2 < 2) continue;
                const Graph g = s_graph(n, t, plus);
                CHECK(g.n() == n);
                CHECK(oracle::triangles(g) == oracle::sbi_triangles(n, t, plus));
                CHECK(sbi_size(n, t, plus) == oracle::sbi_triangles(n, t, plus));
                CHECK(sbi_construction(n, t, plus).size() == sbi_size(n, t, plus));
            }
    // A few frozen values.
    CHECK(sbi_size(10, 2, false) == 0 + 1 * 8 + 2 * 16);
    CHECK(sbi_size(10, 2, true) == 40 + 2 + 4);
    const Graph j = join(complete_graph(2), Graph(3, {{0, 1}}));
    CHECK(j.size() == 1 + 6 + 1);
    CHECK(j.has_edge(2, 3));
}

TEST_CASE("S-graph constructions avoid the matching blowups (oracle)") {
    // Small hosts where the naive search is affordable.
    for (int n = 7; n <= 9; ++n) {
        CHECK_FALSE(oracle::blowup_in(s_graph(n, 1), path_graph(3)));
        CHECK(oracle::blowup_in(s_graph(n, 2), path_graph(3)) == find_blowup(s_graph(n, 2), path_graph(3)).has_value());
    }
    CHECK_FALSE(oracle::blowup_in(s_graph(9, 1, true), path_graph(4)));
    CHECK_FALSE(find_blowup(s_graph(9, 1, true), path_graph(4)).has_value());
    CHECK(find_blowup(s_graph(9, 2, true), path_graph(4)).has_value() ==
          oracle::blowup_in(s_graph(9, 2, true), path_graph(4)));
}

TEST_CASE("triple index is the lexicographic rank") {
    for (int n = 3; n <= 12; ++n) {
        std::int64_t i = 0;
        for (const Triple& t : all_triples(n)) CHECK(triple_index(n, t) == i++);
    }
}

TEST_CASE("colourings") {
    CHECK_THROWS_AS(make_coloring(4, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(make_coloring(4, {0, 1, 3, 3}), InputError);
    const Coloring c = make_coloring(4, {0, 1, 1, 0});
    CHECK(c.color_count == 2);
    CHECK(c.color_of(Triple(1, 2, 3)) == 0);
    const TripleSystem base = s_construction(6, 1);
    const Coloring lb = lower_bound_coloring(base);
    CHECK(lb.n == 6);
    CHECK(lb.color_count == base.size() + 1);
    for (std::size_t i = 0; i < base.edges().size(); ++i) CHECK(lb.color_of(base.edges()[i]) == static_cast<int>(i));
    CHECK(lb.color_of(Triple(1, 2, 3)) == base.size());
    CHECK_THROWS_AS(lower_bound_coloring(TripleSystem(6)), InputError);
    const Coloring full = lower_bound_coloring(complete_triple_system(5));
    CHECK(full.color_count == 10);
}
