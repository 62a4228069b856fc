#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "trexp/canon.hpp"
#include "trexp/tree.hpp"

using namespace trexp;

namespace {

Graph double_broom() { return Graph(6, {{0, 2}, {0, 3}, {0, 1}, {1, 4}, {1, 5}}); }

}  // namespace

TEST_CASE("tree counts per vertex number") {
    // Unlabelled trees on 1..10 vertices.
    const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        const auto trees = enumerate_trees(n);
        CHECK(trees.size() == counts[static_cast<std::size_t>(n - 1)]);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            CHECK(trees[i].is_tree());
            if (i > 0) CHECK(canonical_form(trees[i - 1]).key < canonical_form(trees[i]).key);
        }
    }
    CHECK_THROWS_AS(enumerate_trees(0), InputError);
    CHECK_THROWS_AS(enumerate_trees(11), InputError);
}

TEST_CASE("crosscut invariants match brute force on all trees up to 9 vertices") {
    for (int n = 1; n <= 9; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            const auto p = analyze_tree(t);
            CHECK(p.sigma == oracle::sigma(t));
            CHECK(p.tau == oracle::tau(t));
            REQUIRE(p.tau_ind.has_value());
            CHECK(*p.tau_ind == oracle::tau_ind(t));
            CHECK(p.tau <= p.sigma);
            CHECK(p.sigma <= *p.tau_ind);
            CHECK(p.best_pair.cost() == p.sigma);
            const auto sets = oracle::sigma_sets(t);
            CHECK(p.crosscut_pairs.size() == sets.size());
            std::size_t max_i = 0;
            for (const auto& s : sets) max_i = std::max(max_i, s.size());
            CHECK(p.best_pair.independent.size() == max_i);
            for (const auto& s : sets)
                if (s.size() == max_i) {
                    CHECK(p.best_pair.independent == s);  // lex-least among maximum
                    break;
                }
        }
}

TEST_CASE("crosscut number on general graphs") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.35);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + i % 11;
        std::vector<Edge> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) es.emplace_back(a, b);
        const Graph g(n, es);
        CHECK(crosscut_value(g) == oracle::sigma(g));
        CHECK(covering_number(g) == oracle::tau(g));
        const auto ti = independent_covering_number(g);
        const int expect = oracle::tau_ind(g);
        CHECK(ti.value_or(-1) == expect);
    }
    for (int k = 3; k <= 12; ++k) CHECK(crosscut_number(cycle_graph(k)).sigma == (k + 1) / 2);
    CHECK_THROWS_AS(crosscut_number(complete_graph(4)), InputError);
    CHECK_THROWS_AS(crosscut_number(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("P3 profile") {
    const auto p = analyze_tree(path_graph(3));
    CHECK(p.sigma == 2);
    CHECK(p.tau == 2);
    CHECK(p.tau_ind == 2);
    CHECK(p.strongly_edge_critical);
    CHECK(p.sigma_equals_tau_ind);
    CHECK(p.best_pair.independent == std::vector<Vertex>{0, 2});
    CHECK(p.best_pair.remainder.empty());
    CHECK_THROWS_AS(analyze_tree(cycle_graph(4)), InputError);
}

TEST_CASE("strong edge-criticality of paths") {
    for (int len : {1, 3, 5, 7, 9}) CHECK(analyze_tree(path_graph(len)).strongly_edge_critical);
    for (int len : {2, 4, 6, 8}) CHECK(critical_edges(path_graph(len)).empty());
}

TEST_CASE("double broom separates tau from sigma") {
    const auto p = analyze_tree(double_broom());
    CHECK(p.tau == 2);
    CHECK(p.sigma == 3);
}

TEST_CASE("crosscut pair enumeration is capped") {
    bool overflow = false;
    const auto all = crosscut_pairs(path_graph(8), 10000, &overflow);
    CHECK_FALSE(overflow);
    CHECK(all.size() == oracle::sigma_sets(path_graph(8)).size());
    const auto few = crosscut_pairs(path_graph(8), 2, &overflow);
    if (all.size() > 2) {
        CHECK(overflow);
        CHECK(few.size() == 2);
        CHECK(few[0] == all[0]);
    }
    const auto pair = crosscut_pair_from(path_graph(3), {1});
    CHECK(pair.remainder == std::vector<Edge>{Edge(2, 3)});
    CHECK_THROWS_AS(crosscut_pair_from(path_graph(3), {0, 1}), InputError);
}

TEST_CASE("decomposition witness") {
    const Graph p3 = path_graph(3);
    const auto best = crosscut_number(p3).best;
    const auto w = decomposition_witness(p3, best);
    CHECK(w.kind == WitnessKind::LeafNeighborVertex);
    CHECK(w.vertex == 2);
    const auto other = crosscut_pair_from(p3, {1});
    const auto w2 = decomposition_witness(p3, other);
    CHECK(((w2.kind == WitnessKind::LeafNeighborVertex && w2.vertex == 1) ||
           (w2.kind == WitnessKind::PendantEdge && w2.edge == Edge(2, 3))));
    CHECK_THROWS_AS(decomposition_witness(p3, crosscut_pair_from(p3, {0})), InputError);
    CHECK_THROWS_AS(decomposition_witness(cycle_graph(4), crosscut_pair_from(cycle_graph(4), {0, 2})), InputError);
}

TEST_CASE("pendant critical edge") {
    const Graph p5 = path_graph(5);
    const auto w = pendant_critical_edge(p5);
    REQUIRE(w.has_value());
    CHECK(p5.degree(w->leaf) == 1);
    CHECK(std::find(w->cover.begin(), w->cover.end(), w->leaf) != w->cover.end());
    CHECK(crosscut_value(p5.without_edge(w->edge)) == crosscut_value(p5) - 1);
    CHECK_FALSE(pendant_critical_edge(path_graph(4)).has_value());
    const auto b = pendant_critical_edge(double_broom());
    REQUIRE(b.has_value());
    CHECK(crosscut_value(double_broom().without_edge(b->edge)) == 2);
    CHECK_THROWS_AS(pendant_critical_edge(p5, std::vector<Vertex>{0}), InputError);
    CHECK_THROWS_AS(pendant_critical_edge(cycle_graph(5)), InputError);
}

TEST_CASE("minimum independent cover") {
    const auto c = minimum_independent_cover(path_graph(3));
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Vertex>{0, 2});
    CHECK_FALSE(minimum_independent_cover(cycle_graph(5)).has_value());
    CHECK(leaves(star_graph(3)) == (bit(1) | bit(2) | bit(3)));
}
