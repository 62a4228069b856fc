// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "trexp/builders.hpp"
#include "trexp/embed.hpp"
#include "trexp/extremal.hpp"
#include "trexp/structure.hpp"

using namespace trexp;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) es.emplace_back(a, b);
    return Graph(n, es);
}

void triangles_serial(benchmark::State& st) {
    const Graph g = random_graph(64, 0.5, 1);
    for (auto _ : st) benchmark::DoNotOptimize(serial::count_triangles(g));
}

void triangles_parallel(benchmark::State& st) {
    const Graph g = random_graph(64, 0.5, 1);
    const int w = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(parallel::count_triangles(g, w));
}

void max_cut_serial(benchmark::State& st) {
    const Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 2);
    for (auto _ : st) benchmark::DoNotOptimize(serial::max_cut(g));
}

void max_cut_parallel(benchmark::State& st) {
    const Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 2);
    const int w = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(parallel::max_cut(g, w));
}

void expansion_search(benchmark::State& st) {
    // P_5 is absent from S(16,2), so the whole tree is explored.
    const TripleSystem h = s_construction(16, 2);
    SearchOptions opt;
    opt.workers = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(find_expansion(h, path_graph(5), opt));
}

void rainbow_search(benchmark::State& st) {
    const Coloring chi = lower_bound_coloring(s_construction(9, 1));
    SearchOptions opt;
    opt.workers = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(find_rainbow_expansion(chi, cycle_graph(4), opt));
}

}  // namespace

BENCHMARK(triangles_serial);
BENCHMARK(triangles_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(max_cut_serial)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(max_cut_parallel)->Args({18, 4})->Args({22, 2})->Args({22, 4})->Args({22, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(expansion_search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(rainbow_search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
