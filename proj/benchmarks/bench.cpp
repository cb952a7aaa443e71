#include <benchmark/benchmark.h>

#include <random>

#include "cbal/balance.hpp"
#include "cbal/caterpillar.hpp"
#include "cbal/cdm.hpp"
#include "cbal/graph.hpp"
#include "cbal/reduction.hpp"
#include "cbal/switching.hpp"

using namespace cbal;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Coloring random_coloring(int n, int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(1, k);
    std::vector<int> c(n);
    for (int& x : c) x = pick(rng);
    return Coloring(k, std::move(c));
}

void bench_beta_petersen(benchmark::State& state) {
    Graph pet = make_petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(beta(pet, 3, BalanceKind::Open).verdict);
}
BENCHMARK(bench_beta_petersen);

void bench_beta_random(benchmark::State& state) {
    std::mt19937 rng(1);
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(beta(g, 2, BalanceKind::Closed).verdict);
}
BENCHMARK(bench_beta_random)->Arg(12)->Arg(16)->Arg(20);

void bench_count_recurrence(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_recurrence(static_cast<int>(state.range(0))).a);
}
BENCHMARK(bench_count_recurrence)->Arg(50)->Arg(500);

void bench_count_matrix(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_matrix(static_cast<int>(state.range(0))).a);
}
BENCHMARK(bench_count_matrix)->Arg(50)->Arg(500);

void bench_enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_csb_count(6, 5));
}
BENCHMARK(bench_enumerate);

void bench_switch_sequence(benchmark::State& state) {
    std::mt19937 rng(2);
    int n = static_cast<int>(state.range(0));
    ColoredGraph g(random_graph(n, 0.5, rng), random_coloring(n, 2, rng));
    ColoredGraph h = g;
    for (int step = 0; step < 2 * n; ++step) {
        auto options = enumerate_applicable_switches(h);
        if (options.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
        h = apply_switch(h, options[pick(rng)]);
    }
    for (auto _ : state) benchmark::DoNotOptimize(find_switch_sequence(g, h).size());
}
BENCHMARK(bench_switch_sequence)->Arg(8)->Arg(16)->Arg(32);

void bench_realize(benchmark::State& state) {
    std::mt19937 rng(3);
    int n = static_cast<int>(state.range(0));
    ColoredGraph cg(random_graph(n, 0.3, rng), random_coloring(n, 3, rng));
    ColorDegreeMatrix m = compute_cdm(cg);
    for (auto _ : state) benchmark::DoNotOptimize(realize(m).graph.edge_count());
}
BENCHMARK(bench_realize)->Arg(32)->Arg(128);

void bench_reduce(benchmark::State& state) {
    std::mt19937 rng(4);
    int n = static_cast<int>(state.range(0));
    std::vector<int> parts;
    int left = n;
    std::uniform_int_distribution<int> part(1, 5);
    while (left > 0) {
        int p = std::min(left, part(rng));
        parts.push_back(p);
        left -= p;
    }
    ColoredGraph cg(make_complete_multipartite(MultipartiteSpec(parts)),
                    random_coloring(n, 2, rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(red_blue_reduce(cg).result.vertex_count());
}
BENCHMARK(bench_reduce)->Arg(32)->Arg(96);

}  // namespace

BENCHMARK_MAIN();
