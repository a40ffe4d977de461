#include <benchmark/benchmark.h>

#include "mprec/constructors.hpp"
#include "mprec/hamiltonian.hpp"
#include "mprec/rng.hpp"

using namespace mprec;

static void BM_HamCyclePristine(benchmark::State& state) {
    RhlGraph g = build_rhl(static_cast<int>(state.range(0)), std::uint64_t{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamiltonian_cycle(g.graph).has_value());
    }
}
BENCHMARK(BM_HamCyclePristine)->Unit(benchmark::kMicrosecond)->DenseRange(3, 6);

static void BM_HamCycleFaulted(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    RhlGraph g = build_rhl(m, std::uint64_t{1});
    SplitMix64 rng(5);
    std::vector<Graph> instances;
    for (int i = 0; i < 64; ++i) {
        auto vs = rng.sample_subset(g.graph.order(), m - 2);
        instances.push_back(delete_faults(g.graph, FaultSet::of_vertices(vs)));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamiltonian_cycle(instances[i]).has_value());
        i = (i + 1) % instances.size();
    }
}
BENCHMARK(BM_HamCycleFaulted)->Unit(benchmark::kMicrosecond)->DenseRange(4, 6);

static void BM_HamPath(benchmark::State& state) {
    RhlGraph g = build_rhl(5, std::uint64_t{1});
    int pair = 0;
    for (auto _ : state) {
        int u = pair % 31;
        int v = 31;
        benchmark::DoNotOptimize(hamiltonian_path(g.graph, u, v).has_value());
        pair = (pair + 1) % 31;
    }
}
BENCHMARK(BM_HamPath)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
