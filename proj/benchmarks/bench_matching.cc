#include <benchmark/benchmark.h>

#include "mprec/constructors.hpp"
#include "mprec/matching.hpp"
#include "mprec/rng.hpp"

using namespace mprec;

namespace {

struct FaultDraw {
    std::vector<std::vector<int>> vertex_sets;
    std::vector<std::vector<int>> edge_sets;
};

// Pre-drawn random size-4 fault sets so the timed loop measures deciding,
// not sampling.
FaultDraw draw_faults(const Graph& g, int count, std::uint64_t seed) {
    FaultDraw out;
    SplitMix64 rng(seed);
    std::vector<int> verts = g.alive_vertices();
    std::vector<int> edges = g.live_edges();
    const int nv = static_cast<int>(verts.size());
    const int universe = nv + static_cast<int>(edges.size());
    for (int i = 0; i < count; ++i) {
        std::vector<int> fv, fe;
        for (int idx : rng.sample_subset(universe, 4)) {
            if (idx < nv) {
                fv.push_back(verts[static_cast<std::size_t>(idx)]);
            } else {
                fe.push_back(edges[static_cast<std::size_t>(idx - nv)]);
            }
        }
        out.vertex_sets.push_back(std::move(fv));
        out.edge_sets.push_back(std::move(fe));
    }
    return out;
}

}  // namespace

static void BM_FpmDecideIncremental(benchmark::State& state) {
    RhlGraph g = build_rhl(static_cast<int>(state.range(0)), std::uint64_t{1});
    FpmDecider decider(g.graph);
    FaultDraw faults = draw_faults(g.graph, 512, 99);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            decider.has_fpm_under_faults(faults.vertex_sets[i], faults.edge_sets[i]));
        i = (i + 1) % faults.vertex_sets.size();
    }
}
BENCHMARK(BM_FpmDecideIncremental)->Unit(benchmark::kMicrosecond)->DenseRange(4, 6);

static void BM_FpmDecideFromScratch(benchmark::State& state) {
    RhlGraph g = build_rhl(static_cast<int>(state.range(0)), std::uint64_t{1});
    FaultDraw faults = draw_faults(g.graph, 512, 99);
    std::size_t i = 0;
    for (auto _ : state) {
        FaultSet f;
        f.vertices = faults.vertex_sets[i];
        for (int e : faults.edge_sets[i]) f.edges.push_back(g.graph.edge(e));
        Graph faulted = delete_faults(g.graph, f);
        benchmark::DoNotOptimize(has_fractional_perfect_matching(faulted).has_fpm);
        i = (i + 1) % faults.vertex_sets.size();
    }
}
BENCHMARK(BM_FpmDecideFromScratch)->Unit(benchmark::kMicrosecond)->DenseRange(4, 6);

static void BM_MaxMatching(benchmark::State& state) {
    RhlGraph g = build_rhl(static_cast<int>(state.range(0)), std::uint64_t{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_matching(g.graph).size());
    }
}
BENCHMARK(BM_MaxMatching)->Unit(benchmark::kMicrosecond)->DenseRange(3, 6);

static void BM_ScheinermanOracle(benchmark::State& state) {
    Graph g = delete_faults(recursive_circulant_g84(), FaultSet::mixed({2}, {Edge(0, 1)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheinerman_oracle(g));
    }
}
BENCHMARK(BM_ScheinermanOracle)->Unit(benchmark::kMicrosecond);
