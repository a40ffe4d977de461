#include <benchmark/benchmark.h>

#include "mprec/constructors.hpp"
#include "mprec/preclusion.hpp"

using namespace mprec;

static void BM_FsmpSweepG3(benchmark::State& state) {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 2;
    opt.all_witnesses = true;
    opt.with_certificates = false;
    opt.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(preclusion_number(g3, PreclusionKind::FSMP, opt).number);
    }
}
BENCHMARK(BM_FsmpSweepG3)->Unit(benchmark::kMillisecond);

static void BM_FsmpSweepG4(benchmark::State& state) {
    RhlGraph g4 = build_rhl(4, std::uint64_t{2001});
    PreclusionOptions opt;
    opt.budget = 4;
    opt.with_certificates = false;
    opt.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(preclusion_number(g4.graph, PreclusionKind::FSMP, opt).number);
    }
}
BENCHMARK(BM_FsmpSweepG4)->Unit(benchmark::kMillisecond)->Arg(1)->Arg(2);

static void BM_SmpSweepG3(benchmark::State& state) {
    Graph g3 = recursive_circulant_g84();
    PreclusionOptions opt;
    opt.budget = 3;
    opt.all_witnesses = true;
    opt.with_certificates = false;
    opt.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(preclusion_number(g3, PreclusionKind::SMP, opt).number);
    }
}
BENCHMARK(BM_SmpSweepG3)->Unit(benchmark::kMillisecond);

static void BM_SurvivesFsmp(benchmark::State& state) {
    Graph g3 = recursive_circulant_g84();
    FaultSet f = FaultSet::mixed({3}, {Edge(0, 1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(survives(g3, f, PreclusionKind::FSMP));
    }
}
BENCHMARK(BM_SurvivesFsmp)->Unit(benchmark::kMicrosecond);
