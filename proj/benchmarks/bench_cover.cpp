#include "cag/cover.hpp"
#include "cag/generators.hpp"
#include "cag/intersection.hpp"

#include <benchmark/benchmark.h>

using namespace cag;

static void BM_rho_random(benchmark::State& state) {
    ArcFamily fam = random_arcs(static_cast<int>(state.range(0)), 17, 64, true);
    for (auto _ : state) {
        CoverResult r = rho(fam);
        benchmark::DoNotOptimize(r.rho);
    }
}
BENCHMARK(BM_rho_random)->DenseRange(8, 64, 8);

static void BM_rho_oracle_random(benchmark::State& state) {
    ArcFamily fam = random_arcs(static_cast<int>(state.range(0)), 17, 64, true);
    for (auto _ : state) {
        int r = rho_oracle(fam);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rho_oracle_random)->Arg(12)->Arg(16)->Arg(20);

static void BM_build_model(benchmark::State& state) {
    ArcFamily fam = random_arcs(static_cast<int>(state.range(0)), 23, 64, true);
    for (auto _ : state) {
        ArcModel m = build(fam);
        benchmark::DoNotOptimize(m.graph);
    }
}
BENCHMARK(BM_build_model)->DenseRange(16, 64, 16);

BENCHMARK_MAIN();
