#include "cag/generators.hpp"
#include "cag/hyperbolicity.hpp"
#include "cag/intersection.hpp"

#include <benchmark/benchmark.h>

using namespace cag;

namespace {

UnitGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return UnitGraph(n, e);
}

}  // namespace

static void BM_delta_cycle(benchmark::State& state) {
    UnitGraph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        DeltaReport r = delta_exact(g);
        benchmark::DoNotOptimize(r.delta);
    }
}
BENCHMARK(BM_delta_cycle)->DenseRange(4, 16, 4);

static void BM_delta_wheel7(benchmark::State& state) {
    UnitGraph g = build(wheel7()).graph;
    for (auto _ : state) {
        DeltaReport r = delta_exact(g);
        benchmark::DoNotOptimize(r.delta);
    }
}
BENCHMARK(BM_delta_wheel7);

static void BM_delta_extremal_main(benchmark::State& state) {
    UnitGraph g = build(extremal_main(static_cast<int>(state.range(0)))).graph;
    for (auto _ : state) {
        DeltaReport r = delta_exact(g);
        benchmark::DoNotOptimize(r.delta);
    }
}
BENCHMARK(BM_delta_extremal_main)->Arg(6)->Arg(10);

static void BM_delta_random(benchmark::State& state) {
    UnitGraph g = random_connected_graph(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        DeltaReport r = delta_exact(g);
        benchmark::DoNotOptimize(r.delta);
    }
}
BENCHMARK(BM_delta_random)->DenseRange(6, 14, 4);

static void BM_delta_oracle_random(benchmark::State& state) {
    UnitGraph g = random_connected_graph(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        QuarterValue d = delta_oracle(g);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_delta_oracle_random)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
