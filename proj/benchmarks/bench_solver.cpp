#include <benchmark/benchmark.h>

#include "tdc/domination.hpp"
#include "tdc/enumerate.hpp"
#include "tdc/family.hpp"
#include "tdc/solver.hpp"

namespace {

void BM_TdcExactCycle(benchmark::State& state) {
    tdc::Graph g = tdc::cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tdc::tdc_exact(g).value);
}
BENCHMARK(BM_TdcExactCycle)->DenseRange(8, 13);

void BM_TdcExactPath(benchmark::State& state) {
    tdc::Graph g = tdc::path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tdc::tdc_exact(g).value);
}
BENCHMARK(BM_TdcExactPath)->DenseRange(8, 13);

void BM_TdcExactRandom(benchmark::State& state) {
    tdc::Graph g;
    std::uint64_t seed = 1;
    do {
        g = tdc::random_graph(static_cast<int>(state.range(0)), 1, 2, seed++);
    } while (g.has_isolated_vertex());
    for (auto _ : state) benchmark::DoNotOptimize(tdc::tdc_exact(g).value);
}
BENCHMARK(BM_TdcExactRandom)->DenseRange(8, 12);

void BM_DcExactRandom(benchmark::State& state) {
    tdc::Graph g = tdc::random_graph(static_cast<int>(state.range(0)), 1, 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::dc_exact(g).value);
}
BENCHMARK(BM_DcExactRandom)->DenseRange(8, 12);

void BM_GammaTExact(benchmark::State& state) {
    tdc::Graph g = tdc::cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tdc::gamma_t_exact(g).value);
}
BENCHMARK(BM_GammaTExact)->DenseRange(8, 14)->RangeMultiplier(2);

void BM_BoundsReport(benchmark::State& state) {
    tdc::Graph g = tdc::wheel_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tdc::bounds_report(g).obs_lb);
}
BENCHMARK(BM_BoundsReport)->DenseRange(6, 10);

void BM_AllTrees(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tdc::all_trees(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_AllTrees)->DenseRange(6, 9);

} // namespace

BENCHMARK_MAIN();
