#include <benchmark/benchmark.h>

#include "grover_phase/grover_phase.hpp"

namespace {

using namespace grover_phase;

void BM_SubspaceRun(benchmark::State &state) {
    const auto it = iteration_matrix(LiCMParams{1.3, 0.2, 0.9, -0.5},
                                     geometry_from_lambda(1.0 / 1024));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(it, k));
    }
}
BENCHMARK(BM_SubspaceRun)->Arg(1)->Arg(25)->Arg(1000);

void BM_StatevectorRun(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto space = make_search_space(n, {0, 3, 5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_full(space, LongParams{1.1, 0.4}, 10));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(space.size()));
}
BENCHMARK(BM_StatevectorRun)->DenseRange(4, 16, 4)->Complexity(benchmark::oN);

void BM_MatchedSweep(benchmark::State &state) {
    SweepGrid grid;
    grid.kind = AlgorithmKind::LiPC;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(grid, true));
    }
}
BENCHMARK(BM_MatchedSweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
