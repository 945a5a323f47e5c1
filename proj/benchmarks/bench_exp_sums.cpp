#include <benchmark/benchmark.h>

#include "vforge/exp_sums.hpp"

using namespace vforge;

static void BM_KloostermanNumeric(benchmark::State& state) {
    const int64 c = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(kloosterman_numeric(3, 7, c));
}
BENCHMARK(BM_KloostermanNumeric)->Arg(97)->Arg(720)->Arg(1999);

static void BM_KloostermanExact(benchmark::State& state) {
    const int64 c = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(kloosterman(3, 7, c).exact.is_zero());
}
BENCHMARK(BM_KloostermanExact)->Arg(60)->Arg(210);

static void BM_DftDualityExact(benchmark::State& state) {
    DirichletCharacter chi = primitive_characters(13).front();
    for (auto _ : state) {
        auto res = verify_dft_duality(chi, 2, 37, 40);
        benchmark::DoNotOptimize(res.exact_ok);
    }
}
BENCHMARK(BM_DftDualityExact);

BENCHMARK_MAIN();
