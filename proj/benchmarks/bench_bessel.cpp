#include <benchmark/benchmark.h>

#include "vforge/bessel.hpp"

using namespace vforge;

static void BM_BesselSeriesReal(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j_order(11, 8.5));
}
BENCHMARK(BM_BesselSeriesReal);

static void BM_BesselMiller(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j_order(11, x));
}
BENCHMARK(BM_BesselMiller)->Arg(50)->Arg(500)->Arg(5000);

static void BM_BesselComplexSeries(benchmark::State& state) {
    const std::complex<double> z{3.0, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j_order(11, z));
}
BENCHMARK(BM_BesselComplexSeries)->Arg(10)->Arg(60)->Arg(110);

BENCHMARK_MAIN();
