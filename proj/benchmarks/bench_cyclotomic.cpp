#include <benchmark/benchmark.h>

#include "vforge/cyclotomic.hpp"
#include "vforge/rng.hpp"

using namespace vforge;

static Cyclotomic random_element(int64 order, int nnz, SplitMix64& rng) {
    Cyclotomic x(order);
    for (int i = 0; i < nnz; ++i)
        x.add_root(static_cast<int64>(rng.below(static_cast<std::uint64_t>(order))),
                   rng.range(-50, 50));
    return x;
}

static void BM_IsZero(benchmark::State& state) {
    SplitMix64 rng(7);
    const int64 order = state.range(0);
    Cyclotomic x = random_element(order, 2000, rng);
    Cyclotomic d = x - x;
    for (auto _ : state) benchmark::DoNotOptimize(d.is_zero());
}
BENCHMARK(BM_IsZero)->Arg(360)->Arg(5040)->Arg(20800);

static void BM_Product(benchmark::State& state) {
    SplitMix64 rng(11);
    Cyclotomic a = random_element(state.range(0), 60, rng);
    Cyclotomic b = random_element(state.range(0), 60, rng);
    for (auto _ : state) benchmark::DoNotOptimize((a * b).nonzero_count());
}
BENCHMARK(BM_Product)->Arg(360)->Arg(2520);

BENCHMARK_MAIN();
