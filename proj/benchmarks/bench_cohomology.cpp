#include <benchmark/benchmark.h>

#include "monadforge/chow.hpp"
#include "monadforge/cohomology.hpp"

using namespace monadforge;

static void cohomology_line_bundle(benchmark::State& state)
{
    const auto p = SpaceParams::make(3, 2, 1);
    for (auto _ : state)
        for (int a = -5; a <= 5; ++a)
            benchmark::DoNotOptimize(line_bundle_cohomology(p, {a, -a, a - 1, 2}));
}
BENCHMARK(cohomology_line_bundle);

static void cohomology_exterior_power(benchmark::State& state)
{
    const auto p = SpaceParams::make(2, 2, 2);
    const LineBundleSum middle = monad_middle(p);
    const auto q = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exterior_power_sum(middle, q));
}
BENCHMARK(cohomology_exterior_power)->DenseRange(2, 8, 2);

static void chow_degree_of_T(benchmark::State& state)
{
    const auto p = SpaceParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(invariants_of_T(p));
}
BENCHMARK(chow_degree_of_T)->DenseRange(1, 4);
