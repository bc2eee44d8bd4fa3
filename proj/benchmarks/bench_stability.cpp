#include <benchmark/benchmark.h>

#include "monadforge/les.hpp"
#include "monadforge/stability.hpp"

using namespace monadforge;

static void stability_scan(benchmark::State& state)
{
    const auto n = static_cast<int>(state.range(0));
    const auto cfg = StabilityScanConfig::defaults(SpaceParams::make(n, n, n));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_stability_scan(cfg));
}
BENCHMARK(stability_scan)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void simplicity_certificate_123(benchmark::State& state)
{
    const auto p = SpaceParams::make(1, 2, 3);
    const auto cfg = StabilityScanConfig::defaults(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(simplicity_certificate(p, cfg));
}
BENCHMARK(simplicity_certificate_123)->Unit(benchmark::kMillisecond);
