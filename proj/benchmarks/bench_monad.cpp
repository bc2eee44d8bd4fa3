#include <benchmark/benchmark.h>

#include "monadforge/monad.hpp"

using namespace monadforge;

static void monad_assemble(benchmark::State& state)
{
    const auto p = SpaceParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_monad(p));
}
BENCHMARK(monad_assemble)->DenseRange(1, 4);

static void monad_composition(benchmark::State& state)
{
    const auto p = SpaceParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)));
    const MonadSpec spec = assemble_monad(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_composition(spec));
}
BENCHMARK(monad_composition)->DenseRange(1, 4);

static void monad_rank_sampling(benchmark::State& state)
{
    const MonadSpec spec = assemble_monad(SpaceParams::make(1, 2, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_maximal_rank(spec, static_cast<unsigned>(state.range(0)), 1));
}
BENCHMARK(monad_rank_sampling)->Arg(1)->Arg(20);
