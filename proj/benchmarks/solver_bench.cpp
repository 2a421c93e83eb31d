#include <benchmark/benchmark.h>

#include <gridtds/bondage_engine.hpp>
#include <gridtds/exact_solver.hpp>

using namespace gridtds;

static void BM_GammaTValue(benchmark::State & state)
{
    const auto g = build_grid({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_t_dp_value(g));
}
BENCHMARK(BM_GammaTValue)->Args({30, 4})->Args({30, 8})->Args({20, 10})->Args({16, 12})->Unit(benchmark::kMillisecond);

static void BM_GammaTWitness(benchmark::State & state)
{
    const auto g = build_grid({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_t_dp(g));
}
BENCHMARK(BM_GammaTWitness)->Args({30, 4})->Args({20, 10})->Unit(benchmark::kMillisecond);

static void BM_TotalBondage(benchmark::State & state)
{
    const auto g = build_grid({static_cast<int>(state.range(0)), 4});
    BondageOptions options;
    options.k_max = static_cast<int>(state.range(1));
    options.threads = static_cast<unsigned>(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_bondage(g, options));
}
BENCHMARK(BM_TotalBondage)->Args({8, 4, 1})->Args({8, 4, 4})->Args({13, 4, 1})->Args({13, 4, 4})->Unit(benchmark::kMillisecond);

static void BM_CanonicalSubsets(benchmark::State & state)
{
    const GridSpec spec{10, 4};
    const bool symmetric = state.range(0) != 0;
    for (auto _ : state) {
        CanonicalSubsetStream stream(spec, 3, symmetric);
        std::vector<std::size_t> idx;
        std::size_t count = 0;
        while (stream.next(idx))
            ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CanonicalSubsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
