#include <difflat/catalog.hpp>
#include <difflat/conjecture.hpp>

#include <benchmark/benchmark.h>

using namespace difflat;

static void BM_Catalog(benchmark::State & state)
{
    CatalogOptions options;
    options.jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_lattices(static_cast<std::size_t>(state.range(0)), options).size());
}
BENCHMARK(BM_Catalog)->Args({7, 1})->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ConjectureProbe(benchmark::State & state)
{
    ConjectureOptions options;
    options.max_order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_conjecture(options).lattices.size());
}
BENCHMARK(BM_ConjectureProbe)->DenseRange(6, 7)->Unit(benchmark::kMillisecond);
