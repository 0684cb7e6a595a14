#include <difflat/catalog.hpp>
#include <difflat/lattice.hpp>

#include <benchmark/benchmark.h>

using namespace difflat;

static void BM_AutomorphismsMn(benchmark::State & state)
{
    auto l = make_mn(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphisms(l).size());
}
BENCHMARK(BM_AutomorphismsMn)->DenseRange(5, 9, 2);

static void BM_AutomorphismsBoolean(benchmark::State & state)
{
    auto l = make_boolean(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphisms(l).size());
}
BENCHMARK(BM_AutomorphismsBoolean)->DenseRange(2, 5);

static void BM_CanonicalKeyCatalog(benchmark::State & state)
{
    auto cat = enumerate_lattices(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto & e : cat.entries)
            benchmark::DoNotOptimize(canonical_key(e.lattice));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cat.size()));
}
BENCHMARK(BM_CanonicalKeyCatalog)->DenseRange(6, 8);

static void BM_BruteForceKeyCatalog(benchmark::State & state)
{
    auto cat = enumerate_lattices(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto & e : cat.entries)
            benchmark::DoNotOptimize(brute_force_canonical_key(e.lattice));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cat.size()));
}
BENCHMARK(BM_BruteForceKeyCatalog)->DenseRange(6, 7);
