#include <difflat/classification.hpp>
#include <difflat/enumerate.hpp>

#include <benchmark/benchmark.h>

using namespace difflat;

static void BM_EnumerateChain(benchmark::State & state)
{
    auto l = make_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_derivations(l).size());
}
BENCHMARK(BM_EnumerateChain)->DenseRange(6, 12, 2);

static void BM_EnumerateChainFast(benchmark::State & state)
{
    auto l = make_chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_chain_fast(l).size());
}
BENCHMARK(BM_EnumerateChainFast)->DenseRange(6, 12, 2);

static void BM_EnumerateMn(benchmark::State & state)
{
    auto l = make_mn(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_derivations(l).size());
}
BENCHMARK(BM_EnumerateMn)->DenseRange(5, 11, 2);

static void BM_EnumerateBoolean(benchmark::State & state)
{
    auto l = make_boolean(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_derivations(l).size());
}
BENCHMARK(BM_EnumerateBoolean)->DenseRange(2, 4);

static void BM_EnumerateBooleanThreads(benchmark::State & state)
{
    auto l = make_boolean(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_derivations(l, {static_cast<unsigned>(state.range(0))}).size());
}
BENCHMARK(BM_EnumerateBooleanThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_ClassifyMn(benchmark::State & state)
{
    auto set = enumerate_derivations(make_mn(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(set).size());
}
BENCHMARK(BM_ClassifyMn)->DenseRange(5, 9, 2);
