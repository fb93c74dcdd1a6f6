#include <benchmark/benchmark.h>

#include <random>

#include "gysin/builders.hpp"
#include "gysin/functor.hpp"
#include "gysin/gf2.hpp"
#include "gysin/modules.hpp"
#include "gysin/oracle.hpp"

using namespace gysin;

static void BM_Gf2Rank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    gf2::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, rng() & 1U);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(64)->Arg(256)->Arg(512);

static void BM_VerifyProductSpheres(benchmark::State& state)
{
    const auto f = state.range(0) == 2 ? build_product_spheres({1, 2}) : build_product_spheres({1, 1, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_functor(f).passed());
}
BENCHMARK(BM_VerifyProductSpheres)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_VerifyReferenceExample(benchmark::State& state)
{
    const auto f = build_reference_example();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_functor(f).passed());
}
BENCHMARK(BM_VerifyReferenceExample)->Unit(benchmark::kMillisecond);

static void BM_JordanType(benchmark::State& state)
{
    const auto m = random_ses(static_cast<std::uint64_t>(state.range(0)), 16).b;
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan_type(m).blocks.size());
}
BENCHMARK(BM_JordanType)->Arg(1)->Arg(2)->Arg(3);

static void BM_TorLes(benchmark::State& state)
{
    const auto s = random_ses(7, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tor_les(s).exact());
}
BENCHMARK(BM_TorLes)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK_MAIN();
