#include <benchmark/benchmark.h>

#include "involab/gf.hpp"
#include "involab/series.hpp"
#include "involab/staircase.hpp"

using namespace involab;

static void BM_Assemble1342(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        UniSeries g = assemble_1342(order);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_Assemble1342)->Arg(16)->Arg(24)->Arg(32);

static void BM_Assemble2341(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        UniSeries g = assemble_2341(order);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_Assemble2341)->Arg(16)->Arg(24);

static void BM_StaircaseClosedRefined(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BiSeries s = staircase::closed_refined(1, order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_StaircaseClosedRefined)->Arg(16)->Arg(24);

static void BM_SeriesSqrt(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const UniSeries radicand = UniSeries::from_coeffs({1, -6, 1}, order);
    for (auto _ : state) {
        UniSeries s = radicand.sqrt();
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SeriesSqrt)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
