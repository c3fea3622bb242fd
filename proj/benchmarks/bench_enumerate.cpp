#include <benchmark/benchmark.h>

#include "involab/coloring.hpp"
#include "involab/enumerate.hpp"
#include "involab/permutation.hpp"

using namespace involab;

static void BM_CountAvoiders(benchmark::State& state) {
    const Permutation beta = Permutation::parse("2413");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt c = count_avoiders({beta}, n, true);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountAvoiders)->Arg(8)->Arg(10)->Arg(12);

static void BM_CountAvoiders1234(benchmark::State& state) {
    const Permutation beta = Permutation::parse("1234");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt c = count_avoiders({beta}, n, true);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountAvoiders1234)->Arg(8)->Arg(10)->Arg(12);

static void BM_CountSimpleAvoiders(benchmark::State& state) {
    const Permutation beta = Permutation::parse("1234");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt c = count_simple_avoiders(beta, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountSimpleAvoiders)->Arg(9)->Arg(11);

static void BM_Contains(benchmark::State& state) {
    const Permutation haystack = Permutation::parse("391867452");
    const Permutation needle = Permutation::parse("51342");
    for (auto _ : state) {
        bool c = contains(haystack, needle);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Contains);

static void BM_WordPairCounts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto counts = word_pair_counts(n);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_WordPairCounts)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
