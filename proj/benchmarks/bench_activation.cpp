#include <benchmark/benchmark.h>

#include "tss/gen.hpp"
#include "tss/instance.hpp"

using namespace tss;

static void BM_Simulate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(12);
    TSSInstance inst = random_instance(n, 4.0 / n, ThresholdMode::Majority, rng);
    std::vector<int> seed;
    for (int v = 0; v < n; v += 3) seed.push_back(v);
    for (auto _ : state) {
        auto trace = simulate(inst, seed);
        benchmark::DoNotOptimize(trace.rounds.size());
    }
}
BENCHMARK(BM_Simulate)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_BruteForce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(13);
    TSSInstance inst = random_instance(n, 0.3, ThresholdMode::Capped, rng);
    for (auto _ : state) {
        auto res = min_target_set_bruteforce(inst, n);
        benchmark::DoNotOptimize(res.best->first);
    }
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14)->Arg(18);

BENCHMARK_MAIN();
