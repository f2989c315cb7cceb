#include <benchmark/benchmark.h>

#include "tss/embed.hpp"
#include "tss/gen.hpp"
#include "tss/reduce.hpp"
#include "tss/solve.hpp"

using namespace tss;

static void BM_IntervalCover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(21);
    IntervalModel model = random_interval_model(n, 4 * n, rng);
    for (auto _ : state) {
        auto cover = min_vertex_cover_interval(model);
        benchmark::DoNotOptimize(cover.size());
    }
}
BENCHMARK(BM_IntervalCover)->Arg(64)->Arg(512)->Arg(4096);

static void BM_GridCoverKoenig(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    Rng rng(22);
    auto [g, coords] = random_grid_graph(side, side, 0.8, rng);
    for (auto _ : state) {
        auto cover = min_vertex_cover_grid(g, coords);
        benchmark::DoNotOptimize(cover.size());
    }
}
BENCHMARK(BM_GridCoverKoenig)->Arg(6)->Arg(12)->Arg(24);

// the disk reduction's output: long subdivision chains with clique bumps
static void BM_IndependentSetOnChains(benchmark::State& state) {
    Graph g = state.range(0) == 3 ? complete_graph(4) : octahedron_graph();
    const int r = static_cast<int>(state.range(0));
    RectilinearEmbedding emb = compute_embedding(g, {7});
    ReductionArtifact art = is_planar_to_is_udg(g, r, emb, 1);
    for (auto _ : state) {
        auto mis = max_independent_set_bb(art.is_instance->graph);
        benchmark::DoNotOptimize(mis.size());
    }
}
BENCHMARK(BM_IndependentSetOnChains)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
