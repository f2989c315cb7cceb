#include <benchmark/benchmark.h>

#include "tss/gen.hpp"
#include "tss/geometry.hpp"
#include "tss/reduce.hpp"

using namespace tss;

// cost of the all-pairs exact-rational intersection predicate
static void BM_DiskIntersectionGraph(benchmark::State& state) {
    const int chains = static_cast<int>(state.range(0));
    DiskRepresentation rep{Rational(1, 7), {}};
    for (int c = 0; c < chains; ++c) {
        for (const auto& p : chain_centers({c, 0}, {c, 1}, 6 + c % 4))
            rep.centers.push_back(p);
    }
    for (auto _ : state) {
        Graph g = intersection_graph_disks(rep);
        benchmark::DoNotOptimize(g.edge_count());
    }
    state.counters["disks"] = static_cast<double>(rep.centers.size());
}
BENCHMARK(BM_DiskIntersectionGraph)->Arg(4)->Arg(16)->Arg(48);

static void BM_ComputeEmbedding(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    Rng rng(31);
    Graph g = random_planar_deg4_graph(side, side, 0.85, rng);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RectilinearEmbedding emb = compute_embedding(g, {seed++});
        benchmark::DoNotOptimize(embedding_area(emb));
    }
}
BENCHMARK(BM_ComputeEmbedding)->Arg(3)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
