#pragma once

#include <cstdint>
#include <vector>

#include "tss/geometry.hpp"
#include "tss/graph.hpp"

namespace tss {

/// Rectilinear embedding: vertices on integer points, every edge drawn as a
/// simple chain of axis-parallel unit steps, chains of distinct edges
/// disjoint except at shared vertex images. epath is index-aligned with
/// Graph::edges(), each polyline oriented from the smaller endpoint.
struct RectilinearEmbedding {
    std::vector<GridPoint> vpoint;
    std::vector<std::vector<GridPoint>> epath;
};

// Checks all four conditions exhaustively and reports every violation:
// (i) injective vertex placement, (ii) simple unit-step chains,
// (iii) chain endpoints match edge endpoints, (iv) pairwise disjointness
// up to shared vertex images (both point sets and unit segments).
ValidationReport validate_embedding(const Graph& g, const RectilinearEmbedding& emb);

struct EmbedOptions {
    std::uint64_t seed = 0;
    int max_attempts = 400;
    long long node_budget_per_attempt = 4'000'000;
};

// Greedy placement plus BFS routing with randomized restarts. Output always
// passes validate_embedding; the input is assumed planar with max degree <= 4
// (anything unroutable surfaces as embed_error, never as a bogus embedding).
RectilinearEmbedding compute_embedding(const Graph& g, const EmbedOptions& opts = {});

// Interior chain points p_2..p_{g-1} of an edge, in chain order.
std::vector<GridPoint> polyline_interior_points(const Graph& g, const RectilinearEmbedding& emb,
                                                Edge e);

long long embedding_area(const RectilinearEmbedding& emb);

} // namespace tss
