#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tss/geometry.hpp"
#include "tss/graph.hpp"
#include "tss/instance.hpp"

namespace tss {

struct VCInstance {
    Graph graph;
    int k = 0;
};

// Identity on graph and budget; valid only for unanimous thresholds, where
// target sets and vertex covers coincide.
VCInstance unanimous_tss_to_vc(const TSSInstance& inst);
TSSInstance vc_to_unanimous_tss(const VCInstance& inst);

// Minimum vertex cover of the interval intersection graph: complement of the
// earliest-right-endpoint greedy maximum independent set. Ties break on
// smaller right endpoint, then smaller index.
std::vector<int> min_vertex_cover_interval(const IntervalModel& model);

// Minimum vertex cover of a grid graph: bipartition by parity of x+y,
// maximum matching via augmenting paths, then the Koenig construction
// (alternate from unmatched left vertices; cover = (L \ reached) u (R n reached)).
std::vector<int> min_vertex_cover_grid(const Graph& g, const GridCoords& coords);

struct UnanimousCertificate {
    std::optional<IntervalModel> interval;
    std::optional<GridCoords> grid;
};

// Dispatches to the interval or grid solver when a certificate is supplied,
// otherwise brute force. Returns (k_min, witness); the witness is a target set.
std::pair<int, std::vector<int>> solve_unanimous(const TSSInstance& inst,
                                                 const UnanimousCertificate& cert = {});

// Exact maximum independent set via branch and bound with degree-based
// branching and the usual reductions (isolated/pendant inclusion, domination,
// degree-2 folding). Intended for the sizes the disk reduction produces.
std::vector<int> max_independent_set_bb(const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<int>& vs);
bool is_vertex_cover(const Graph& g, const std::vector<int>& vs);

} // namespace tss
