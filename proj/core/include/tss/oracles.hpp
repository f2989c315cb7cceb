#pragma once

#include <vector>

#include "tss/graph.hpp"

namespace tss {

// Plain enumeration oracles. These stay deliberately naive: they are the
// independent side of every dual-route check in the verification harness,
// so they must not share code with the clever solvers they vet.

std::vector<int> max_independent_set_naive(const Graph& g);
std::vector<int> min_vertex_cover_naive(const Graph& g);

} // namespace tss
