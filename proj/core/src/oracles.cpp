#include "tss/oracles.hpp"

namespace tss {

std::vector<int> max_independent_set_naive(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> best;
    // n is expected <= ~20 here; full subset scan.
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        if (static_cast<int>(__builtin_popcountll(mask)) <= static_cast<int>(best.size()))
            continue;
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        best.clear();
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) best.push_back(v);
    }
    return best;
}

std::vector<int> min_vertex_cover_naive(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> best;
    for (int v = 0; v < n; ++v) best.push_back(v); // V is always a cover
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        if (static_cast<int>(__builtin_popcountll(mask)) >= static_cast<int>(best.size()))
            continue;
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!(mask >> u & 1) && !(mask >> v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        best.clear();
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) best.push_back(v);
    }
    return best;
}

} // namespace tss
