#pragma once

#include <cstdint>
#include <vector>

#include "tss/cnf.hpp"
#include "tss/geometry.hpp"
#include "tss/graph.hpp"
#include "tss/instance.hpp"

namespace tss {

/// SplitMix64-based generator. std::random distributions are not portable
/// across standard libraries, and reports embed seeds that must reproduce
/// anywhere, so all randomness in the project flows through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] inclusive.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() %
                                           static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long long>(i) - 1))]);
    }

private:
    std::uint64_t state_;
};

enum class ThresholdMode { Uniform, Capped, Unanimous, Majority };

Graph random_graph(int n, double edge_prob, Rng& rng);
std::vector<int> random_thresholds(const Graph& g, ThresholdMode mode, Rng& rng);
TSSInstance random_instance(int n, double edge_prob, ThresholdMode mode, Rng& rng);

// Induced subgraph of a width x height grid; isolated points are dropped.
std::pair<Graph, GridCoords> random_grid_graph(int width, int height, double keep_prob, Rng& rng);

// Random subgraph (not necessarily induced) of a grid: always planar with
// max degree <= 4, handed over without its coordinates.
Graph random_planar_deg4_graph(int width, int height, double keep_prob, Rng& rng);

IntervalModel random_interval_model(int n, int coord_range, Rng& rng);

// Occurrence-valid restricted formula: every variable appears exactly twice
// positively and once negatively, clause sizes in {1,2,3}.
CnfFormula random_restricted_3sat(int num_vars, Rng& rng);

} // namespace tss
