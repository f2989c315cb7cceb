#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tss/graph.hpp"
#include "tss/rational.hpp"

namespace tss {

struct GridPoint {
    long long x = 0;
    long long y = 0;
    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;
};

inline long long l1_distance(GridPoint a, GridPoint b) {
    auto d = [](long long p, long long q) { return p > q ? p - q : q - p; };
    return d(a.x, b.x) + d(a.y, b.y);
}

struct GeoPoint {
    Rational x;
    Rational y;
    bool operator==(const GeoPoint&) const = default;
};

inline Rational dist2(const GeoPoint& a, const GeoPoint& b) {
    return sq(a.x - b.x) + sq(a.y - b.y);
}

/// Equal-diameter closed disks, index-aligned with graph vertices. Disks i,j
/// intersect iff dist2(center_i, center_j) <= diameter^2 -- tangency counts.
struct DiskRepresentation {
    Rational diameter;
    std::vector<GeoPoint> centers;
};

/// Injective vertex -> grid point certificate for grid graphs.
struct GridCoords {
    std::vector<GridPoint> coord;
};

/// Closed intervals [lo, hi]; two intervals meet iff max(lo) <= min(hi).
struct IntervalModel {
    std::vector<std::pair<Rational, Rational>> intervals;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::string first() const { return violations.empty() ? "" : violations.front(); }
};

Graph intersection_graph_disks(const DiskRepresentation& rep);
Graph intersection_graph_intervals(const IntervalModel& model);

// Accepts iff coord is injective and edges are exactly the L1-distance-1
// pairs (inducedness, both directions). Reports the first violating pair.
ValidationReport validate_grid_graph(const Graph& g, const GridCoords& coords);

} // namespace tss
