#include "tss/geometry.hpp"

#include <map>

#include "tss/errors.hpp"

namespace tss {

Graph intersection_graph_disks(const DiskRepresentation& rep) {
    if (rep.diameter.sign() <= 0) throw input_error("disk diameter must be positive");
    const int n = static_cast<int>(rep.centers.size());
    const Rational d2 = sq(rep.diameter);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist2(rep.centers[i], rep.centers[j]) <= d2) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph intersection_graph_intervals(const IntervalModel& model) {
    const int n = static_cast<int>(model.intervals.size());
    for (const auto& [lo, hi] : model.intervals)
        if (hi < lo) throw input_error("interval with hi < lo");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = model.intervals[i];
            const auto& b = model.intervals[j];
            const Rational& lo = a.first < b.first ? b.first : a.first;
            const Rational& hi = a.second < b.second ? a.second : b.second;
            if (lo <= hi) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

ValidationReport validate_grid_graph(const Graph& g, const GridCoords& coords) {
    const int n = g.vertex_count();
    if (static_cast<int>(coords.coord.size()) != n)
        throw input_error("grid coords must cover all vertices");

    ValidationReport rep;
    std::map<GridPoint, int> seen;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = seen.insert({coords.coord[v], v});
        if (!fresh) {
            rep.ok = false;
            rep.violations.push_back("duplicate point for vertices " +
                                     std::to_string(it->second) + " and " + std::to_string(v));
            return rep;
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool adjacent = g.has_edge(u, v);
            const bool unit = l1_distance(coords.coord[u], coords.coord[v]) == 1;
            if (adjacent && !unit) {
                rep.ok = false;
                rep.violations.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                         "} between grid points at L1 distance != 1");
                return rep;
            }
            if (!adjacent && unit) {
                rep.ok = false;
                rep.violations.push_back("missing edge {" + std::to_string(u) + "," +
                                         std::to_string(v) + "} at L1 distance 1");
                return rep;
            }
        }
    }
    return rep;
}

} // namespace tss
