#include "tss/gen.hpp"

#include <algorithm>
#include <map>

#include "tss/errors.hpp"

namespace tss {

Graph random_graph(int n, double edge_prob, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

std::vector<int> random_thresholds(const Graph& g, ThresholdMode mode, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) {
        const int deg = g.degree(v);
        switch (mode) {
        case ThresholdMode::Uniform:
            // may exceed the degree; preprocessing territory
            t[v] = static_cast<int>(rng.uniform(0, deg + 1));
            break;
        case ThresholdMode::Capped:
            t[v] = static_cast<int>(rng.uniform(0, deg));
            break;
        case ThresholdMode::Unanimous:
            t[v] = deg;
            break;
        case ThresholdMode::Majority:
            t[v] = (deg + 1) / 2;
            break;
        }
    }
    return t;
}

TSSInstance random_instance(int n, double edge_prob, ThresholdMode mode, Rng& rng) {
    Graph g = random_graph(n, edge_prob, rng);
    auto t = random_thresholds(g, mode, rng);
    int k = static_cast<int>(rng.uniform(0, n));
    return TSSInstance(std::move(g), std::move(t), k);
}

std::pair<Graph, GridCoords> random_grid_graph(int width, int height, double keep_prob,
                                               Rng& rng) {
    std::map<GridPoint, int> id;
    std::vector<GridPoint> pts;
    for (long long x = 0; x < width; ++x)
        for (long long y = 0; y < height; ++y)
            if (rng.chance(keep_prob)) pts.push_back({x, y});

    // drop isolated points so downstream majority instances have deg >= 1
    auto has = [&](GridPoint p) {
        return std::binary_search(pts.begin(), pts.end(), p);
    };
    std::vector<GridPoint> kept;
    for (auto p : pts) {
        if (has({p.x + 1, p.y}) || has({p.x - 1, p.y}) || has({p.x, p.y + 1}) ||
            has({p.x, p.y - 1}))
            kept.push_back(p);
    }
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) id[kept[i]] = i;

    std::vector<Edge> edges;
    for (const auto& [p, i] : id) {
        auto it = id.find({p.x + 1, p.y});
        if (it != id.end()) edges.push_back({i, it->second});
        it = id.find({p.x, p.y + 1});
        if (it != id.end()) edges.push_back({i, it->second});
    }
    GridCoords coords{kept};
    return {Graph(static_cast<int>(kept.size()), std::move(edges)), std::move(coords)};
}

Graph random_planar_deg4_graph(int width, int height, double keep_prob, Rng& rng) {
    auto [g, coords] = random_grid_graph(width, height, 0.85, rng);
    // thin the edge set; the result is a grid subgraph, so planar with max deg 4
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (rng.chance(keep_prob)) edges.push_back(e);
    // keep only non-isolated vertices, renumbered
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> remap(g.vertex_count(), -1);
    int m = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] > 0) remap[v] = m++;
    for (auto& [u, v] : edges) {
        u = remap[u];
        v = remap[v];
    }
    return Graph(m, std::move(edges));
}

IntervalModel random_interval_model(int n, int coord_range, Rng& rng) {
    IntervalModel model;
    for (int i = 0; i < n; ++i) {
        Rational a(rng.uniform(0, coord_range), rng.uniform(1, 4));
        Rational len(rng.uniform(0, coord_range), rng.uniform(1, 4));
        model.intervals.push_back({a, a + len});
    }
    return model;
}

CnfFormula random_restricted_3sat(int num_vars, Rng& rng) {
    if (num_vars < 1) throw input_error("need at least one variable");
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<int> pool;
        for (int x = 1; x <= num_vars; ++x) {
            pool.push_back(x);
            pool.push_back(x);
            pool.push_back(-x);
        }
        rng.shuffle(pool);

        CnfFormula f;
        f.num_vars = num_vars;
        std::vector<int> clause;
        std::size_t target = static_cast<std::size_t>(rng.uniform(1, 3));
        bool stuck = false;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            int lit = pool[i];
            auto dupe = [&](int l) {
                return std::find(clause.begin(), clause.end(), l) != clause.end() ||
                       std::find(clause.begin(), clause.end(), -l) != clause.end();
            };
            if (dupe(lit)) {
                // swap with a later usable literal
                bool swapped = false;
                for (std::size_t j = i + 1; j < pool.size(); ++j)
                    if (!dupe(pool[j])) {
                        std::swap(pool[i], pool[j]);
                        lit = pool[i];
                        swapped = true;
                        break;
                    }
                if (!swapped) {
                    stuck = true;
                    break;
                }
            }
            clause.push_back(lit);
            if (clause.size() == target || i + 1 == pool.size()) {
                f.clauses.push_back(clause);
                clause.clear();
                target = static_cast<std::size_t>(rng.uniform(1, 3));
            }
        }
        if (stuck) continue;
        if (validate_restricted_3sat(f).ok) return f;
    }
    throw contract_error("random_restricted_3sat: could not build a valid formula");
}

} // namespace tss
