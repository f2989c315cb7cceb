#include "tss/solve.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "tss/errors.hpp"

namespace tss {

bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vs) in[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

VCInstance unanimous_tss_to_vc(const TSSInstance& inst) {
    if (!classify_thresholds(inst).unanimous)
        throw contract_error("unanimous_tss_to_vc: thresholds are not unanimous");
    return VCInstance{inst.graph, inst.budget};
}

TSSInstance vc_to_unanimous_tss(const VCInstance& inst) {
    std::vector<int> t(inst.graph.vertex_count());
    for (int v = 0; v < inst.graph.vertex_count(); ++v) t[v] = inst.graph.degree(v);
    return TSSInstance(inst.graph, std::move(t), inst.k);
}

std::vector<int> min_vertex_cover_interval(const IntervalModel& model) {
    const int n = static_cast<int>(model.intervals.size());
    for (const auto& [lo, hi] : model.intervals)
        if (hi < lo) throw input_error("interval with hi < lo");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (model.intervals[a].second != model.intervals[b].second)
            return model.intervals[a].second < model.intervals[b].second;
        return a < b;
    });

    // Earliest-right-endpoint greedy picks a maximum independent set.
    std::vector<char> picked(n, 0);
    bool have_last = false;
    Rational last_hi;
    for (int idx : order) {
        if (have_last && model.intervals[idx].first <= last_hi) continue;
        picked[idx] = 1;
        last_hi = model.intervals[idx].second;
        have_last = true;
    }
    std::vector<int> cover;
    for (int v = 0; v < n; ++v)
        if (!picked[v]) cover.push_back(v);
    return cover;
}

namespace {

struct Bipartition {
    std::vector<int> side; // 0 = left (x+y even), 1 = right
};

} // namespace

std::vector<int> min_vertex_cover_grid(const Graph& g, const GridCoords& coords) {
    auto report = validate_grid_graph(g, coords);
    if (!report.ok)
        throw input_error("min_vertex_cover_grid: invalid grid certificate: " + report.first());

    const int n = g.vertex_count();
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v)
        side[v] = static_cast<int>(((coords.coord[v].x + coords.coord[v].y) % 2 + 2) % 2);

    // Kuhn's augmenting paths from the left class.
    std::vector<int> match(n, -1);
    std::vector<char> visited(n, 0);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int w : g.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match[w] == -1 || self(self, match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        if (side[u] != 0 || match[u] != -1) continue;
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, u);
    }

    // Koenig: alternate from unmatched left vertices; cover is
    // (left \ reached) united with (right n reached).
    std::vector<char> reached(n, 0);
    std::vector<int> stack;
    for (int u = 0; u < n; ++u)
        if (side[u] == 0 && match[u] == -1) {
            reached[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (reached[w] || match[u] == w) continue; // leave left via non-matching edges
            reached[w] = 1;
            if (match[w] != -1 && !reached[match[w]]) {
                reached[match[w]] = 1;
                stack.push_back(match[w]);
            }
        }
    }
    std::vector<int> cover;
    for (int v = 0; v < n; ++v) {
        if (side[v] == 0 && !reached[v]) cover.push_back(v);
        if (side[v] == 1 && reached[v]) cover.push_back(v);
    }
    return cover;
}

std::pair<int, std::vector<int>> solve_unanimous(const TSSInstance& inst,
                                                 const UnanimousCertificate& cert) {
    if (!classify_thresholds(inst).unanimous)
        throw contract_error("solve_unanimous: thresholds are not unanimous");

    std::vector<int> cover;
    if (cert.interval) {
        if (!(intersection_graph_intervals(*cert.interval) == inst.graph))
            throw input_error("interval certificate inconsistent with graph");
        cover = min_vertex_cover_interval(*cert.interval);
    } else if (cert.grid) {
        cover = min_vertex_cover_grid(inst.graph, *cert.grid); // validates internally
    } else {
        auto res = min_target_set_bruteforce(inst, inst.graph.vertex_count());
        return *res.best;
    }
    if (!is_target_set(inst, cover))
        throw contract_error("solve_unanimous: cover failed to verify as target set");
    return {static_cast<int>(cover.size()), cover};
}

namespace {

// Mutable working graph for the branch-and-bound MIS. Folding a degree-2
// vertex introduces a synthetic vertex, so ids can exceed the input size;
// fold records translate a solution of the reduced graph back up.
struct WorkGraph {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;
    int alive_count = 0;

    struct Fold {
        int v, a, b; // synthetic id's origin: picked -> {a,b}, else -> {v}
    };
    std::vector<std::pair<int, Fold>> folds; // (synthetic id, record), in creation order

    static WorkGraph from(const Graph& g) {
        WorkGraph w;
        const int n = g.vertex_count();
        w.adj.assign(n, {});
        for (int v = 0; v < n; ++v) w.adj[v] = g.neighbors(v);
        w.alive.assign(n, 1);
        w.alive_count = n;
        return w;
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void remove_vertex(int v) {
        for (int w : adj[v]) {
            auto& a = adj[w];
            a.erase(std::find(a.begin(), a.end(), v));
        }
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
    }

    void add_edge(int u, int v) {
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) return;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int add_vertex() {
        adj.emplace_back();
        alive.push_back(1);
        ++alive_count;
        return static_cast<int>(adj.size()) - 1;
    }
};

// Applies reductions exhaustively; vertices picked into the solution are
// appended to `picked` (synthetic ids included, unfolded later).
void reduce_exhaustively(WorkGraph& g, std::vector<int>& picked, int& gained) {
    bool changed = true;
    while (changed) {
        changed = false;
        const int sz = static_cast<int>(g.adj.size());
        for (int v = 0; v < sz && !changed; ++v) {
            if (!g.alive[v]) continue;
            const int d = g.degree(v);
            if (d == 0) {
                picked.push_back(v);
                ++gained;
                g.remove_vertex(v);
                changed = true;
            } else if (d == 1) {
                int u = g.adj[v][0];
                picked.push_back(v);
                ++gained;
                g.remove_vertex(u);
                g.remove_vertex(v);
                changed = true;
            } else if (d == 2) {
                int a = g.adj[v][0], b = g.adj[v][1];
                bool adjacent = std::find(g.adj[a].begin(), g.adj[a].end(), b) != g.adj[a].end();
                if (adjacent) {
                    // triangle: v dominates both neighbours
                    picked.push_back(v);
                    ++gained;
                    g.remove_vertex(a);
                    g.remove_vertex(b);
                    g.remove_vertex(v);
                } else {
                    // fold v,a,b into one synthetic vertex
                    std::vector<int> outer;
                    for (int w : g.adj[a])
                        if (w != v) outer.push_back(w);
                    for (int w : g.adj[b])
                        if (w != v) outer.push_back(w);
                    g.remove_vertex(a);
                    g.remove_vertex(b);
                    g.remove_vertex(v);
                    int f = g.add_vertex();
                    std::sort(outer.begin(), outer.end());
                    outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
                    for (int w : outer) g.add_edge(f, w);
                    g.folds.push_back({f, {v, a, b}});
                    ++gained; // one vertex of {v,a,b} beyond the outcome of f is always free
                }
                changed = true;
            }
        }
        if (changed) continue;

        // Domination: u adjacent to v with N[u] a subset of N[v] lets us drop v.
        for (int v = 0; v < static_cast<int>(g.adj.size()) && !changed; ++v) {
            if (!g.alive[v]) continue;
            for (int u : g.adj[v]) {
                if (g.degree(u) > g.degree(v)) continue;
                bool subset = true;
                for (int w : g.adj[u]) {
                    if (w == v) continue;
                    if (std::find(g.adj[v].begin(), g.adj[v].end(), w) == g.adj[v].end()) {
                        subset = false;
                        break;
                    }
                }
                if (subset) {
                    g.remove_vertex(v);
                    changed = true;
                    break;
                }
            }
        }
    }
}

struct BBState {
    int best = -1;
    std::vector<int> best_picked;
    std::vector<std::pair<int, WorkGraph::Fold>> best_folds;
};

void bb_search(WorkGraph g, std::vector<int> picked, int gained, BBState& state) {
    reduce_exhaustively(g, picked, gained);

    if (g.alive_count == 0) {
        if (gained > state.best) {
            state.best = gained;
            state.best_picked = picked;
            state.best_folds = g.folds;
        }
        return;
    }
    if (gained + g.alive_count <= state.best) return;

    int branch = -1, bd = -1;
    for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
        if (g.alive[v] && g.degree(v) > bd) {
            bd = g.degree(v);
            branch = v;
        }

    // include branch vertex
    {
        WorkGraph g2 = g;
        std::vector<int> p2 = picked;
        p2.push_back(branch);
        auto nbrs = g2.adj[branch];
        for (int w : nbrs) g2.remove_vertex(w);
        g2.remove_vertex(branch);
        bb_search(std::move(g2), std::move(p2), gained + 1, state);
    }
    // exclude branch vertex
    {
        g.remove_vertex(branch);
        bb_search(std::move(g), std::move(picked), gained, state);
    }
}

} // namespace

std::vector<int> max_independent_set_bb(const Graph& g) {
    const int n = g.vertex_count();
    WorkGraph wg = WorkGraph::from(g);

    BBState state;
    // Greedy min-degree incumbent so pruning has something to push against.
    {
        WorkGraph tmp = wg;
        std::vector<int> greedy;
        while (tmp.alive_count > 0) {
            int pick = -1, pd = INT_MAX;
            for (int v = 0; v < static_cast<int>(tmp.adj.size()); ++v)
                if (tmp.alive[v] && tmp.degree(v) < pd) {
                    pd = tmp.degree(v);
                    pick = v;
                }
            greedy.push_back(pick);
            auto nbrs = tmp.adj[pick];
            for (int w : nbrs) tmp.remove_vertex(w);
            tmp.remove_vertex(pick);
        }
        state.best = static_cast<int>(greedy.size()) - 1; // strict improvement required
        if (state.best < -1) state.best = -1;
    }

    bb_search(wg, {}, 0, state);

    // Unfold synthetic vertices, newest first.
    std::vector<char> in(state.best_folds.size() + n + 8, 0);
    std::vector<int> sol = state.best_picked;
    for (int v : sol)
        if (v < static_cast<int>(in.size())) in[v] = 1;
    for (auto it = state.best_folds.rbegin(); it != state.best_folds.rend(); ++it) {
        const auto& [fid, rec] = *it;
        bool has = fid < static_cast<int>(in.size()) && in[fid];
        if (has) {
            in[fid] = 0;
            in[rec.a] = 1;
            in[rec.b] = 1;
        } else {
            in[rec.v] = 1;
        }
    }
    std::vector<int> result;
    for (int v = 0; v < n; ++v)
        if (v < static_cast<int>(in.size()) && in[v]) result.push_back(v);

    if (!is_independent_set(g, result))
        throw contract_error("max_independent_set_bb: produced a dependent set");
    return result;
}

} // namespace tss
