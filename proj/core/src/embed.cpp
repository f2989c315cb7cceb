#include "tss/embed.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "tss/errors.hpp"
#include "tss/gen.hpp"

namespace tss {

namespace {

std::string pt(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string edge_name(Edge e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

using Segment = std::pair<GridPoint, GridPoint>; // normalized: first < second

Segment seg(GridPoint a, GridPoint b) { return a < b ? Segment{a, b} : Segment{b, a}; }

} // namespace

ValidationReport validate_embedding(const Graph& g, const RectilinearEmbedding& emb) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(emb.vpoint.size()) != n || static_cast<int>(emb.epath.size()) != m)
        throw input_error("embedding must cover all vertices and edges");

    ValidationReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    // i) injectivity
    std::map<GridPoint, int> vat;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = vat.insert({emb.vpoint[v], v});
        if (!fresh)
            flag("condition i: vertices " + std::to_string(it->second) + " and " +
                 std::to_string(v) + " share point " + pt(emb.vpoint[v]));
    }

    // ii) simple unit-step chains, iii) endpoints
    for (int ei = 0; ei < m; ++ei) {
        const Edge e = g.edges()[ei];
        const auto& path = emb.epath[ei];
        if (path.size() < 2) {
            flag("condition ii: edge " + edge_name(e) + " has a chain of fewer than 2 points");
            continue;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (l1_distance(path[i], path[i + 1]) != 1)
                flag("condition ii: edge " + edge_name(e) + " has a non-unit step " +
                     pt(path[i]) + " -> " + pt(path[i + 1]));
        std::set<GridPoint> distinct(path.begin(), path.end());
        if (distinct.size() != path.size())
            flag("condition ii: edge " + edge_name(e) + " chain revisits a point");

        const GridPoint a = emb.vpoint[e.first], b = emb.vpoint[e.second];
        const GridPoint f = path.front(), l = path.back();
        if (!((f == a && l == b) || (f == b && l == a)))
            flag("condition iii: edge " + edge_name(e) + " chain endpoints " + pt(f) + "," +
                 pt(l) + " do not match vertex points");
    }

    // iv) pairwise disjointness except shared endpoints, points and segments
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Edge e = g.edges()[i], f = g.edges()[j];
            std::set<GridPoint> allowed;
            for (int u : {e.first, e.second})
                if (u == f.first || u == f.second) allowed.insert(emb.vpoint[u]);

            std::set<GridPoint> pi(emb.epath[i].begin(), emb.epath[i].end());
            for (const auto& p : emb.epath[j])
                if (pi.count(p) && !allowed.count(p))
                    flag("condition iv: edges " + edge_name(e) + " and " + edge_name(f) +
                         " meet at " + pt(p));

            std::set<Segment> si;
            for (std::size_t s = 0; s + 1 < emb.epath[i].size(); ++s)
                si.insert(seg(emb.epath[i][s], emb.epath[i][s + 1]));
            for (std::size_t s = 0; s + 1 < emb.epath[j].size(); ++s)
                if (si.count(seg(emb.epath[j][s], emb.epath[j][s + 1])))
                    flag("condition iv: edges " + edge_name(e) + " and " + edge_name(f) +
                         " share a unit segment");
        }
    }
    return rep;
}

long long embedding_area(const RectilinearEmbedding& emb) {
    long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    auto absorb = [&](GridPoint p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
        } else {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    };
    for (auto p : emb.vpoint) absorb(p);
    for (const auto& path : emb.epath)
        for (auto p : path) absorb(p);
    if (first) return 0;
    return (xmax - xmin) * (ymax - ymin);
}

namespace {

struct Router {
    const Graph& g;
    long long width;
    long long node_budget;
    std::vector<char> used;      // width*width occupancy
    std::vector<int> bfs_prev;   // flat predecessor array
    std::vector<int> bfs_seen;   // visit stamps so BFS state never needs clearing
    std::vector<int> bfs_queue;
    int bfs_epoch = 0;
    std::vector<GridPoint> vpoint;
    std::vector<char> placed;
    std::vector<std::vector<GridPoint>> epath; // aligned with g.edges()
    std::map<Edge, int> edge_index;

    Router(const Graph& gr, long long w, long long budget)
        : g(gr), width(w), node_budget(budget),
          used(static_cast<std::size_t>(w * w), 0),
          bfs_prev(static_cast<std::size_t>(w * w), -1),
          bfs_seen(static_cast<std::size_t>(w * w), 0), vpoint(gr.vertex_count()),
          placed(gr.vertex_count(), 0), epath(gr.edge_count()) {
        for (int i = 0; i < gr.edge_count(); ++i) edge_index[gr.edges()[i]] = i;
    }

    bool inside(GridPoint p) const {
        return p.x >= 0 && p.y >= 0 && p.x < width && p.y < width;
    }
    int cell(GridPoint p) const { return static_cast<int>(p.y * width + p.x); }
    GridPoint point(int c) const { return {c % width, c / width}; }
    bool is_used(GridPoint p) const { return used[static_cast<std::size_t>(cell(p))] != 0; }
    void mark(GridPoint p, bool v) { used[static_cast<std::size_t>(cell(p))] = v ? 1 : 0; }

    // BFS over unused cells from a to b; returns the path including endpoints.
    bool route(GridPoint a, GridPoint b, std::vector<GridPoint>& out) {
        ++bfs_epoch;
        const int start = cell(a), goal = cell(b);
        bfs_queue.clear();
        bfs_queue.push_back(start);
        bfs_seen[static_cast<std::size_t>(start)] = bfs_epoch;
        bfs_prev[static_cast<std::size_t>(start)] = start;
        for (std::size_t head = 0; head < bfs_queue.size(); ++head) {
            if (--node_budget <= 0) return false;
            const int c = bfs_queue[head];
            if (c == goal) {
                out.clear();
                for (int cur = goal;; cur = bfs_prev[static_cast<std::size_t>(cur)]) {
                    out.push_back(point(cur));
                    if (cur == start) break;
                }
                std::reverse(out.begin(), out.end());
                return true;
            }
            const GridPoint p = point(c);
            const GridPoint steps[4] = {
                {p.x, p.y + 1}, {p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y - 1}};
            for (GridPoint s : steps) {
                if (!inside(s)) continue;
                const int sc = cell(s);
                if (bfs_seen[static_cast<std::size_t>(sc)] == bfs_epoch) continue;
                if (sc != goal && used[static_cast<std::size_t>(sc)]) continue;
                bfs_seen[static_cast<std::size_t>(sc)] = bfs_epoch;
                bfs_prev[static_cast<std::size_t>(sc)] = c;
                bfs_queue.push_back(sc);
            }
        }
        return false;
    }

    bool connect(int u, int v) {
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        std::vector<GridPoint> path;
        if (!route(vpoint[e.first], vpoint[e.second], path)) return false;
        for (auto p : path) mark(p, true);
        epath[edge_index[e]] = std::move(path);
        return true;
    }

    void disconnect(int u, int v) {
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        auto& path = epath[edge_index[e]];
        for (std::size_t i = 1; i + 1 < path.size(); ++i) mark(path[i], false);
        path.clear();
    }
};

std::vector<int> placement_order(const Graph& g, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<int> order, start(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) start[i] = i;
    rng.shuffle(start);
    for (int s : start) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            std::vector<int> nb = g.neighbors(v);
            rng.shuffle(nb);
            for (int w : nb)
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return order;
}

} // namespace

RectilinearEmbedding compute_embedding(const Graph& g, const EmbedOptions& opts) {
    const int n = g.vertex_count();
    if (g.max_degree() > 4)
        throw embed_error("compute_embedding: max degree exceeds 4, not embeddable");
    if (n == 0) return RectilinearEmbedding{};

    std::string last_failure = "no attempt run";
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt) + 1);
        const long long width = 3LL * n + 8 + 2LL * n * (attempt / 12);
        Router router(g, width, opts.node_budget_per_attempt);

        std::vector<int> order = placement_order(g, rng);
        bool failed = false;
        bool first_component = true;

        for (int v : order) {
            // candidate cells ordered by distance to placed neighbours
            std::vector<int> placed_nbrs;
            for (int w : g.neighbors(v))
                if (router.placed[w]) placed_nbrs.push_back(w);

            GridPoint center{width / 2, width / 2};
            if (!placed_nbrs.empty()) {
                long long sx = 0, sy = 0;
                for (int w : placed_nbrs) {
                    sx += router.vpoint[w].x;
                    sy += router.vpoint[w].y;
                }
                center = {sx / static_cast<long long>(placed_nbrs.size()),
                          sy / static_cast<long long>(placed_nbrs.size())};
            } else if (!first_component) {
                // fresh component: keep clear of everything drawn so far
                center = {width / 2 + static_cast<long long>(rng.uniform(-n, n)),
                          width / 2 + static_cast<long long>(rng.uniform(-n, n))};
            }

            std::vector<GridPoint> candidates;
            for (long long radius = 0; radius < width && candidates.size() < 48; ++radius) {
                std::vector<GridPoint> ring;
                for (long long dx = -radius; dx <= radius; ++dx) {
                    long long dy = radius - std::abs(dx);
                    ring.push_back({center.x + dx, center.y + dy});
                    if (dy != 0) ring.push_back({center.x + dx, center.y - dy});
                }
                rng.shuffle(ring);
                for (auto p : ring)
                    if (router.inside(p) && !router.is_used(p)) candidates.push_back(p);
            }

            bool ok = false;
            for (auto cand : candidates) {
                router.vpoint[v] = cand;
                router.mark(cand, true);
                std::vector<int> routed;
                bool all = true;
                for (int w : placed_nbrs) {
                    if (router.connect(v, w)) {
                        routed.push_back(w);
                    } else {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    ok = true;
                    break;
                }
                for (int w : routed) router.disconnect(v, w);
                router.mark(cand, false);
            }
            if (!ok) {
                last_failure = "attempt " + std::to_string(attempt) + ": could not place vertex " +
                               std::to_string(v) + " (width " + std::to_string(width) + ")";
                failed = true;
                break;
            }
            router.placed[v] = 1;
            first_component = false;
        }
        if (failed) continue;

        RectilinearEmbedding emb{router.vpoint, router.epath};
        // orient each chain from the smaller endpoint
        for (int i = 0; i < g.edge_count(); ++i)
            if (!emb.epath[i].empty() && emb.epath[i].front() != emb.vpoint[g.edges()[i].first])
                std::reverse(emb.epath[i].begin(), emb.epath[i].end());
        if (validate_embedding(g, emb).ok) return emb;
        last_failure = "attempt " + std::to_string(attempt) + ": validator rejected the drawing";
    }
    throw embed_error("compute_embedding: no embedding found (" + last_failure + ")");
}

std::vector<GridPoint> polyline_interior_points(const Graph& g, const RectilinearEmbedding& emb,
                                                Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    const auto& edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        throw input_error("polyline_interior_points: unknown edge");
    const auto& path = emb.epath[static_cast<std::size_t>(it - edges.begin())];
    if (path.size() < 2) throw input_error("polyline_interior_points: malformed chain");
    return std::vector<GridPoint>(path.begin() + 1, path.end() - 1);
}

} // namespace tss
