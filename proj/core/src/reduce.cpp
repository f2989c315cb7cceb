#include "tss/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tss/errors.hpp"
#include "tss/solve.hpp"

namespace tss {

namespace {

std::string edge_tag(Edge e) {
    return std::to_string(e.first) + "," + std::to_string(e.second);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<int> choose_w(int chain_len) {
    if (chain_len < 2) throw input_error("choose_w: chain length must be >= 2");
    const int g = chain_len;
    std::vector<int> w(static_cast<std::size_t>(g - 1), 6);
    switch (g % 6) {
    case 0: w[0] = 8; break;
    case 1: w[0] = 7; break;
    case 2: break;
    case 3: w[0] = 9; w[1] = 8; break;
    case 4: w[0] = 8; w[1] = 8; break;
    case 5: w[0] = 9; break;
    }
    long long y = g - 2;
    for (int x : w) y += x;
    if (y % 6 != 0) throw contract_error("choose_w: residue table broke the mod-6 invariant");
    return w;
}

std::vector<GeoPoint> chain_centers(GridPoint p, GridPoint q, int l) {
    if (l < 6 || l > 9) throw input_error("chain_centers: l must be in {6,7,8,9}");
    if (l1_distance(p, q) != 1) throw input_error("chain_centers: points are not adjacent");
    std::vector<GeoPoint> centers;
    const Rational px(p.x), py(p.y);
    const Rational dx = Rational(q.x) - px, dy = Rational(q.y) - py;
    for (int j = 1; j <= l; ++j) {
        const Rational a(5LL * j + l - 6, 7LL * (l - 1));
        centers.push_back({px + a * dx, py + a * dy});
    }
    return centers;
}

// ---------------------------------------------------------------- SAT gadgets

namespace {

struct SatBuild {
    std::vector<Edge> edges;
    std::vector<int> thresholds;
    std::vector<std::string> provenance;
    std::vector<VariableGadget> gadgets;
    std::vector<int> clause_vertices;
    int next = 0;

    int add(int t, std::string tag) {
        thresholds.push_back(t);
        provenance.push_back(std::move(tag));
        return next++;
    }
    void link(int u, int v) { edges.push_back({u, v}); }
};

// Clause vertices first (y_j = j), then one 11-vertex block per variable.
SatBuild build_sat_base(const CnfFormula& f) {
    auto report = validate_restricted_3sat(f);
    if (!report.ok)
        throw contract_error("sat reduction requires a restricted formula: " + report.first());

    SatBuild b;
    const int m = f.num_clauses();
    for (int j = 0; j < m; ++j) {
        b.clause_vertices.push_back(b.add(1, "clause:" + std::to_string(j)));
    }
    for (int i = 0; i < f.num_vars; ++i) {
        const std::string gi = "gadget:" + std::to_string(i) + ":";
        VariableGadget gd;
        gd.anchor_true = b.add(2, gi + "T");
        gd.anchor_false = b.add(2, gi + "F");
        gd.lit_pos = b.add(2, gi + "t");
        gd.lit_neg = b.add(1, gi + "f");
        gd.ring_a = b.add(2, gi + "a");
        gd.ring_b = b.add(1, gi + "b");
        gd.ring_c = b.add(1, gi + "c");
        gd.ring_d = b.add(1, gi + "d");
        gd.path[0] = b.add(1, gi + "p1");
        gd.path[1] = b.add(1, gi + "p2");
        gd.path[2] = b.add(1, gi + "p3");

        b.link(gd.ring_a, gd.lit_pos);
        b.link(gd.ring_a, gd.ring_b);
        b.link(gd.ring_a, gd.ring_c);
        b.link(gd.ring_c, gd.ring_d);
        b.link(gd.ring_b, gd.ring_d);
        b.link(gd.ring_d, gd.anchor_true);
        b.link(gd.anchor_true, gd.anchor_false);
        b.link(gd.lit_pos, gd.anchor_true);
        b.link(gd.lit_neg, gd.path[0]);
        b.link(gd.path[0], gd.path[1]);
        b.link(gd.path[1], gd.path[2]);
        b.link(gd.path[2], gd.anchor_false);
        b.gadgets.push_back(gd);
    }
    for (int j = 0; j < m; ++j) {
        for (int lit : f.clauses[j]) {
            const auto& gd = b.gadgets[static_cast<std::size_t>(std::abs(lit)) - 1];
            b.link(lit > 0 ? gd.lit_pos : gd.lit_neg, b.clause_vertices[j]);
        }
    }
    return b;
}

} // namespace

ReductionArtifact sat_to_planar_tss(const CnfFormula& f) {
    SatBuild b = build_sat_base(f);
    ReductionArtifact art;
    art.reduction = "sat2tss";
    art.tss = TSSInstance(Graph(b.next, b.edges), b.thresholds, f.num_vars);
    art.provenance = std::move(b.provenance);
    art.gadgets = std::move(b.gadgets);
    art.clause_vertices = std::move(b.clause_vertices);
    art.budget = {"k=n", std::nullopt, f.num_vars};
    art.source_formula = f;
    art.source_n = f.num_vars;

    if (art.tss->graph.vertex_count() != f.num_clauses() + 11 * f.num_vars)
        throw contract_error("sat2tss: vertex count is not m+11n");
    if (art.tss->graph.max_degree() > 4)
        throw contract_error("sat2tss: max degree exceeds 4");
    return art;
}

std::vector<int> assignment_to_target_set(const ReductionArtifact& art, const Assignment& a) {
    if (static_cast<int>(a.size()) != static_cast<int>(art.gadgets.size()))
        throw input_error("assignment size does not match variable count");
    std::vector<int> S;
    for (std::size_t i = 0; i < art.gadgets.size(); ++i)
        S.push_back(a[i] ? art.gadgets[i].anchor_true : art.gadgets[i].anchor_false);
    return S;
}

Assignment target_set_to_assignment(const ReductionArtifact& art, const std::vector<int>& S) {
    const TSSInstance& inst = *art.tss;
    const int n = static_cast<int>(art.gadgets.size());
    if (static_cast<int>(S.size()) > n)
        throw contract_error("target_set_to_assignment: more seeds than variables");
    if (!is_target_set(inst, S))
        throw contract_error("target_set_to_assignment: input is not a target set");

    Assignment a(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : S) {
        int var = -1;
        for (int i = 0; i < n; ++i) {
            const auto& gd = art.gadgets[static_cast<std::size_t>(i)];
            const int members[11] = {gd.anchor_true, gd.anchor_false, gd.lit_pos, gd.lit_neg,
                                     gd.ring_a,      gd.ring_b,       gd.ring_c,  gd.ring_d,
                                     gd.path[0],     gd.path[1],      gd.path[2]};
            if (std::find(std::begin(members), std::end(members), v) != std::end(members)) {
                var = i;
                break;
            }
        }
        if (var < 0)
            throw contract_error("target_set_to_assignment: seed outside every gadget");
        if (seen[static_cast<std::size_t>(var)])
            throw contract_error("target_set_to_assignment: two seeds in one gadget");
        seen[static_cast<std::size_t>(var)] = 1;

        // proof normalization: path side reads false, ring side reads true
        const auto& gd = art.gadgets[static_cast<std::size_t>(var)];
        const bool false_side = v == gd.anchor_false || v == gd.lit_neg || v == gd.path[0] ||
                                v == gd.path[1] || v == gd.path[2];
        a[static_cast<std::size_t>(var)] = false_side ? 0 : 1;
    }
    for (char s : seen)
        if (!s) throw contract_error("target_set_to_assignment: a gadget has no seed");

    if (art.source_formula && !satisfies(*art.source_formula, a))
        throw contract_error("target_set_to_assignment: produced assignment does not satisfy");
    return a;
}

ReductionArtifact sat_to_planar_majority_tss(const CnfFormula& f) {
    SatBuild b = build_sat_base(f);
    ReductionArtifact art;
    art.reduction = "sat2majority";

    std::vector<std::array<int, 3>> cherries;
    std::vector<std::pair<int, int>> leaves;
    auto attach_cherry = [&](int host) {
        const int idx = static_cast<int>(cherries.size());
        const std::string ct = "cherry:" + std::to_string(idx) + ":";
        int gm = b.add(2, ct + "m");
        int gl = b.add(1, ct + "l");
        int gr = b.add(1, ct + "r");
        b.link(host, gm);
        b.link(gm, gl);
        b.link(gm, gr);
        b.thresholds[host] += 1;
        cherries.push_back({gm, gl, gr});
    };

    for (std::size_t i = 0; i < b.gadgets.size(); ++i) {
        attach_cherry(b.gadgets[i].ring_d);
        int leaf = b.add(1, "leaf:" + std::to_string(b.gadgets[i].anchor_false));
        b.link(b.gadgets[i].anchor_false, leaf);
        leaves.push_back({leaf, b.gadgets[i].anchor_false});
    }
    int beta = 0;
    for (int j = 0; j < f.num_clauses(); ++j) {
        if (f.clauses[j].size() == 3) {
            ++beta;
            attach_cherry(b.clause_vertices[static_cast<std::size_t>(j)]);
        }
    }

    const int n = f.num_vars;
    const int alpha = n + beta;
    art.alpha = alpha;
    art.beta = beta;
    art.tss = TSSInstance(Graph(b.next, b.edges), b.thresholds, 2 * n + beta);
    art.provenance = std::move(b.provenance);
    art.gadgets = std::move(b.gadgets);
    art.clause_vertices = std::move(b.clause_vertices);
    art.cherries = std::move(cherries);
    art.leaves = std::move(leaves);
    art.budget = {"k=2n+beta", std::nullopt, 2 * n + beta};
    art.source_formula = f;
    art.source_n = n;

    if (!classify_thresholds(*art.tss).majority)
        throw contract_error("sat2majority: output is not majority-classified");
    if (art.tss->graph.max_degree() > 4)
        throw contract_error("sat2majority: max degree exceeds 4");
    return art;
}

// ----------------------------------------------------------- subdivisions

SubdividedInstance subdivide_edge_once(const TSSInstance& inst, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!inst.graph.has_edge(e.first, e.second))
        throw input_error("subdivide_edge_once: unknown edge");

    const int fresh = inst.graph.vertex_count();
    std::vector<Edge> edges;
    for (const auto& ed : inst.graph.edges())
        if (ed != e) edges.push_back(ed);
    edges.push_back({e.first, fresh});
    edges.push_back({e.second, fresh});
    std::vector<int> t = inst.thresholds;
    t.push_back(1);

    SubdividedInstance out;
    out.instance = TSSInstance(Graph(fresh + 1, std::move(edges)), std::move(t), inst.budget);
    out.new_vertex = fresh;
    out.edge = e;
    return out;
}

std::vector<int> subdivide_lift_witness(const TSSInstance& source, const SubdividedInstance& sub,
                                        const std::vector<int>& S) {
    if (!is_target_set(source, S))
        throw contract_error("subdivide_lift_witness: input is not a target set");
    if (!is_target_set(sub.instance, S))
        throw contract_error("subdivide_lift_witness: seed stopped working after subdivision");
    return S;
}

namespace {

// Undo one subdivision: move a seed off `fresh` onto one of the edge's
// endpoints (or any unseeded vertex when both endpoints are seeded).
std::vector<int> undo_subdivision_seed(std::vector<int> seed, int fresh, Edge e, int old_n) {
    std::set<int> s(seed.begin(), seed.end());
    if (s.erase(fresh)) {
        if (!s.count(e.first)) {
            s.insert(e.first);
        } else if (!s.count(e.second)) {
            s.insert(e.second);
        } else {
            for (int v = 0; v < old_n; ++v)
                if (!s.count(v)) {
                    s.insert(v);
                    break;
                }
            // all of V(G) seeded: the smaller set is still a target set
        }
    }
    return std::vector<int>(s.begin(), s.end());
}

} // namespace

std::vector<int> subdivide_project_witness(const TSSInstance& source,
                                           const SubdividedInstance& sub,
                                           const std::vector<int>& S_out) {
    if (!is_target_set(sub.instance, S_out))
        throw contract_error("subdivide_project_witness: input is not a target set");
    auto S = undo_subdivision_seed(S_out, sub.new_vertex, sub.edge,
                                   source.graph.vertex_count());
    if (!is_target_set(source, S))
        throw contract_error("subdivide_project_witness: projection is not a target set");
    return S;
}

// ------------------------------------------------- planar -> grid reduction

ReductionArtifact planar_tss_to_grid_tss(const TSSInstance& inst,
                                         const RectilinearEmbedding& emb) {
    auto report = validate_embedding(inst.graph, emb);
    if (!report.ok)
        throw input_error("planar_tss_to_grid_tss: invalid embedding: " + report.first());
    if (inst.graph.max_degree() > 4)
        throw input_error("planar_tss_to_grid_tss: max degree exceeds 4");

    const int n = inst.graph.vertex_count();
    ReductionArtifact art;
    art.reduction = "planar2grid";
    art.source_n = n;
    art.source_instance = inst;

    std::vector<int> thresholds = inst.thresholds;
    std::vector<GridPoint> points;
    std::vector<std::string> prov;
    for (int v = 0; v < n; ++v) {
        points.push_back({2 * emb.vpoint[v].x, 2 * emb.vpoint[v].y});
        prov.push_back("original:" + std::to_string(v));
    }
    int next = n;

    // phase 1: subdivide each edge at the interior points of its chain
    std::vector<std::vector<int>> route_vertices; // per edge: u, interior..., v
    std::vector<Edge> phase1_edges;
    for (int ei = 0; ei < inst.graph.edge_count(); ++ei) {
        const Edge e = inst.graph.edges()[ei];
        const auto& path = emb.epath[ei];
        std::vector<int> route{e.first};
        int left = e.first;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int fresh = next++;
            thresholds.push_back(1);
            points.push_back({2 * path[i].x, 2 * path[i].y});
            prov.push_back("embed_point:" + edge_tag(e) + ":" + std::to_string(i - 1));
            art.history.push_back({fresh, left, e.second});
            route.push_back(fresh);
            left = fresh;
        }
        route.push_back(e.second);
        route_vertices.push_back(route);
        for (std::size_t i = 0; i + 1 < route.size(); ++i)
            phase1_edges.push_back({route[i], route[i + 1]});
    }

    // phase 2: subdivide every edge of the intermediate graph exactly once;
    // with doubled coordinates the midpoints are integral
    std::vector<Edge> final_edges;
    for (int ei = 0; ei < inst.graph.edge_count(); ++ei) {
        const Edge e = inst.graph.edges()[ei];
        const auto& route = route_vertices[static_cast<std::size_t>(ei)];
        for (std::size_t i = 0; i + 1 < route.size(); ++i) {
            int a = route[i], b = route[i + 1];
            int mid = next++;
            thresholds.push_back(1);
            points.push_back({(points[a].x + points[b].x) / 2,
                              (points[a].y + points[b].y) / 2});
            prov.push_back("subdivision:" + edge_tag(e) + ":" + std::to_string(i));
            art.history.push_back({mid, a, b});
            final_edges.push_back({a, mid});
            final_edges.push_back({mid, b});
        }
    }

    art.tss = TSSInstance(Graph(next, std::move(final_edges)), std::move(thresholds),
                          inst.budget);
    art.coords = GridCoords{std::move(points)};
    art.provenance = std::move(prov);
    art.budget = {"k'=k", inst.budget, inst.budget};

    auto grid_report = validate_grid_graph(art.tss->graph, *art.coords);
    if (!grid_report.ok)
        throw contract_error("planar_tss_to_grid_tss: output is not a grid graph: " +
                             grid_report.first());
    return art;
}

std::vector<int> grid_lift_witness(const ReductionArtifact& art, const std::vector<int>& S) {
    if (art.source_instance && !is_target_set(*art.source_instance, S))
        throw contract_error("grid_lift_witness: input is not a target set of the source");
    if (!is_target_set(*art.tss, S))
        throw contract_error("grid_lift_witness: seed stopped working after subdivision");
    return S;
}

std::vector<int> grid_project_witness(const ReductionArtifact& art,
                                      const std::vector<int>& S_out) {
    if (!is_target_set(*art.tss, S_out))
        throw contract_error("grid_project_witness: input is not a target set");
    std::vector<int> S = S_out;
    for (auto it = art.history.rbegin(); it != art.history.rend(); ++it) {
        const auto& [fresh, left, right] = *it;
        S = undo_subdivision_seed(std::move(S), fresh, {left, right}, fresh);
    }
    if (art.source_instance && !is_target_set(*art.source_instance, S))
        throw contract_error("grid_project_witness: projection is not a target set");
    return S;
}

// -------------------------------------------------------- majority transform

ReductionArtifact majority_transform(const TSSInstance& inst) {
    const int n = inst.graph.vertex_count();
    for (int v = 0; v < n; ++v)
        if (inst.thresholds[v] > inst.graph.degree(v))
            throw contract_error(
                "majority_transform: thresholds exceed degrees, run preprocessing first");

    ReductionArtifact art;
    art.reduction = "majority";
    art.source_n = n;
    art.source_instance = inst;

    std::vector<Edge> edges = inst.graph.edges();
    std::vector<int> t = inst.thresholds;
    std::vector<std::string> prov;
    for (int v = 0; v < n; ++v) prov.push_back("original:" + std::to_string(v));
    int next = n;

    for (int v = 0; v < n; ++v) {
        const int deg = inst.graph.degree(v);
        const int maj = (deg + 1) / 2;
        if (inst.thresholds[v] > maj) {
            const int extra = 2 * inst.thresholds[v] - deg;
            for (int i = 0; i < extra; ++i) {
                int leaf = next++;
                t.push_back(1);
                prov.push_back("leaf:" + std::to_string(v));
                edges.push_back({v, leaf});
                art.leaves.push_back({leaf, v});
            }
        } else if (inst.thresholds[v] < maj) {
            const int extra = deg - 2 * inst.thresholds[v];
            for (int i = 0; i < extra; ++i) {
                const int idx = static_cast<int>(art.cherries.size());
                const std::string ct = "cherry:" + std::to_string(idx) + ":";
                int gm = next++;
                t.push_back(2);
                prov.push_back(ct + "m");
                int gl = next++;
                t.push_back(1);
                prov.push_back(ct + "l");
                int gr = next++;
                t.push_back(1);
                prov.push_back(ct + "r");
                edges.push_back({v, gm});
                edges.push_back({gm, gl});
                edges.push_back({gm, gr});
                art.cherries.push_back({gm, gl, gr});
            }
            t[v] += extra;
        }
    }

    art.alpha = static_cast<int>(art.cherries.size());
    art.tss = TSSInstance(Graph(next, std::move(edges)), std::move(t),
                          inst.budget + art.alpha);
    art.provenance = std::move(prov);
    art.budget = {"k'=k+alpha", inst.budget, inst.budget + art.alpha};

    if (!classify_thresholds(*art.tss).majority)
        throw contract_error("majority_transform: output is not majority-classified");
    return art;
}

std::vector<int> majority_lift_witness(const ReductionArtifact& art, const std::vector<int>& S) {
    std::vector<int> lifted = S;
    for (const auto& ch : art.cherries) lifted.push_back(ch[0]);
    lifted = sorted_unique(std::move(lifted));
    if (!is_target_set(*art.tss, lifted))
        throw contract_error("majority_lift_witness: lifted seed is not a target set");
    return lifted;
}

std::vector<int> majority_project_witness(const ReductionArtifact& art,
                                          const std::vector<int>& S_out) {
    const TSSInstance& big = *art.tss;
    if (!is_target_set(big, S_out))
        throw contract_error("majority_project_witness: input is not a target set");
    if (static_cast<int>(S_out.size()) > big.budget)
        throw contract_error("majority_project_witness: seed exceeds the transformed budget");

    std::set<int> s(S_out.begin(), S_out.end());
    // Move leaf seeds onto their host (drop when the host is already seeded).
    for (const auto& [leaf, host] : art.leaves) {
        if (s.erase(leaf) && !s.count(host)) s.insert(host);
    }
    // Move cherry-end seeds onto the cherry middle the same way.
    for (const auto& ch : art.cherries) {
        bool had_end = false;
        if (s.erase(ch[1])) had_end = true;
        if (s.erase(ch[2])) had_end = true;
        if (had_end) s.insert(ch[0]);
    }
    // Every cherry must still hold a seed; the middles are the only
    // candidates left inside the gadgets.
    int in_cherries = 0;
    for (const auto& ch : art.cherries) {
        if (!s.count(ch[0]))
            throw contract_error("majority_project_witness: a cherry lost all its seeds");
        ++in_cherries;
        s.erase(ch[0]);
    }

    std::vector<int> S(s.begin(), s.end());
    for (int v : S)
        if (v >= art.source_n)
            throw contract_error("majority_project_witness: non-source seed survived");
    if (art.source_instance) {
        if (!is_target_set(*art.source_instance, S))
            throw contract_error("majority_project_witness: projection is not a target set");
        if (static_cast<int>(S.size()) > art.source_instance->budget)
            throw contract_error("majority_project_witness: projection exceeds source budget");
    }
    return S;
}

// ------------------------------------------ IS on regular UDG construction

ReductionArtifact is_planar_to_is_udg(const Graph& g, int r, const RectilinearEmbedding& emb,
                                      int k) {
    if (r != 3 && r != 4) throw input_error("is_planar_to_is_udg: r must be 3 or 4");
    if (!check_regular(g, r)) throw input_error("is_planar_to_is_udg: graph is not r-regular");
    auto report = validate_embedding(g, emb);
    if (!report.ok)
        throw input_error("is_planar_to_is_udg: invalid embedding: " + report.first());

    const int n = g.vertex_count();
    ReductionArtifact art;
    art.reduction = "is2udg";
    art.source_n = n;

    DiskRepresentation disks;
    disks.diameter = Rational(1, 7);
    std::vector<std::string> prov;
    for (int v = 0; v < n; ++v) {
        disks.centers.push_back({Rational(emb.vpoint[v].x), Rational(emb.vpoint[v].y)});
        prov.push_back("original:" + std::to_string(v));
    }
    int next = n;
    std::vector<Edge> edges;

    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge e = g.edges()[ei];
        const auto& path = emb.epath[ei];
        const int glen = static_cast<int>(path.size());
        SubdivisionPlan plan;
        plan.edge = e;
        plan.chain_len = glen;
        plan.w = choose_w(glen);
        plan.y = glen - 2;
        for (int x : plan.w) plan.y += x;
        plan.q = plan.y / 6;
        art.sum3q += 3 * plan.q;

        // disk centers between the endpoint disks, in chain order
        std::vector<GeoPoint> seq;
        for (int i = 0; i + 1 < glen; ++i) {
            auto segment = chain_centers(path[static_cast<std::size_t>(i)],
                                         path[static_cast<std::size_t>(i) + 1],
                                         plan.w[static_cast<std::size_t>(i)]);
            seq.insert(seq.end(), segment.begin(), segment.end());
            if (i + 2 < glen) {
                seq.push_back({Rational(path[static_cast<std::size_t>(i) + 1].x),
                               Rational(path[static_cast<std::size_t>(i) + 1].y)});
            }
        }
        if (static_cast<long long>(seq.size()) != plan.y)
            throw contract_error("is2udg: chain accounting broke");

        EdgeChain chain;
        chain.edge = e;
        std::vector<std::vector<int>> groups;
        groups.push_back({e.first});
        for (int j = 1; j <= static_cast<int>(seq.size()); ++j) {
            int primary = next++;
            disks.centers.push_back(seq[static_cast<std::size_t>(j) - 1]);
            prov.push_back("subdivision:" + edge_tag(e) + ":" + std::to_string(j));
            chain.xs.push_back(primary);
            std::vector<int> group{primary};
            if (j % 3 == 2) {
                for (int c = 0; c < r - 2; ++c) {
                    int copy = next++;
                    disks.centers.push_back(seq[static_cast<std::size_t>(j) - 1]);
                    prov.push_back("clique_copy:" + edge_tag(e) + ":" + std::to_string(j) +
                                   ":" + std::to_string(c));
                    group.push_back(copy);
                }
                chain.cliques.push_back(group);
            }
            groups.push_back(group);
        }
        groups.push_back({e.second});

        for (std::size_t gi = 0; gi + 1 < groups.size(); ++gi)
            for (int a : groups[gi])
                for (int bvert : groups[gi + 1]) edges.push_back({a, bvert});
        for (const auto& group : groups)
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t c = a + 1; c < group.size(); ++c)
                    edges.push_back({group[a], group[c]});

        art.plans.push_back(std::move(plan));
        art.chains.push_back(std::move(chain));
    }

    Graph out(next, std::move(edges));
    if (!check_regular(out, r))
        throw contract_error("is2udg: constructed graph is not r-regular");
    if (!(intersection_graph_disks(disks) == out))
        throw contract_error("is2udg: disk intersection graph differs from construction");

    art.is_instance = ISInstance{std::move(out), k + static_cast<int>(art.sum3q)};
    art.disks = std::move(disks);
    art.provenance = std::move(prov);
    art.budget = {"k'=k+sum(3q_e)", k, k + static_cast<int>(art.sum3q)};
    return art;
}

std::vector<int> is_lift_witness(const ReductionArtifact& art, const std::vector<int>& I) {
    const Graph& big = art.is_instance->graph;
    std::set<int> cur(I.begin(), I.end());
    for (int v : I)
        if (v < 0 || v >= art.source_n)
            throw input_error("is_lift_witness: witness vertex outside the source graph");

    for (const auto& chain : art.chains) {
        const auto& [u, v] = chain.edge;
        if (cur.count(u) && cur.count(v))
            throw contract_error("is_lift_witness: input is not independent");
        if (!cur.count(u)) {
            for (std::size_t j = 0; j < chain.xs.size(); j += 2) cur.insert(chain.xs[j]);
        } else {
            for (std::size_t j = 1; j < chain.xs.size(); j += 2) cur.insert(chain.xs[j]);
        }
    }
    std::vector<int> out(cur.begin(), cur.end());
    if (!is_independent_set(big, out))
        throw contract_error("is_lift_witness: lifted set is not independent");
    if (static_cast<long long>(out.size()) !=
        static_cast<long long>(I.size()) + art.sum3q)
        throw contract_error("is_lift_witness: lifted set has the wrong size");
    return out;
}

std::vector<int> is_project_witness(const ReductionArtifact& art, const std::vector<int>& I_out) {
    if (!is_independent_set(art.is_instance->graph, I_out))
        throw contract_error("is_project_witness: input is not independent");
    std::set<int> cur(I_out.begin(), I_out.end());

    for (const auto& chain : art.chains) {
        const auto& [u, v] = chain.edge;
        std::vector<int> members = chain.xs;
        for (const auto& group : chain.cliques)
            members.insert(members.end(), group.begin() + 1, group.end());

        long long inside = 0;
        for (int x : members) inside += cur.erase(x);
        const long long limit = 3 * art.plans[&chain - art.chains.data()].q;
        if (cur.count(u) && cur.count(v)) {
            if (inside > limit - 1)
                throw contract_error("is_project_witness: pigeonhole bound violated");
            cur.erase(u);
        } else if (inside > limit) {
            throw contract_error("is_project_witness: pigeonhole bound violated");
        }
    }

    std::vector<int> out(cur.begin(), cur.end());
    for (int x : out)
        if (x >= art.source_n)
            throw contract_error("is_project_witness: non-source vertex survived");
    if (static_cast<long long>(out.size()) <
        static_cast<long long>(I_out.size()) - art.sum3q)
        throw contract_error("is_project_witness: projection lost too many vertices");
    return out;
}

std::pair<Graph, std::optional<DiskRepresentation>>
clique_blowup_is(const Graph& g, int q, const std::optional<DiskRepresentation>& disks) {
    if (q < 1) throw input_error("clique_blowup_is: q must be positive");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) edges.push_back({v * q + a, v * q + b});
    for (const auto& [u, v] : g.edges())
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) edges.push_back({u * q + a, v * q + b});
    Graph out(n * q, std::move(edges));

    std::optional<DiskRepresentation> out_disks;
    if (disks) {
        DiskRepresentation d;
        d.diameter = disks->diameter;
        for (int v = 0; v < n; ++v)
            for (int a = 0; a < q; ++a) d.centers.push_back(disks->centers[v]);
        out_disks = std::move(d);
    }
    return {std::move(out), std::move(out_disks)};
}

// --------------------------------------- exact-threshold-2 UDG construction

ReductionArtifact majority_grid_to_exact2_udg(const TSSInstance& inst,
                                              const GridCoords& coords) {
    if (!classify_thresholds(inst).majority)
        throw contract_error("majority_grid_to_exact2_udg: instance is not majority");
    auto report = validate_grid_graph(inst.graph, coords);
    if (!report.ok)
        throw input_error("majority_grid_to_exact2_udg: invalid grid certificate: " +
                          report.first());
    const int n = inst.graph.vertex_count();
    for (int v = 0; v < n; ++v)
        if (inst.graph.degree(v) == 0)
            throw contract_error(
                "majority_grid_to_exact2_udg: isolated vertex cannot reach threshold 2");

    ReductionArtifact art;
    art.reduction = "grid2exact2";
    art.source_n = n;
    art.source_instance = inst;

    DiskRepresentation disks;
    disks.diameter = Rational(1);
    std::vector<std::string> prov;
    std::set<GridPoint> occupied;
    for (int v = 0; v < n; ++v) {
        disks.centers.push_back({Rational(coords.coord[v].x), Rational(coords.coord[v].y)});
        prov.push_back("original:" + std::to_string(v));
        occupied.insert(coords.coord[v]);
    }

    std::vector<Edge> edges = inst.graph.edges();
    std::vector<int> t = inst.thresholds;
    int next = n;
    const GridPoint dirs[4] = {{0, 1}, {1, 0}, {-1, 0}, {0, -1}};
    const Rational eps(1, 5);

    // Direction choice: first free direction in the fixed order, except that
    // two adjacent threshold-1 vertices must not use the same one -- their
    // leaf disks would sit at distance exactly 1 and touch. Adjacent distinct
    // directions and everything at grid distance >= sqrt(2) stay clear of
    // each other with eps = 1/5. Small backtracking search; threshold-1
    // vertices span paths and even cycles, so an assignment always exists.
    std::vector<int> hosts;
    for (int v = 0; v < n; ++v)
        if (inst.thresholds[v] == 1) hosts.push_back(v);
    std::vector<int> host_index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < hosts.size(); ++i)
        host_index[static_cast<std::size_t>(hosts[i])] = static_cast<int>(i);
    std::vector<int> dir_of(hosts.size(), -1);
    auto assign = [&](auto&& self, std::size_t i) -> bool {
        if (i == hosts.size()) return true;
        const int v = hosts[i];
        for (int d = 0; d < 4; ++d) {
            GridPoint target{coords.coord[v].x + dirs[d].x, coords.coord[v].y + dirs[d].y};
            if (occupied.count(target)) continue;
            bool clash = false;
            for (int u : inst.graph.neighbors(v)) {
                const int ui = host_index[static_cast<std::size_t>(u)];
                if (ui >= 0 && dir_of[static_cast<std::size_t>(ui)] == d) clash = true;
            }
            if (clash) continue;
            dir_of[i] = d;
            if (self(self, i + 1)) return true;
            dir_of[i] = -1;
        }
        return false;
    };
    if (!assign(assign, 0))
        throw contract_error("majority_grid_to_exact2_udg: no conflict-free leaf directions");

    for (std::size_t i = 0; i < hosts.size(); ++i) {
        const int v = hosts[i];
        const int chosen = dir_of[i];
        int leaf = next++;
        t.push_back(2);
        t[v] += 1;
        edges.push_back({v, leaf});
        prov.push_back("leaf:" + std::to_string(v));
        art.leaves.push_back({leaf, v});
        disks.centers.push_back({Rational(coords.coord[v].x) + eps * Rational(dirs[chosen].x),
                                 Rational(coords.coord[v].y) + eps * Rational(dirs[chosen].y)});
        ++art.z;
    }

    art.tss = TSSInstance(Graph(next, std::move(edges)), std::move(t), inst.budget + art.z);
    art.provenance = std::move(prov);
    art.budget = {"k'=k+z", inst.budget, inst.budget + art.z};

    for (int x : art.tss->thresholds)
        if (x != 2)
            throw contract_error("majority_grid_to_exact2_udg: a threshold is not exactly 2");
    if (!(intersection_graph_disks(disks) == art.tss->graph))
        throw contract_error("majority_grid_to_exact2_udg: disk intersection graph differs "
                             "from construction");
    art.disks = std::move(disks);

    // threshold capping must recover the source instance bit-exactly
    auto undone = preprocess_cap_thresholds(*art.tss);
    if (!(undone.instance == inst) || undone.budget_spent != art.z)
        throw contract_error("majority_grid_to_exact2_udg: capping did not round-trip");
    return art;
}

TSSInstance regular_exact_c_tss(const Graph& g, int k) {
    const int c = g.vertex_count() == 0 ? 0 : g.degree(0);
    if (!check_regular(g, c))
        throw input_error("regular_exact_c_tss: graph is not regular");
    std::vector<int> t(static_cast<std::size_t>(g.vertex_count()), c);
    return TSSInstance(g, std::move(t), k);
}

} // namespace tss
