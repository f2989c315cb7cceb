#include "tss/io.hpp"

#include <fstream>
#include <sstream>

#include "tss/cnf.hpp"
#include "tss/errors.hpp"

namespace tss {

namespace {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw input_error("expected rational as \"p/q\" string");
}

json point_to_json(const GeoPoint& p) { return json::array({p.x.str(), p.y.str()}); }

GeoPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw input_error("expected [x,y] point");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json grid_point_to_json(GridPoint p) { return json::array({p.x, p.y}); }

GridPoint grid_point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw input_error("expected [x,y] grid point");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

} // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw input_error("graph JSON needs n, edges");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("edge must be [u,v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

json instance_to_json(const TSSInstance& inst) {
    return json{{"graph", graph_to_json(inst.graph)},
                {"thresholds", inst.thresholds},
                {"k", inst.budget}};
}

TSSInstance instance_from_json(const json& j) {
    if (!j.contains("graph") || !j.contains("thresholds") || !j.contains("k"))
        throw input_error("instance JSON needs graph, thresholds, k");
    return TSSInstance(graph_from_json(j.at("graph")),
                       j.at("thresholds").get<std::vector<int>>(), j.at("k").get<int>());
}

json trace_to_json(const ActivationTrace& t) { return json{{"rounds", t.rounds}}; }

json disks_to_json(const DiskRepresentation& rep) {
    json centers = json::array();
    for (const auto& c : rep.centers) centers.push_back(point_to_json(c));
    return json{{"diameter", rational_to_json(rep.diameter)}, {"centers", centers}};
}

DiskRepresentation disks_from_json(const json& j) {
    DiskRepresentation rep;
    rep.diameter = rational_from_json(j.at("diameter"));
    for (const auto& c : j.at("centers")) rep.centers.push_back(point_from_json(c));
    return rep;
}

json grid_coords_to_json(const GridCoords& c) {
    json pts = json::array();
    for (auto p : c.coord) pts.push_back(grid_point_to_json(p));
    return json{{"coords", pts}};
}

GridCoords grid_coords_from_json(const json& j) {
    GridCoords c;
    for (const auto& p : j.at("coords")) c.coord.push_back(grid_point_from_json(p));
    return c;
}

json interval_model_to_json(const IntervalModel& m) {
    json iv = json::array();
    for (const auto& [lo, hi] : m.intervals)
        iv.push_back(json::array({lo.str(), hi.str()}));
    return json{{"intervals", iv}};
}

IntervalModel interval_model_from_json(const json& j) {
    IntervalModel m;
    for (const auto& iv : j.at("intervals")) {
        if (!iv.is_array() || iv.size() != 2) throw input_error("interval must be [lo,hi]");
        m.intervals.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
    }
    return m;
}

json embedding_to_json(const Graph& g, const RectilinearEmbedding& emb) {
    json vp = json::array();
    for (auto p : emb.vpoint) vp.push_back(grid_point_to_json(p));
    json ep = json::array();
    for (int i = 0; i < g.edge_count(); ++i) {
        json pts = json::array();
        for (auto p : emb.epath[static_cast<std::size_t>(i)]) pts.push_back(grid_point_to_json(p));
        ep.push_back(json{{"edge", json::array({g.edges()[static_cast<std::size_t>(i)].first,
                                                g.edges()[static_cast<std::size_t>(i)].second})},
                          {"points", pts}});
    }
    return json{{"vpoint", vp}, {"epath", ep}};
}

RectilinearEmbedding embedding_from_json(const Graph& g, const json& j) {
    RectilinearEmbedding emb;
    for (const auto& p : j.at("vpoint")) emb.vpoint.push_back(grid_point_from_json(p));
    emb.epath.assign(static_cast<std::size_t>(g.edge_count()), {});
    for (const auto& entry : j.at("epath")) {
        Edge e{entry.at("edge")[0].get<int>(), entry.at("edge")[1].get<int>()};
        if (e.first > e.second) std::swap(e.first, e.second);
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
        if (it == g.edges().end() || *it != e)
            throw input_error("embedding JSON references unknown edge");
        std::vector<GridPoint> pts;
        for (const auto& p : entry.at("points")) pts.push_back(grid_point_from_json(p));
        emb.epath[static_cast<std::size_t>(it - g.edges().begin())] = std::move(pts);
    }
    return emb;
}

namespace {

json plan_to_json(const SubdivisionPlan& p) {
    return json{{"edge", json::array({p.edge.first, p.edge.second})},
                {"g", p.chain_len},
                {"w", p.w},
                {"y", p.y},
                {"q", p.q}};
}

SubdivisionPlan plan_from_json(const json& j) {
    SubdivisionPlan p;
    p.edge = {j.at("edge")[0].get<int>(), j.at("edge")[1].get<int>()};
    p.chain_len = j.at("g").get<int>();
    p.w = j.at("w").get<std::vector<int>>();
    p.y = j.at("y").get<long long>();
    p.q = j.at("q").get<long long>();
    return p;
}

} // namespace

json artifact_to_json(const ReductionArtifact& art) {
    json j;
    j["reduction"] = art.reduction;
    if (art.tss) j["instance"] = instance_to_json(*art.tss);
    if (art.is_instance)
        j["is"] = json{{"graph", graph_to_json(art.is_instance->graph)},
                       {"k", art.is_instance->k}};
    j["provenance"] = art.provenance;
    j["counters"] = json{{"alpha", art.alpha}, {"beta", art.beta}, {"z", art.z},
                         {"sum3q", art.sum3q}};
    j["budget"] = json{{"formula", art.budget.formula}, {"k_out", art.budget.k_out}};
    if (art.budget.k_in) j["budget"]["k_in"] = *art.budget.k_in;
    if (!art.plans.empty()) {
        json plans = json::array();
        for (const auto& p : art.plans) plans.push_back(plan_to_json(p));
        j["plans"] = plans;
    }
    if (art.disks) j["disks"] = disks_to_json(*art.disks);
    if (art.coords) j["coords"] = grid_coords_to_json(*art.coords);

    json aux;
    aux["source_n"] = art.source_n;
    if (art.source_formula) aux["source_dimacs"] = to_dimacs(*art.source_formula);
    if (art.source_instance) aux["source_instance"] = instance_to_json(*art.source_instance);
    if (!art.gadgets.empty()) {
        json gads = json::array();
        for (const auto& g : art.gadgets)
            gads.push_back(json{{"T", g.anchor_true},
                                {"F", g.anchor_false},
                                {"t", g.lit_pos},
                                {"f", g.lit_neg},
                                {"a", g.ring_a},
                                {"b", g.ring_b},
                                {"c", g.ring_c},
                                {"d", g.ring_d},
                                {"p", json::array({g.path[0], g.path[1], g.path[2]})}});
        aux["gadgets"] = gads;
    }
    if (!art.clause_vertices.empty()) aux["clause_vertices"] = art.clause_vertices;
    if (!art.cherries.empty()) {
        json ch = json::array();
        for (const auto& c : art.cherries) ch.push_back(json::array({c[0], c[1], c[2]}));
        aux["cherries"] = ch;
    }
    if (!art.leaves.empty()) {
        json lv = json::array();
        for (const auto& [leaf, host] : art.leaves) lv.push_back(json::array({leaf, host}));
        aux["leaves"] = lv;
    }
    if (!art.history.empty()) {
        json h = json::array();
        for (const auto& s : art.history) h.push_back(json::array({s[0], s[1], s[2]}));
        aux["history"] = h;
    }
    if (!art.chains.empty()) {
        json ch = json::array();
        for (const auto& c : art.chains) {
            json cliques = json::array();
            for (const auto& grp : c.cliques) cliques.push_back(grp);
            ch.push_back(json{{"edge", json::array({c.edge.first, c.edge.second})},
                              {"xs", c.xs},
                              {"cliques", cliques}});
        }
        aux["chains"] = ch;
    }
    j["aux"] = aux;
    return j;
}

ReductionArtifact artifact_from_json(const json& j) {
    ReductionArtifact art;
    art.reduction = j.at("reduction").get<std::string>();
    if (j.contains("instance")) art.tss = instance_from_json(j.at("instance"));
    if (j.contains("is"))
        art.is_instance = ISInstance{graph_from_json(j.at("is").at("graph")),
                                     j.at("is").at("k").get<int>()};
    art.provenance = j.at("provenance").get<std::vector<std::string>>();
    const auto& counters = j.at("counters");
    art.alpha = counters.at("alpha").get<int>();
    art.beta = counters.at("beta").get<int>();
    art.z = counters.at("z").get<int>();
    art.sum3q = counters.at("sum3q").get<long long>();
    art.budget.formula = j.at("budget").at("formula").get<std::string>();
    art.budget.k_out = j.at("budget").at("k_out").get<int>();
    if (j.at("budget").contains("k_in")) art.budget.k_in = j.at("budget").at("k_in").get<int>();
    if (j.contains("plans"))
        for (const auto& p : j.at("plans")) art.plans.push_back(plan_from_json(p));
    if (j.contains("disks")) art.disks = disks_from_json(j.at("disks"));
    if (j.contains("coords")) art.coords = grid_coords_from_json(j.at("coords"));

    const auto& aux = j.at("aux");
    art.source_n = aux.at("source_n").get<int>();
    if (aux.contains("source_dimacs"))
        art.source_formula = parse_dimacs(aux.at("source_dimacs").get<std::string>());
    if (aux.contains("source_instance"))
        art.source_instance = instance_from_json(aux.at("source_instance"));
    if (aux.contains("gadgets")) {
        for (const auto& g : aux.at("gadgets")) {
            VariableGadget vg;
            vg.anchor_true = g.at("T").get<int>();
            vg.anchor_false = g.at("F").get<int>();
            vg.lit_pos = g.at("t").get<int>();
            vg.lit_neg = g.at("f").get<int>();
            vg.ring_a = g.at("a").get<int>();
            vg.ring_b = g.at("b").get<int>();
            vg.ring_c = g.at("c").get<int>();
            vg.ring_d = g.at("d").get<int>();
            for (int i = 0; i < 3; ++i) vg.path[static_cast<std::size_t>(i)] = g.at("p")[static_cast<std::size_t>(i)].get<int>();
            art.gadgets.push_back(vg);
        }
    }
    if (aux.contains("clause_vertices"))
        art.clause_vertices = aux.at("clause_vertices").get<std::vector<int>>();
    if (aux.contains("cherries"))
        for (const auto& c : aux.at("cherries"))
            art.cherries.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
    if (aux.contains("leaves"))
        for (const auto& l : aux.at("leaves"))
            art.leaves.push_back({l[0].get<int>(), l[1].get<int>()});
    if (aux.contains("history"))
        for (const auto& h : aux.at("history"))
            art.history.push_back({h[0].get<int>(), h[1].get<int>(), h[2].get<int>()});
    if (aux.contains("chains")) {
        for (const auto& c : aux.at("chains")) {
            EdgeChain ec;
            ec.edge = {c.at("edge")[0].get<int>(), c.at("edge")[1].get<int>()};
            ec.xs = c.at("xs").get<std::vector<int>>();
            for (const auto& grp : c.at("cliques"))
                ec.cliques.push_back(grp.get<std::vector<int>>());
            art.chains.push_back(std::move(ec));
        }
    }
    return art;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON in " + path);
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace tss
