#include <doctest.h>

#include <set>

#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/oracles.hpp"
#include "tss/reduce.hpp"
#include "tss/solve.hpp"

using namespace tss;

TEST_CASE("choose_w follows the residue table") {
    CHECK(choose_w(2) == std::vector<int>{6});
    CHECK(choose_w(7) == std::vector<int>{7, 6, 6, 6, 6, 6});
    CHECK(choose_w(3) == std::vector<int>{9, 8});
    CHECK(choose_w(4) == std::vector<int>{8, 8, 6});
    CHECK(choose_w(5) == std::vector<int>{9, 6, 6, 6});
    CHECK(choose_w(6) == std::vector<int>{8, 6, 6, 6, 6});
    CHECK_THROWS_AS(choose_w(1), input_error);
}

TEST_CASE("chain centers hit the exact parameters") {
    auto six = chain_centers({0, 0}, {1, 0}, 6);
    for (int j = 1; j <= 6; ++j) {
        CHECK(six[static_cast<std::size_t>(j) - 1].x == Rational(j, 7));
        CHECK(six[static_cast<std::size_t>(j) - 1].y == Rational(0));
    }

    auto nine = chain_centers({0, 0}, {1, 0}, 9);
    CHECK(nine.front().x == Rational(1, 7)); // 8/56 reduced
    CHECK(nine.back().x == Rational(6, 7));  // 48/56 reduced

    auto seven = chain_centers({0, 0}, {1, 0}, 7);
    const Rational gap = seven[1].x - seven[0].x;
    CHECK(gap == Rational(5, 42));
    CHECK(gap <= Rational(1, 7));
    CHECK(seven[2].x - seven[0].x == Rational(10, 42));
    CHECK(seven[2].x - seven[0].x > Rational(1, 7));

    // vertical segments generalize by the same parameters
    auto up = chain_centers({3, 4}, {3, 5}, 6);
    CHECK(up.front().x == Rational(3));
    CHECK(up.front().y == Rational(4) + Rational(1, 7));

    CHECK_THROWS_AS(chain_centers({0, 0}, {2, 0}, 6), input_error);
    CHECK_THROWS_AS(chain_centers({0, 0}, {1, 0}, 5), input_error);
}

namespace {

const char* kUnsat1 = "p cnf 1 3\n1 0\n1 0\n-1 0\n";
const char* kSat2 = "p cnf 2 3\n1 2 0\n1 -2 0\n-1 2 0\n";
const char* kSatBoth = "p cnf 2 3\n1 2 0\n1 2 0\n-1 -2 0\n"; // satisfied by (1,0) and (0,1)

} // namespace

TEST_CASE("sat reduction produces m+11n vertices with the right degrees") {
    CnfFormula f = parse_dimacs(kUnsat1);
    ReductionArtifact art = sat_to_planar_tss(f);
    const TSSInstance& inst = *art.tss;
    CHECK(inst.graph.vertex_count() == 3 + 11);
    CHECK(inst.budget == 1);
    CHECK(inst.graph.max_degree() <= 4);
    CHECK(classify_thresholds(inst).constant_bound == 2);

    for (const auto& gd : art.gadgets) {
        CHECK(inst.graph.degree(gd.lit_pos) == 4);
        CHECK(inst.graph.degree(gd.lit_neg) == 2);
    }

    CnfFormula loose;
    loose.num_vars = 1;
    loose.clauses = {{1}};
    CHECK_THROWS_AS(sat_to_planar_tss(loose), contract_error);
}

TEST_CASE("satisfiability decides the reduced instance at budget n") {
    CnfFormula unsat = parse_dimacs(kUnsat1);
    ReductionArtifact a1 = sat_to_planar_tss(unsat);
    CHECK_FALSE(min_target_set_bruteforce(*a1.tss, a1.tss->budget).best.has_value());

    CnfFormula sat = parse_dimacs(kSat2);
    ReductionArtifact a2 = sat_to_planar_tss(sat);
    auto res = min_target_set_bruteforce(*a2.tss, a2.tss->budget);
    REQUIRE(res.best.has_value());
    CHECK(res.best->first <= sat.num_vars);
}

TEST_CASE("assignments lift to anchor seeds and back") {
    CnfFormula f = parse_dimacs(kSatBoth);
    ReductionArtifact art = sat_to_planar_tss(f);

    Assignment a{0, 1}; // x false, y true
    auto S = assignment_to_target_set(art, a);
    CHECK(S.size() == 2);
    CHECK(S[0] == art.gadgets[0].anchor_false);
    CHECK(S[1] == art.gadgets[1].anchor_true);
    CHECK(is_target_set(*art.tss, S));
    CHECK(target_set_to_assignment(art, S) == a);

    Assignment b{1, 0};
    auto S2 = assignment_to_target_set(art, b);
    CHECK(is_target_set(*art.tss, S2));
    CHECK(target_set_to_assignment(art, S2) == b);

    // a non-target set is rejected
    CHECK_THROWS_AS(target_set_to_assignment(art, {art.gadgets[0].path[0],
                                                   art.gadgets[1].path[0]}),
                    contract_error);
}

TEST_CASE("majority sat reduction is majority everywhere with budget 2n+beta") {
    CnfFormula f = parse_dimacs(kSat2);
    ReductionArtifact art = sat_to_planar_majority_tss(f);
    const TSSInstance& inst = *art.tss;
    CHECK(classify_thresholds(inst).majority);
    CHECK(inst.graph.max_degree() <= 4);
    CHECK(art.beta == 0); // all clauses have two literals
    CHECK(inst.budget == 2 * f.num_vars);
    // base vertices, one cherry and one leaf per variable
    CHECK(inst.graph.vertex_count() == f.num_clauses() + 11 * f.num_vars + 4 * f.num_vars);

    CnfFormula with3 = parse_dimacs("p cnf 3 4\n1 2 0\n2 3 0\n3 1 0\n-1 -2 -3 0\n");
    ReductionArtifact art3 = sat_to_planar_majority_tss(with3);
    CHECK(art3.beta == 1);
    CHECK(art3.tss->budget == 2 * 3 + 1);
    CHECK(art3.alpha == 3 + 1);
    CHECK(classify_thresholds(*art3.tss).majority);

    // two-literal clause vertices keep degree 2 and threshold 1
    for (int j = 0; j < art.source_formula->num_clauses(); ++j) {
        const int y = art.clause_vertices[static_cast<std::size_t>(j)];
        CHECK(inst.graph.degree(y) == 2);
        CHECK(inst.thresholds[static_cast<std::size_t>(y)] == 1);
    }
}

TEST_CASE("single subdivision preserves target sets in both directions") {
    TSSInstance p2(path_graph(2), {1, 1}, 1);
    auto sub = subdivide_edge_once(p2, {0, 1});
    CHECK(sub.instance.graph.vertex_count() == 3);
    CHECK(sub.instance.thresholds == std::vector<int>{1, 1, 1});
    CHECK(is_target_set(sub.instance, {0}));
    CHECK(subdivide_lift_witness(p2, sub, {0}) == std::vector<int>{0});

    auto back = subdivide_project_witness(p2, sub, {2});
    CHECK(back.size() == 1);
    CHECK(is_target_set(p2, back));

    CHECK_THROWS_AS(subdivide_edge_once(p2, {0, 5}), input_error);

    TSSInstance c4 = vc_to_unanimous_tss({cycle_graph(4), 2});
    auto sc4 = subdivide_edge_once(c4, {0, 1});
    CHECK_FALSE(classify_thresholds(sc4.instance).unanimous);
}

TEST_CASE("subdivision preserves the optimum on random instances") {
    Rng rng(97);
    for (int trial = 0; trial < 40; ++trial) {
        TSSInstance inst = random_instance(static_cast<int>(rng.uniform(2, 7)), 0.5,
                                           ThresholdMode::Capped, rng);
        if (inst.graph.edge_count() == 0) continue;
        Edge e = inst.graph.edges()[static_cast<std::size_t>(
            rng.uniform(0, inst.graph.edge_count() - 1))];
        auto sub = subdivide_edge_once(inst, e);
        auto before = min_target_set_bruteforce(inst, inst.graph.vertex_count());
        auto after = min_target_set_bruteforce(sub.instance, sub.instance.graph.vertex_count());
        CHECK(before.best->first == after.best->first);
    }
}

TEST_CASE("grid reduction of a single edge is a path on a grid line") {
    TSSInstance p2(path_graph(2), {1, 1}, 1);
    RectilinearEmbedding emb{{{0, 0}, {0, 1}}, {{{0, 0}, {0, 1}}}};
    ReductionArtifact art = planar_tss_to_grid_tss(p2, emb);
    CHECK(art.tss->graph.vertex_count() == 3); // one midpoint vertex
    CHECK(art.tss->thresholds == std::vector<int>{1, 1, 1});
    CHECK(art.tss->budget == p2.budget);
    CHECK(validate_grid_graph(art.tss->graph, *art.coords).ok);
    CHECK(art.coords->coord[0] == GridPoint{0, 0});
    CHECK(art.coords->coord[1] == GridPoint{0, 2});
    CHECK(art.coords->coord[2] == GridPoint{0, 1});
}

TEST_CASE("grid reduction preserves the optimum and witness maps verify") {
    Rng rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_planar_deg4_graph(3, 3, 0.75, rng);
        if (g.vertex_count() < 2 || g.vertex_count() > 6 || g.edge_count() == 0) continue;
        std::vector<int> t;
        for (int v = 0; v < g.vertex_count(); ++v)
            t.push_back(static_cast<int>(rng.uniform(0, std::min(2, g.degree(v)))));
        TSSInstance inst(g, t, g.vertex_count());
        RectilinearEmbedding emb = compute_embedding(g, {500 + static_cast<std::uint64_t>(trial)});
        ReductionArtifact art = planar_tss_to_grid_tss(inst, emb);

        auto before = min_target_set_bruteforce(inst, inst.graph.vertex_count());
        auto after = min_target_set_bruteforce(*art.tss, inst.graph.vertex_count());
        REQUIRE(before.best.has_value());
        REQUIRE(after.best.has_value());
        CHECK(before.best->first == after.best->first);

        CHECK(grid_lift_witness(art, before.best->second) == before.best->second);
        auto projected = grid_project_witness(art, after.best->second);
        CHECK(projected.size() == after.best->second.size());
        CHECK(is_target_set(inst, projected));
    }
}

TEST_CASE("majority transform fixes thresholds exactly as the formulas say") {
    // degree 4, threshold 1: two cherries, threshold raised to 3
    Graph star4(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    TSSInstance low(star4, {1, 1, 1, 1, 1}, 2);
    ReductionArtifact art = majority_transform(low);
    CHECK(art.tss->thresholds[0] == 3);
    int cherries_at_0 = 0;
    for (const auto& ch : art.cherries)
        if (art.tss->graph.has_edge(0, ch[0])) ++cherries_at_0;
    CHECK(cherries_at_0 == 2);
    CHECK(classify_thresholds(*art.tss).majority);
    CHECK(art.tss->budget == low.budget + art.alpha);

    // degree 3, threshold 3: three leaves, threshold stays 3 = ceil(6/2)
    Graph star3(4, {{0, 1}, {0, 2}, {0, 3}});
    TSSInstance high(star3, {3, 1, 1, 1}, 1);
    ReductionArtifact art2 = majority_transform(high);
    CHECK(art2.tss->thresholds[0] == 3);
    CHECK(art2.tss->graph.degree(0) == 6);
    CHECK(classify_thresholds(*art2.tss).majority);

    // an already-majority vertex is untouched
    TSSInstance maj(star3, {2, 1, 1, 1}, 1);
    ReductionArtifact art3 = majority_transform(maj);
    CHECK(art3.alpha == 0);
    CHECK(art3.leaves.empty());
    CHECK(art3.tss->graph == star3);

    TSSInstance overcap(star3, {4, 1, 1, 1}, 1);
    CHECK_THROWS_AS(majority_transform(overcap), contract_error);
}

TEST_CASE("majority witnesses lift and project with the alpha offset") {
    Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 6));
        TSSInstance inst = random_instance(n, 0.5, ThresholdMode::Capped, rng);
        inst.budget = n;
        ReductionArtifact art = majority_transform(inst);
        if (art.tss->graph.vertex_count() > 24) continue;

        auto before = min_target_set_bruteforce(inst, n);
        auto after = min_target_set_bruteforce(*art.tss, art.tss->graph.vertex_count());
        REQUIRE(before.best.has_value());
        REQUIRE(after.best.has_value());
        CHECK(after.best->first == before.best->first + art.alpha);

        auto lifted = majority_lift_witness(art, before.best->second);
        CHECK(static_cast<int>(lifted.size()) == before.best->first + art.alpha);
        auto projected = majority_project_witness(art, after.best->second);
        CHECK(static_cast<int>(projected.size()) <= before.best->first);
        CHECK(is_target_set(inst, projected));
    }
}

TEST_CASE("clique blowup") {
    auto [identity, no_disks] = clique_blowup_is(complete_graph(3), 1);
    CHECK(identity == complete_graph(3));
    CHECK_FALSE(no_disks.has_value());

    auto [k4, _] = clique_blowup_is(path_graph(2), 2); // K_2 is 1-regular
    CHECK(k4 == complete_graph(4));
    CHECK(check_regular(k4, 3)); // (q(r+1)-1) = 2*2-1

    Rng rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(static_cast<int>(rng.uniform(1, 6)), 0.5, rng);
        auto [big, __] = clique_blowup_is(g, static_cast<int>(rng.uniform(1, 3)));
        CHECK(max_independent_set_naive(big).size() == max_independent_set_naive(g).size());
    }

    DiskRepresentation rep{Rational(1), {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
    auto [blown, disks] = clique_blowup_is(path_graph(2), 2, rep);
    REQUIRE(disks.has_value());
    CHECK(disks->centers.size() == 4);
    CHECK(intersection_graph_disks(*disks) == blown);
}

TEST_CASE("exact-2 construction places leaf disks at the first free direction") {
    // vertical edge: (0,0) has (0,1) occupied, so its leaf goes to (1/5, 0)
    Graph p2 = path_graph(2);
    GridCoords coords{{{0, 0}, {0, 1}}};
    TSSInstance inst(p2, {1, 1}, 1);
    ReductionArtifact art = majority_grid_to_exact2_udg(inst, coords);

    CHECK(art.z == 2);
    CHECK(art.tss->budget == 1 + 2);
    CHECK(art.tss->graph.vertex_count() == 4);
    for (int t : art.tss->thresholds) CHECK(t == 2);
    CHECK(art.tss->graph.max_degree() <= 4);

    REQUIRE(art.disks.has_value());
    CHECK(art.disks->centers[2] == GeoPoint{Rational(1, 5), Rational(0)});
    CHECK(art.disks->centers[3] == GeoPoint{Rational(0), Rational(1) + Rational(1, 5)});

    // each leaf disk intersects only its host
    const auto udg = intersection_graph_disks(*art.disks);
    CHECK(udg == art.tss->graph);
    CHECK(udg.degree(2) == 1);
    CHECK(udg.degree(3) == 1);

    // round trip back to the source instance
    auto pre = preprocess_cap_thresholds(*art.tss);
    CHECK(pre.instance == inst);
    CHECK(pre.budget_spent == art.z);

    TSSInstance not_majority(p2, {1, 2}, 1);
    CHECK_THROWS_AS(majority_grid_to_exact2_udg(not_majority, coords), contract_error);
    TSSInstance isolated(Graph(1, {}), {0}, 0);
    CHECK_THROWS_AS(majority_grid_to_exact2_udg(isolated, GridCoords{{{0, 0}}}), contract_error);
}

TEST_CASE("exact-2 construction on random grid instances") {
    Rng rng(109);
    for (int trial = 0; trial < 15; ++trial) {
        auto [g, coords] = random_grid_graph(4, 4, 0.55, rng);
        if (g.vertex_count() < 2 || g.vertex_count() > 12) continue;
        TSSInstance inst(g, random_thresholds(g, ThresholdMode::Majority, rng), 1);
        ReductionArtifact art = majority_grid_to_exact2_udg(inst, coords);
        CHECK(art.budget.k_out == inst.budget + art.z);
        CHECK(classify_thresholds(*art.tss).exact == 2);
    }
}

TEST_CASE("artifact provenance is total and injective") {
    std::vector<ReductionArtifact> arts;
    arts.push_back(sat_to_planar_tss(parse_dimacs(kSat2)));
    arts.push_back(sat_to_planar_majority_tss(parse_dimacs(kSat2)));
    Graph star4(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    arts.push_back(majority_transform(TSSInstance(star4, {1, 1, 1, 1, 1}, 2)));
    arts.push_back(majority_grid_to_exact2_udg(TSSInstance(path_graph(2), {1, 1}, 1),
                                               GridCoords{{{0, 0}, {0, 1}}}));
    RectilinearEmbedding emb{{{0, 0}, {0, 1}}, {{{0, 0}, {0, 1}}}};
    arts.push_back(planar_tss_to_grid_tss(TSSInstance(path_graph(2), {1, 1}, 1), emb));
    for (const auto& art : arts) {
        const int n = art.tss ? art.tss->graph.vertex_count()
                              : art.is_instance->graph.vertex_count();
        REQUIRE(static_cast<int>(art.provenance.size()) == n);
        std::set<std::string> tags(art.provenance.begin(), art.provenance.end());
        CHECK(static_cast<int>(tags.size()) == n);
    }
}

TEST_CASE("regular graphs get simultaneous unanimous and exact thresholds") {
    TSSInstance k4 = regular_exact_c_tss(complete_graph(4), 2);
    auto cls = classify_thresholds(k4);
    CHECK(cls.unanimous);
    CHECK(cls.exact == 3);

    TSSInstance c4 = regular_exact_c_tss(cycle_graph(4), 2);
    CHECK(min_target_set_bruteforce(c4, 4).best->first == 2);

    CHECK_THROWS_AS(regular_exact_c_tss(path_graph(3), 1), input_error);
}

TEST_CASE("disk reduction on K_4: regular, geometric, and alpha-exact") {
    Graph k4 = complete_graph(4);
    RectilinearEmbedding emb = compute_embedding(k4, {9});
    const int alpha_src = static_cast<int>(max_independent_set_naive(k4).size());
    ReductionArtifact art = is_planar_to_is_udg(k4, 3, emb, alpha_src);

    REQUIRE(art.is_instance.has_value());
    const Graph& big = art.is_instance->graph;
    CHECK(check_regular(big, 3));
    for (const auto& plan : art.plans) {
        CHECK(plan.y % 6 == 0);
        CHECK(plan.y == 6 * plan.q);
        CHECK(static_cast<int>(plan.w.size()) == plan.chain_len - 1);
    }

    // the big graph's independence number is alpha + 3*sum(q)
    auto mis = max_independent_set_bb(big);
    CHECK(static_cast<long long>(mis.size()) == alpha_src + art.sum3q);

    auto lifted = is_lift_witness(art, {0});
    CHECK(static_cast<long long>(lifted.size()) == 1 + art.sum3q);
    auto projected = is_project_witness(art, mis);
    CHECK(static_cast<int>(projected.size()) == alpha_src);
    CHECK(is_independent_set(k4, projected));

    auto empty_lift = is_lift_witness(art, {});
    CHECK(static_cast<long long>(empty_lift.size()) == art.sum3q);

    CHECK_THROWS_AS(is_planar_to_is_udg(path_graph(3), 3, emb, 1), input_error);
}

TEST_CASE("majority projection tolerates redundant non-optimal seeds") {
    Rng rng(211);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 6));
        TSSInstance inst = random_instance(n, 0.5, ThresholdMode::Capped, rng);
        inst.budget = n;
        ReductionArtifact art = majority_transform(inst);
        auto base = min_target_set_bruteforce(inst, n).best->second;
        auto lifted = majority_lift_witness(art, base);

        // pad with arbitrary extra seeds while the transformed budget allows
        const int room = art.tss->budget - static_cast<int>(lifted.size());
        std::set<int> padded(lifted.begin(), lifted.end());
        for (int i = 0; i < room; ++i)
            padded.insert(static_cast<int>(
                rng.uniform(0, art.tss->graph.vertex_count() - 1)));
        std::vector<int> seed(padded.begin(), padded.end());
        if (static_cast<int>(seed.size()) > art.tss->budget) continue;

        auto projected = majority_project_witness(art, seed);
        CHECK(is_target_set(inst, projected));
        CHECK(static_cast<int>(projected.size()) <= inst.budget);
    }
}

TEST_CASE("grid projection handles seeds sitting on subdivision vertices") {
    Rng rng(223);
    int exercised = 0;
    for (int trial = 0; trial < 12 && exercised < 6; ++trial) {
        Graph g = random_planar_deg4_graph(3, 3, 0.8, rng);
        if (g.vertex_count() < 2 || g.vertex_count() > 6 || g.edge_count() == 0) continue;
        std::vector<int> t;
        for (int v = 0; v < g.vertex_count(); ++v)
            t.push_back(static_cast<int>(rng.uniform(0, std::min(2, g.degree(v)))));
        TSSInstance inst(g, t, g.vertex_count());
        RectilinearEmbedding emb =
            compute_embedding(g, {900 + static_cast<std::uint64_t>(trial)});
        ReductionArtifact art = planar_tss_to_grid_tss(inst, emb);
        auto best = min_target_set_bruteforce(*art.tss, g.vertex_count()).best->second;

        // swap each seed for each fresh vertex; any still-valid variant must project
        for (std::size_t i = 0; i < best.size(); ++i) {
            for (int fresh = inst.graph.vertex_count();
                 fresh < art.tss->graph.vertex_count(); ++fresh) {
                std::vector<int> variant = best;
                variant[i] = fresh;
                std::sort(variant.begin(), variant.end());
                variant.erase(std::unique(variant.begin(), variant.end()), variant.end());
                if (variant.size() != best.size()) continue;
                if (!is_target_set(*art.tss, variant)) continue;
                auto back = grid_project_witness(art, variant);
                CHECK(is_target_set(inst, back));
                CHECK(back.size() == variant.size());
                ++exercised;
            }
        }
    }
    CHECK(exercised >= 6);
}

TEST_CASE("disk-reduction projection accepts arbitrary independent sets") {
    Graph k4 = complete_graph(4);
    RectilinearEmbedding emb = compute_embedding(k4, {9});
    ReductionArtifact art = is_planar_to_is_udg(k4, 3, emb, 1);
    const Graph& big = art.is_instance->graph;

    Rng rng(227);
    for (int trial = 0; trial < 20; ++trial) {
        // greedy random independent set, usually far from maximum
        std::vector<int> order(static_cast<std::size_t>(big.vertex_count()));
        for (int v = 0; v < big.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
        rng.shuffle(order);
        std::vector<int> is;
        std::vector<char> blocked(static_cast<std::size_t>(big.vertex_count()), 0);
        for (int v : order) {
            if (blocked[static_cast<std::size_t>(v)]) continue;
            is.push_back(v);
            blocked[static_cast<std::size_t>(v)] = 1;
            for (int w : big.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
        }
        auto projected = is_project_witness(art, is);
        CHECK(is_independent_set(k4, projected));
        CHECK(static_cast<long long>(projected.size()) >=
              static_cast<long long>(is.size()) - art.sum3q);
    }
}
