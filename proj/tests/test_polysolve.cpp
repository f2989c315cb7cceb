#include <doctest.h>

#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/oracles.hpp"
#include "tss/solve.hpp"

using namespace tss;

TEST_CASE("unanimous instances translate to vertex cover and back") {
    TSSInstance c4(cycle_graph(4), {2, 2, 2, 2}, 2);
    VCInstance vc = unanimous_tss_to_vc(c4);
    CHECK(vc.graph == c4.graph);
    CHECK(vc.k == 2);
    CHECK(vc_to_unanimous_tss(vc) == c4);

    TSSInstance bad(cycle_graph(4), {2, 2, 2, 1}, 2);
    CHECK_THROWS_AS(unanimous_tss_to_vc(bad), contract_error);

    TSSInstance edgeless = vc_to_unanimous_tss({Graph(3, {}), 0});
    CHECK(edgeless.thresholds == std::vector<int>{0, 0, 0});
    CHECK(is_target_set(edgeless, {}));
}

TEST_CASE("a path's middle vertex is both a cover and a target set") {
    TSSInstance p3(path_graph(3), {1, 2, 1}, 1);
    CHECK(classify_thresholds(p3).unanimous);
    CHECK(is_vertex_cover(p3.graph, {1}));
    CHECK(is_target_set(p3, {1}));
}

TEST_CASE("interval vertex cover on fixed cases") {
    IntervalModel disjoint{{{Rational(0), Rational(1)},
                            {Rational(2), Rational(3)},
                            {Rational(4), Rational(5)}}};
    CHECK(min_vertex_cover_interval(disjoint).empty());

    IntervalModel triangle{
        {{Rational(0), Rational(2)}, {Rational(1), Rational(3)}, {Rational(2), Rational(4)}}};
    auto cover = min_vertex_cover_interval(triangle);
    CHECK(cover.size() == 2);
    CHECK(is_vertex_cover(intersection_graph_intervals(triangle), cover));

    IntervalModel one_edge{
        {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(2)}, {Rational(3), Rational(4)}}};
    auto c1 = min_vertex_cover_interval(one_edge);
    CHECK(c1.size() == 1);
    CHECK(is_vertex_cover(intersection_graph_intervals(one_edge), c1));
}

TEST_CASE("grid vertex cover on fixed cases") {
    Graph edge = path_graph(2);
    CHECK(min_vertex_cover_grid(edge, {{{0, 0}, {0, 1}}}).size() == 1);

    CHECK(min_vertex_cover_grid(cycle_graph(4), {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}).size() == 2);

    // full 2x3 grid: 6 vertices, 7 edges, cover size 3
    Rng rng(3);
    auto [g, coords] = random_grid_graph(2, 3, 1.0, rng);
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.edge_count() == 7);
    auto cover = min_vertex_cover_grid(g, coords);
    CHECK(cover.size() == 3);
    CHECK(is_vertex_cover(g, cover));

    CHECK_THROWS_AS(min_vertex_cover_grid(path_graph(2), {{{0, 0}, {0, 2}}}), input_error);
}

TEST_CASE("solve_unanimous dispatches on the certificate") {
    TSSInstance c4(cycle_graph(4), {2, 2, 2, 2}, 0);
    UnanimousCertificate grid;
    grid.grid = GridCoords{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    auto [k_grid, cover] = solve_unanimous(c4, grid);
    CHECK(k_grid == 2);
    CHECK(is_target_set(c4, cover));

    TSSInstance edgeless = vc_to_unanimous_tss({Graph(2, {}), 0});
    auto [k0, w0] = solve_unanimous(edgeless);
    CHECK(k0 == 0);
    CHECK(w0.empty());

    IntervalModel triangle{
        {{Rational(0), Rational(2)}, {Rational(1), Rational(3)}, {Rational(2), Rational(4)}}};
    TSSInstance tri = vc_to_unanimous_tss({intersection_graph_intervals(triangle), 0});
    UnanimousCertificate ic;
    ic.interval = triangle;
    auto [k_tri, wit] = solve_unanimous(tri, ic);
    CHECK(k_tri == 2);
    auto trace = simulate(tri, wit);
    CHECK(trace.rounds.size() == 2); // cover activates the rest in one round

    // certificate inconsistent with the graph
    UnanimousCertificate wrong;
    wrong.interval = IntervalModel{{{Rational(0), Rational(1)}, {Rational(2), Rational(3)},
                                    {Rational(4), Rational(5)}}};
    CHECK_THROWS_AS(solve_unanimous(tri, wrong), input_error);

    TSSInstance not_unanimous(cycle_graph(4), {1, 2, 2, 2}, 0);
    CHECK_THROWS_AS(solve_unanimous(not_unanimous), contract_error);
}

TEST_CASE("branch and bound independent set on fixed cases") {
    CHECK(max_independent_set_bb(complete_graph(4)).size() == 1);
    CHECK(max_independent_set_bb(cycle_graph(5)).size() == 2);
    CHECK(max_independent_set_bb(path_graph(8)).size() == 4);
    CHECK(max_independent_set_bb(Graph(0, {})).empty());
}

TEST_CASE("branch and bound equals naive enumeration") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 14));
        Graph g = random_graph(n, 0.35, rng);
        auto bb = max_independent_set_bb(g);
        auto naive = max_independent_set_naive(g);
        CHECK(bb.size() == naive.size());
        CHECK(is_independent_set(g, bb));
    }
}

TEST_CASE("minimum cover plus maximum independent set covers every vertex") {
    Rng rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 12));
        Graph g = random_graph(n, 0.4, rng);
        auto vc = min_vertex_cover_naive(g);
        auto is = max_independent_set_naive(g);
        CHECK(static_cast<int>(vc.size() + is.size()) == n);
    }
}

TEST_CASE("interval solver matches brute force on random models") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        IntervalModel model = random_interval_model(static_cast<int>(rng.uniform(1, 10)), 12, rng);
        Graph g = intersection_graph_intervals(model);
        auto smart = min_vertex_cover_interval(model);
        auto naive = min_vertex_cover_naive(g);
        CHECK(smart.size() == naive.size());
        CHECK(is_vertex_cover(g, smart));
        // the witness doubles as a minimum unanimous target set
        CHECK(is_target_set(vc_to_unanimous_tss({g, 0}), smart));
    }
}

TEST_CASE("grid solver matches brute force on random grid graphs") {
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        auto [g, coords] = random_grid_graph(3, 4, 0.6, rng);
        if (g.vertex_count() == 0 || g.vertex_count() > 14) continue;
        auto smart = min_vertex_cover_grid(g, coords);
        auto naive = min_vertex_cover_naive(g);
        CHECK(smart.size() == naive.size());
        CHECK(is_vertex_cover(g, smart));
    }
}
