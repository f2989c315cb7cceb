#include <doctest.h>

#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/geometry.hpp"
#include "tss/graph.hpp"
#include "tss/reduce.hpp"

using namespace tss;

TEST_CASE("graph construction rejects malformed edge lists") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), input_error); // duplicate, reversed
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), input_error);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.degree(0) == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(static_cast<int>(rng.uniform(0, 12)), 0.4, rng);
        int total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("tangent disks intersect") {
    DiskRepresentation rep{Rational(1, 7),
                           {{Rational(0), Rational(0)}, {Rational(1, 7), Rational(0)}}};
    Graph g = intersection_graph_disks(rep);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("a single disk yields an edgeless single-vertex graph") {
    DiskRepresentation rep{Rational(1, 7), {{Rational(0), Rational(0)}}};
    Graph g = intersection_graph_disks(rep);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("six-disk chain with endpoint disks is the path P_8") {
    DiskRepresentation rep{Rational(1, 7), {{Rational(0), Rational(0)}}};
    for (const auto& c : chain_centers({0, 0}, {1, 0}, 6)) rep.centers.push_back(c);
    rep.centers.push_back({Rational(1), Rational(0)});
    CHECK(intersection_graph_disks(rep) == path_graph(8));
}

TEST_CASE("disk intersection graphs are invariant under translation and scaling") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        DiskRepresentation rep{Rational(1, 7), {}};
        const int n = 6;
        for (int i = 0; i < n; ++i)
            rep.centers.push_back({Rational(rng.uniform(0, 20), 7), Rational(rng.uniform(0, 20), 7)});
        Graph base = intersection_graph_disks(rep);

        Rational dx(rng.uniform(-9, 9), 5), dy(rng.uniform(-9, 9), 5);
        Rational scale(rng.uniform(1, 6), rng.uniform(1, 6));
        DiskRepresentation moved{rep.diameter, {}};
        DiskRepresentation scaled{rep.diameter * scale, {}};
        for (const auto& c : rep.centers) {
            moved.centers.push_back({c.x + dx, c.y + dy});
            scaled.centers.push_back({c.x * scale, c.y * scale});
        }
        CHECK(intersection_graph_disks(moved) == base);
        CHECK(intersection_graph_disks(scaled) == base);
    }
}

TEST_CASE("interval intersection graphs") {
    IntervalModel disjoint{{{Rational(0), Rational(1)}, {Rational(2), Rational(3)}}};
    CHECK(intersection_graph_intervals(disjoint).edge_count() == 0);

    IntervalModel triangle{
        {{Rational(0), Rational(2)}, {Rational(1), Rational(3)}, {Rational(2), Rational(4)}}};
    CHECK(intersection_graph_intervals(triangle) == complete_graph(3));

    IntervalModel touching{{{Rational(0), Rational(1)}, {Rational(1), Rational(2)}}};
    CHECK(intersection_graph_intervals(touching).edge_count() == 1);
}

TEST_CASE("grid graph validation accepts exactly the induced cases") {
    CHECK(validate_grid_graph(path_graph(2), {{{0, 0}, {0, 1}}}).ok);
    CHECK(validate_grid_graph(cycle_graph(4), {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}).ok);

    auto stretched = validate_grid_graph(path_graph(2), {{{0, 0}, {0, 2}}});
    CHECK_FALSE(stretched.ok);
    CHECK(stretched.first().find("L1 distance != 1") != std::string::npos);

    // non-adjacent grid points at distance 1 (missing edge)
    auto missing = validate_grid_graph(Graph(2, {}), {{{0, 0}, {0, 1}}});
    CHECK_FALSE(missing.ok);
    CHECK(missing.first().find("missing edge") != std::string::npos);

    auto dup = validate_grid_graph(Graph(2, {}), {{{0, 0}, {0, 0}}});
    CHECK_FALSE(dup.ok);
    CHECK(dup.first().find("duplicate point") != std::string::npos);

    CHECK_THROWS_AS(validate_grid_graph(path_graph(3), {{{0, 0}, {0, 1}}}), input_error);
}

TEST_CASE("accepted grid certificates embed into unit disk graphs") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto [g, coords] = random_grid_graph(3, 3, 0.7, rng);
        if (!validate_grid_graph(g, coords).ok) continue;
        DiskRepresentation rep{Rational(1), {}};
        for (auto p : coords.coord)
            rep.centers.push_back({Rational(p.x), Rational(p.y)});
        CHECK(intersection_graph_disks(rep) == g);
    }
}

TEST_CASE("regularity checks") {
    CHECK(check_regular(complete_graph(4), 3));
    CHECK_FALSE(check_regular(path_graph(3), 2));
    CHECK(check_regular(octahedron_graph(), 4));
}
