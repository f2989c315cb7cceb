#include <doctest.h>

#include <algorithm>

#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/instance.hpp"
#include "tss/solve.hpp"

using namespace tss;

namespace {

TSSInstance unanimous(const Graph& g, int k = 0) { return vc_to_unanimous_tss({g, k}); }

} // namespace

TEST_CASE("opposite seeds infect an unanimous C_4 in one round") {
    TSSInstance inst = unanimous(cycle_graph(4));
    auto trace = simulate(inst, {0, 2});
    REQUIRE(trace.rounds.size() == 2);
    CHECK(trace.rounds[0] == std::vector<int>{0, 2});
    CHECK(trace.rounds[1] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("seeding everything is already a fixed point") {
    TSSInstance inst = unanimous(cycle_graph(4));
    auto trace = simulate(inst, {0, 1, 2, 3});
    CHECK(trace.rounds.size() == 1);
}

TEST_CASE("a middle vertex with threshold 2 waits for both endpoints") {
    TSSInstance inst(path_graph(3), {1, 2, 1}, 2);
    auto trace = simulate(inst, {0, 2});
    REQUIRE(trace.rounds.size() == 2);
    CHECK(trace.rounds[1] == std::vector<int>{0, 1, 2});
}

TEST_CASE("threshold-0 vertices activate in round 1 without being seeded") {
    TSSInstance inst(Graph(1, {}), {0}, 0);
    CHECK(is_target_set(inst, {}));
    auto trace = simulate(inst, {});
    CHECK(trace.final_set() == std::vector<int>{0});
}

TEST_CASE("simulate rejects out-of-range seeds") {
    TSSInstance inst(path_graph(2), {1, 1}, 0);
    CHECK_THROWS_AS(simulate(inst, {5}), input_error);
    CHECK_THROWS_AS(is_target_set(inst, {-1}), input_error);
}

TEST_CASE("adjacent seeds do not dominate an unanimous C_4") {
    TSSInstance inst = unanimous(cycle_graph(4));
    CHECK(is_target_set(inst, {0, 1, 2, 3}));
    CHECK_FALSE(is_target_set(inst, {0, 1}));
    CHECK(is_target_set(inst, {0, 2}));
}

TEST_CASE("threshold classification") {
    TSSInstance k4(complete_graph(4), {3, 3, 3, 3}, 0);
    auto c = classify_thresholds(k4);
    CHECK(c.unanimous);
    CHECK(c.exact == 3);
    CHECK(c.constant_bound == 3);
    CHECK_FALSE(c.majority); // majority of degree 3 is 2

    TSSInstance edgeless(Graph(3, {}), {0, 0, 0}, 0);
    auto e = classify_thresholds(edgeless);
    CHECK(e.unanimous);
    CHECK(e.majority);
    CHECK(e.exact == 0);

    TSSInstance mixed(cycle_graph(4), {2, 2, 2, 1}, 0);
    auto m = classify_thresholds(mixed);
    CHECK_FALSE(m.unanimous);
    CHECK_FALSE(m.majority);
    CHECK_FALSE(m.exact.has_value());
    CHECK(m.constant_bound == 2);
    CHECK(m.tags().back() == "general");
}

TEST_CASE("threshold capping removes forced vertices") {
    TSSInstance inst(path_graph(2), {5, 1}, 2);
    auto pre = preprocess_cap_thresholds(inst);
    CHECK(pre.removed == std::vector<int>{0});
    CHECK(pre.budget_spent == 1);
    CHECK(pre.feasible);
    CHECK(pre.instance.budget == 1);
    CHECK(pre.instance.graph.vertex_count() == 1);
    CHECK(pre.instance.thresholds == std::vector<int>{0});
    CHECK(pre.survivor_to_original == std::vector<int>{1});
}

TEST_CASE("capping leaves well-formed instances untouched") {
    TSSInstance inst(cycle_graph(4), {1, 2, 1, 0}, 3);
    auto pre = preprocess_cap_thresholds(inst);
    CHECK(pre.removed.empty());
    CHECK(pre.instance == inst);
}

TEST_CASE("capping reports infeasibility when forced picks exceed the budget") {
    TSSInstance inst(Graph(1, {}), {1}, 0);
    auto pre = preprocess_cap_thresholds(inst);
    CHECK_FALSE(pre.feasible);
    CHECK(pre.budget_spent == 1);
}

TEST_CASE("seed normalization moves low-threshold seeds onto neighbours") {
    TSSInstance inst(path_graph(2), {1, 1}, 1);
    CHECK(normalize_seed(inst, {0}) == std::vector<int>{1});

    TSSInstance heavy(path_graph(3), {2, 2, 2}, 3);
    CHECK(normalize_seed(heavy, {0, 1, 2}) == std::vector<int>{0, 1, 2});

    // star whose centre needs two active leaves: one leaf is not a target set
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    TSSInstance s(star, {2, 1, 1, 1}, 1);
    CHECK_THROWS_AS(normalize_seed(s, {1}), contract_error);
}

TEST_CASE("normalization preserves cardinality and target-set-ness") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        TSSInstance inst = random_instance(static_cast<int>(rng.uniform(1, 8)), 0.4,
                                           ThresholdMode::Capped, rng);
        auto res = min_target_set_bruteforce(inst, inst.graph.vertex_count());
        REQUIRE(res.best.has_value());
        auto normalized = normalize_seed(inst, res.best->second);
        CHECK(normalized.size() == res.best->second.size());
        CHECK(is_target_set(inst, normalized));
    }
}

TEST_CASE("brute force matches the known optima") {
    CHECK(min_target_set_bruteforce(unanimous(cycle_graph(4)), 4).best->first == 2);
    CHECK(min_target_set_bruteforce(TSSInstance(Graph(1, {}), {0}, 0), 1).best->first == 0);
    CHECK(min_target_set_bruteforce(TSSInstance(complete_graph(3), {1, 1, 1}, 1), 3)
              .best->first == 1);
}

TEST_CASE("brute force respects the size cap") {
    auto res = min_target_set_bruteforce(unanimous(cycle_graph(4)), 1);
    CHECK_FALSE(res.best.has_value());
    CHECK_FALSE(res.timed_out);
}

TEST_CASE("brute force is independent of the worker count") {
    Rng rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        TSSInstance inst = random_instance(static_cast<int>(rng.uniform(1, 9)), 0.35,
                                           ThresholdMode::Uniform, rng);
        auto seq = min_target_set_bruteforce(inst, inst.graph.vertex_count(), {1, {}});
        auto par = min_target_set_bruteforce(inst, inst.graph.vertex_count(), {4, {}});
        REQUIRE(seq.best.has_value());
        REQUIRE(par.best.has_value());
        CHECK(seq.best->first == par.best->first);
        CHECK(seq.best->second == par.best->second); // identical lexicographic witness
    }
}

TEST_CASE("traces are monotone and stabilize within n rounds") {
    Rng rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 10));
        TSSInstance inst = random_instance(n, 0.3, ThresholdMode::Uniform, rng);
        std::vector<int> seed;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.3)) seed.push_back(v);
        auto trace = simulate(inst, seed);
        CHECK(trace.rounds.size() <= static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
            CHECK(trace.rounds[i - 1].size() < trace.rounds[i].size());
            CHECK(std::includes(trace.rounds[i].begin(), trace.rounds[i].end(),
                                trace.rounds[i - 1].begin(), trace.rounds[i - 1].end()));
        }
        // determinism
        CHECK(simulate(inst, seed).rounds == trace.rounds);
    }
}

TEST_CASE("supersets of target sets are target sets") {
    Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        TSSInstance inst = random_instance(n, 0.35, ThresholdMode::Uniform, rng);
        auto res = min_target_set_bruteforce(inst, n);
        REQUIRE(res.best.has_value());
        std::vector<int> super = res.best->second;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.4)) super.push_back(v);
        CHECK(is_target_set(inst, super));
    }
}

TEST_CASE("threshold capping preserves the optimum plus spent budget") {
    Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 8));
        TSSInstance inst = random_instance(n, 0.4, ThresholdMode::Uniform, rng);
        auto pre = preprocess_cap_thresholds(inst);
        auto before = min_target_set_bruteforce(inst, n);
        auto after = min_target_set_bruteforce(pre.instance, n);
        REQUIRE(before.best.has_value());
        REQUIRE(after.best.has_value());
        CHECK(before.best->first == after.best->first + pre.budget_spent);
    }
}
