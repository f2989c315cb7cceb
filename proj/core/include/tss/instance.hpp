#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

/// A spread instance (G, t, k): graph, per-vertex activation thresholds and
/// seed budget. Thresholds are defined on exactly the graph's vertices.
struct TSSInstance {
    Graph graph;
    std::vector<int> thresholds;
    int budget = 0;

    TSSInstance() = default;
    TSSInstance(Graph g, std::vector<int> t, int k);
    bool operator==(const TSSInstance&) const = default;
};

/// The monotone round sets S_0 <= S_1 <= ... <= S_r; S_r is the first fixed
/// point of the activation map, so the trace never repeats a set.
struct ActivationTrace {
    std::vector<std::vector<int>> rounds;
    const std::vector<int>& final_set() const { return rounds.back(); }
};

struct ThresholdClasses {
    bool unanimous = false;          // t(v) = deg(v) everywhere
    bool majority = false;           // t(v) = ceil(deg(v)/2) everywhere
    int constant_bound = 0;          // minimal c with t(v) <= c everywhere
    std::optional<int> exact;        // common value when all thresholds agree
    std::vector<std::string> tags() const;
};

// One activation round: start set -> start plus every vertex whose threshold
// is met by its already-active neighbours. t(v)=0 vertices join in round 1
// regardless of the seed.
ActivationTrace simulate(const TSSInstance& inst, const std::vector<int>& seed);

bool is_target_set(const TSSInstance& inst, const std::vector<int>& seed);

ThresholdClasses classify_thresholds(const TSSInstance& inst);

struct PreprocessResult {
    TSSInstance instance;       // t(v) <= deg(v) everywhere
    std::vector<int> removed;   // forced vertices, in removal order (original ids)
    int budget_spent = 0;
    bool feasible = true;       // false: more forced vertices than budget, definite NO
    std::vector<int> survivor_to_original; // new id -> original id, ascending
};

// Repeatedly deletes vertices with t(v) > deg(v) (they sit in every target
// set), decrementing neighbour thresholds (floored at 0) and the budget.
PreprocessResult preprocess_cap_thresholds(const TSSInstance& inst);

// Moves seeds off threshold<=1 vertices onto neighbours where possible,
// keeping cardinality and target-set-ness. Deterministic: lowest seeded
// vertex first, lowest-index unseeded neighbour as replacement; replacement
// targets are never moved again.
std::vector<int> normalize_seed(const TSSInstance& inst, const std::vector<int>& seed);

struct BruteForceOptions {
    int workers = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BruteForceResult {
    std::optional<std::pair<int, std::vector<int>>> best; // (k_min, lex-first witness)
    bool timed_out = false;
};

// Exhaustive minimum target set: sizes 0,1,...,k_max, subsets in lexicographic
// order, first hit wins. Supersets of target sets are target sets, so the
// first size with a hit is optimal. Result is independent of worker count.
BruteForceResult min_target_set_bruteforce(const TSSInstance& inst, int k_max,
                                           const BruteForceOptions& opts = {});

} // namespace tss
