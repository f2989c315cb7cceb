#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tss {

struct CaseRecord {
    std::string kind; // "failure" or "skip"
    std::string case_id;
    nlohmann::json payload; // full reproduction data: inputs, seed, expected vs actual
};

struct VerificationReport {
    std::string campaign;
    std::uint64_t seed = 0;
    int cases = 0;
    int failures = 0;
    int skipped = 0;
    double wall_seconds = 0.0;
    std::vector<CaseRecord> records;

    // everything needed to re-run the campaign bit-for-bit; case generation
    // is a pure function of these, so a saved report is a reproduction file
    nlohmann::json invocation;

    bool passed() const { return failures == 0; }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 200;
    int size_bound = 8;
    double oracle_budget_seconds = 10.0; // TSS_ORACLE_BUDGET overrides the default
    int workers = 1;
};

// Reduction-equivalence sweeps; `reduction_id` is one of unanimous_vc,
// preprocess, subdivide, majority, planar2grid, sat2tss, sat2majority,
// grid2exact2, is2udg.
VerificationReport verify_equivalence(const std::string& reduction_id,
                                      const VerifyOptions& opts);

// The five variable-gadget properties, the disk-chain placement and the
// cherry-pigeonhole property, all by direct simulation.
VerificationReport verify_gadgets();

// choose_w output: lengths, value range and the mod-6 congruence.
VerificationReport verify_mod6(int g_max);

// Re-runs the campaign recorded in a report's invocation block.
VerificationReport verify_replay(const nlohmann::json& report);

double default_oracle_budget_seconds();

} // namespace tss
