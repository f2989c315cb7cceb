#include "tss/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <set>

#include "tss/embed.hpp"
#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/io.hpp"
#include "tss/oracles.hpp"
#include "tss/reduce.hpp"
#include "tss/solve.hpp"

namespace tss {

using json = nlohmann::json;

json VerificationReport::to_json() const {
    json recs = json::array();
    for (const auto& r : records)
        recs.push_back(json{{"kind", r.kind}, {"case", r.case_id}, {"payload", r.payload}});
    return json{{"campaign", campaign},   {"seed", seed},
                {"cases", cases},         {"failures", failures},
                {"skipped", skipped},     {"wall_seconds", wall_seconds},
                {"invocation", invocation}, {"records", recs}};
}

double default_oracle_budget_seconds() {
    if (const char* env = std::getenv("TSS_ORACLE_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 10.0;
}

namespace {

struct Campaign {
    VerificationReport report;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Campaign(std::string name, std::uint64_t seed = 0) {
        report.campaign = std::move(name);
        report.seed = seed;
    }

    void fail(const std::string& id, json payload) {
        ++report.cases;
        ++report.failures;
        report.records.push_back({"failure", id, std::move(payload)});
    }
    void skip(const std::string& id, json payload) {
        ++report.cases;
        ++report.skipped;
        report.records.push_back({"skip", id, std::move(payload)});
    }
    void pass() { ++report.cases; }

    void check(bool ok, const std::string& id, json payload) {
        if (ok)
            pass();
        else
            fail(id, std::move(payload));
    }

    VerificationReport finish() {
        report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }
};

// Brute force with the per-case oracle budget; nullopt means timeout.
std::optional<std::optional<std::pair<int, std::vector<int>>>>
brute_with_budget(const TSSInstance& inst, int k_max, const VerifyOptions& opts) {
    BruteForceOptions bo;
    bo.workers = opts.workers;
    bo.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.oracle_budget_seconds));
    auto res = min_target_set_bruteforce(inst, k_max, bo);
    if (res.timed_out) return std::nullopt;
    return std::optional<std::optional<std::pair<int, std::vector<int>>>>{res.best};
}

const std::vector<int>& set_at(const ActivationTrace& tr, std::size_t i) {
    return tr.rounds[std::min(i, tr.rounds.size() - 1)];
}

bool contains(const std::vector<int>& sorted_set, int v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

// --------------------------------------------------------------- campaigns

void run_unanimous_vc(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 7919);
        const int n = static_cast<int>(rng.uniform(1, opts.size_bound));
        Graph g = random_graph(n, 0.3, rng);
        TSSInstance inst = vc_to_unanimous_tss({g, 0});
        const std::string id = "unanimous_vc/" + std::to_string(trial);

        auto brute = brute_with_budget(inst, n, opts);
        if (!brute) {
            c.skip(id, json{{"graph", graph_to_json(g)}, {"reason", "oracle timeout"}});
            continue;
        }
        auto cover = min_vertex_cover_naive(g);
        const int tss_min = (*brute)->first;
        const bool sizes_match = tss_min == static_cast<int>(cover.size());
        const bool cover_works = is_target_set(inst, cover);
        c.check(sizes_match && cover_works, id,
                json{{"graph", graph_to_json(g)},
                     {"expected_vc", cover.size()},
                     {"actual_tss_min", tss_min},
                     {"cover_is_target_set", cover_works}});
    }
}

void run_preprocess(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 31337);
        const int n = static_cast<int>(rng.uniform(1, opts.size_bound));
        TSSInstance inst = random_instance(n, 0.35, ThresholdMode::Uniform, rng);
        const std::string id = "preprocess/" + std::to_string(trial);

        auto pre = preprocess_cap_thresholds(inst);
        auto before = brute_with_budget(inst, n, opts);
        auto after = brute_with_budget(pre.instance, pre.instance.graph.vertex_count(), opts);
        if (!before || !after) {
            c.skip(id, json{{"instance", instance_to_json(inst)}, {"reason", "oracle timeout"}});
            continue;
        }
        const int k_before = (*before)->first;
        const int k_after = (*after)->first;
        c.check(k_before == k_after + pre.budget_spent, id,
                json{{"instance", instance_to_json(inst)},
                     {"k_min_original", k_before},
                     {"k_min_preprocessed", k_after},
                     {"budget_spent", pre.budget_spent}});
    }
}

void run_subdivide(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 104729);
        const int n = static_cast<int>(rng.uniform(2, opts.size_bound));
        TSSInstance inst = random_instance(n, 0.5, ThresholdMode::Capped, rng);
        if (inst.graph.edge_count() == 0) {
            c.pass();
            continue;
        }
        const Edge e = inst.graph.edges()[static_cast<std::size_t>(
            rng.uniform(0, inst.graph.edge_count() - 1))];
        const std::string id = "subdivide/" + std::to_string(trial);

        auto sub = subdivide_edge_once(inst, e);
        auto before = brute_with_budget(inst, n, opts);
        auto after = brute_with_budget(sub.instance, n + 1, opts);
        if (!before || !after) {
            c.skip(id, json{{"instance", instance_to_json(inst)}, {"reason", "oracle timeout"}});
            continue;
        }
        const int kb = (*before)->first, ka = (*after)->first;
        bool witness_ok = true;
        std::string witness_err;
        try {
            subdivide_lift_witness(inst, sub, (*before)->second);
            auto projected = subdivide_project_witness(inst, sub, (*after)->second);
            witness_ok = projected.size() == (*after)->second.size();
        } catch (const contract_error& ce) {
            witness_ok = false;
            witness_err = ce.what();
        }
        c.check(kb == ka && witness_ok, id,
                json{{"instance", instance_to_json(inst)},
                     {"edge", json::array({e.first, e.second})},
                     {"k_min_before", kb},
                     {"k_min_after", ka},
                     {"witness_error", witness_err}});
    }
}

void run_majority(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 65537);
        // keep the transformed instance within oracle reach
        TSSInstance inst;
        ReductionArtifact art;
        bool found = false;
        for (int tries = 0; tries < 64 && !found; ++tries) {
            const int n = static_cast<int>(rng.uniform(2, opts.size_bound));
            TSSInstance cand = random_instance(n, 2.5 / n, ThresholdMode::Capped, rng);
            cand.budget = n; // generous budget so witness contracts never bind
            ReductionArtifact a = majority_transform(cand);
            if (a.tss->graph.vertex_count() <= 30 && a.alpha <= 5) {
                inst = cand;
                art = std::move(a);
                found = true;
            }
        }
        const std::string id = "majority/" + std::to_string(trial);
        if (!found) {
            c.skip(id, json{{"reason", "no oracle-sized instance generated"}});
            continue;
        }

        auto before = brute_with_budget(inst, inst.graph.vertex_count(), opts);
        auto after = brute_with_budget(*art.tss, art.tss->graph.vertex_count(), opts);
        if (!before || !after) {
            c.skip(id, json{{"instance", instance_to_json(inst)}, {"reason", "oracle timeout"}});
            continue;
        }
        const int kb = (*before)->first, ka = (*after)->first;
        const bool majority_ok = classify_thresholds(*art.tss).majority;

        bool witness_ok = true;
        std::string witness_err;
        try {
            majority_lift_witness(art, (*before)->second);
            auto projected = majority_project_witness(art, (*after)->second);
            witness_ok = static_cast<int>(projected.size()) <= ka - art.alpha;
        } catch (const contract_error& ce) {
            witness_ok = false;
            witness_err = ce.what();
        }
        c.check(kb + art.alpha == ka && majority_ok && witness_ok, id,
                json{{"instance", instance_to_json(inst)},
                     {"alpha", art.alpha},
                     {"k_min_source", kb},
                     {"k_min_transformed", ka},
                     {"majority_classified", majority_ok},
                     {"witness_error", witness_err}});
    }
}

void run_planar2grid(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 99991);
        Graph g;
        for (int tries = 0; tries < 64; ++tries) {
            g = random_planar_deg4_graph(3, 3, 0.7, rng);
            if (g.vertex_count() >= 2 && g.vertex_count() <= opts.size_bound &&
                g.edge_count() >= 1)
                break;
        }
        const std::string id = "planar2grid/" + std::to_string(trial);
        if (g.vertex_count() < 2 || g.vertex_count() > opts.size_bound) {
            c.skip(id, json{{"reason", "no suitable planar graph generated"}});
            continue;
        }
        std::vector<int> t(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            t[static_cast<std::size_t>(v)] =
                static_cast<int>(rng.uniform(0, std::min(2, g.degree(v))));
        TSSInstance inst(g, t, g.vertex_count());

        try {
            RectilinearEmbedding emb = compute_embedding(g, {opts.seed + 17 * trial, 400});
            ReductionArtifact art = planar_tss_to_grid_tss(inst, emb);

            auto before = brute_with_budget(inst, inst.graph.vertex_count(), opts);
            auto after = brute_with_budget(*art.tss, inst.graph.vertex_count(), opts);
            if (!before || !after) {
                c.skip(id, json{{"instance", instance_to_json(inst)},
                                {"reason", "oracle timeout"}});
                continue;
            }
            const int kb = (*before)->first, ka = (*after)->first;

            // majority-input variant keeps the majority classification
            TSSInstance maj(g, random_thresholds(g, ThresholdMode::Majority, rng),
                            g.vertex_count());
            ReductionArtifact maj_art = planar_tss_to_grid_tss(maj, emb);
            const bool maj_ok = classify_thresholds(*maj_art.tss).majority;

            bool witness_ok = true;
            std::string witness_err;
            try {
                grid_lift_witness(art, (*before)->second);
                auto projected = grid_project_witness(art, (*after)->second);
                witness_ok = static_cast<int>(projected.size()) <= ka;
            } catch (const contract_error& ce) {
                witness_ok = false;
                witness_err = ce.what();
            }
            c.check(kb == ka && maj_ok && witness_ok, id,
                    json{{"instance", instance_to_json(inst)},
                         {"k_min_source", kb},
                         {"k_min_grid", ka},
                         {"majority_variant_ok", maj_ok},
                         {"witness_error", witness_err}});
        } catch (const embed_error& ee) {
            c.skip(id, json{{"graph", graph_to_json(g)}, {"reason", ee.what()}});
        }
    }
}

const char* kHandcraftedRestricted[] = {
    // UNSAT: (x)(x)(-x)
    "p cnf 1 3\n1 0\n1 0\n-1 0\n",
    // UNSAT: (x)(-x y)(-y)(x y)
    "p cnf 2 4\n1 0\n-1 2 0\n-2 0\n1 2 0\n",
    // SAT: (x y)(x -y)(-x y)
    "p cnf 2 3\n1 2 0\n1 -2 0\n-1 2 0\n",
    // SAT: (x -y)(x)(-x y)(y)
    "p cnf 2 4\n1 -2 0\n1 0\n-1 2 0\n2 0\n",
    // SAT: (x y)(y z)(z x)(-x -y -z)
    "p cnf 3 4\n1 2 0\n2 3 0\n3 1 0\n-1 -2 -3 0\n",
    // UNSAT: (x)(x -y)(-x y)(-y... wait: (x)(x y)(-x y)(-y)
    "p cnf 2 4\n1 0\n1 2 0\n-1 2 0\n-2 0\n",
};

void run_sat2tss(Campaign& c, const VerifyOptions& opts, bool majority_variant) {
    const int handcrafted = static_cast<int>(std::size(kHandcraftedRestricted));
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 49157);
        CnfFormula f;
        if (trial < handcrafted) {
            f = parse_dimacs(kHandcraftedRestricted[trial]);
        } else {
            f = random_restricted_3sat(static_cast<int>(rng.uniform(1, majority_variant ? 2 : 3)),
                                       rng);
        }
        const std::string id = (majority_variant ? "sat2majority/" : "sat2tss/") +
                               std::to_string(trial);
        const int n = f.num_vars, m = f.num_clauses();

        ReductionArtifact art =
            majority_variant ? sat_to_planar_majority_tss(f) : sat_to_planar_tss(f);
        const int k = art.tss->budget;
        Assignment sat_witness;
        const bool sat = satisfiable_naive(f, &sat_witness);

        auto brute = brute_with_budget(*art.tss, k, opts);
        if (!brute) {
            c.skip(id, json{{"dimacs", to_dimacs(f)}, {"reason", "oracle timeout"}});
            continue;
        }
        const bool reduced_yes = brute->has_value();
        bool structure_ok = true;
        std::string structure_err;
        if (!majority_variant) {
            if (art.tss->graph.vertex_count() != m + 11 * n) {
                structure_ok = false;
                structure_err = "vertex count != m+11n";
            }
            if (classify_thresholds(*art.tss).constant_bound > 2) {
                structure_ok = false;
                structure_err = "threshold above 2";
            }
        } else {
            if (k != 2 * n + art.beta) {
                structure_ok = false;
                structure_err = "budget != 2n+beta";
            }
        }
        if (art.tss->graph.max_degree() > 4) {
            structure_ok = false;
            structure_err = "max degree above 4";
        }

        bool witness_ok = true;
        std::string witness_err;
        if (sat && !majority_variant) {
            try {
                auto S = assignment_to_target_set(art, sat_witness);
                if (!is_target_set(*art.tss, S)) {
                    witness_ok = false;
                    witness_err = "assignment seed is not a target set";
                } else if (target_set_to_assignment(art, S) != sat_witness) {
                    witness_ok = false;
                    witness_err = "assignment round trip is not the identity";
                }
            } catch (const contract_error& ce) {
                witness_ok = false;
                witness_err = ce.what();
            }
        }
        if (sat && majority_variant) {
            // forward witness: anchors by assignment plus every cherry middle
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                S.push_back(sat_witness[static_cast<std::size_t>(i)]
                                ? art.gadgets[static_cast<std::size_t>(i)].anchor_true
                                : art.gadgets[static_cast<std::size_t>(i)].anchor_false);
            for (const auto& ch : art.cherries) S.push_back(ch[0]);
            if (static_cast<int>(S.size()) != k || !is_target_set(*art.tss, S)) {
                witness_ok = false;
                witness_err = "majority forward witness failed";
            }
        }

        c.check(sat == reduced_yes && structure_ok && witness_ok, id,
                json{{"dimacs", to_dimacs(f)},
                     {"satisfiable", sat},
                     {"reduction_yes", reduced_yes},
                     {"structure_error", structure_err},
                     {"witness_error", witness_err}});
    }
}

void run_grid2exact2(Campaign& c, const VerifyOptions& opts) {
    for (int trial = 0; trial < opts.trials; ++trial) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(trial) * 24593);
        Graph g;
        GridCoords coords;
        for (int tries = 0; tries < 64; ++tries) {
            auto [gg, cc] = random_grid_graph(4, 4, 0.6, rng);
            if (gg.vertex_count() >= 2 && gg.vertex_count() <= opts.size_bound) {
                g = std::move(gg);
                coords = std::move(cc);
                break;
            }
        }
        const std::string id = "grid2exact2/" + std::to_string(trial);
        if (g.vertex_count() < 2) {
            c.skip(id, json{{"reason", "no grid instance generated"}});
            continue;
        }
        TSSInstance inst(g, random_thresholds(g, ThresholdMode::Majority, rng),
                         static_cast<int>(rng.uniform(0, g.vertex_count())));

        // the reduction asserts thresholds, disk geometry and the
        // preprocessing round trip internally
        ReductionArtifact art = majority_grid_to_exact2_udg(inst, coords);

        auto before = brute_with_budget(inst, inst.graph.vertex_count(), opts);
        auto after = brute_with_budget(*art.tss, art.tss->graph.vertex_count(), opts);
        if (!before || !after) {
            c.skip(id, json{{"instance", instance_to_json(inst)}, {"reason", "oracle timeout"}});
            continue;
        }
        const int kb = (*before)->first, ka = (*after)->first;
        c.check(ka == kb + art.z && art.budget.k_out == inst.budget + art.z &&
                    art.tss->graph.max_degree() <= 4,
                id,
                json{{"instance", instance_to_json(inst)},
                     {"z", art.z},
                     {"k_min_source", kb},
                     {"k_min_exact2", ka}});
    }
}

void run_is2udg(Campaign& c, const VerifyOptions& opts) {
    struct Fixture {
        const char* name;
        Graph graph;
        int r;
    };
    const Fixture fixtures[] = {
        {"K4", complete_graph(4), 3},
        {"octahedron", octahedron_graph(), 4},
    };
    for (const auto& fx : fixtures) {
        const std::string id = std::string("is2udg/") + fx.name;
        try {
            RectilinearEmbedding emb = compute_embedding(fx.graph, {opts.seed, 400});
            auto alpha_src = max_independent_set_naive(fx.graph);
            ReductionArtifact art =
                is_planar_to_is_udg(fx.graph, fx.r, emb, static_cast<int>(alpha_src.size()));

            bool mult6 = true;
            for (const auto& p : art.plans)
                if (p.y % 6 != 0) mult6 = false;

            auto alpha_big = max_independent_set_bb(art.is_instance->graph);
            const bool alpha_ok = static_cast<long long>(alpha_big.size()) ==
                                  static_cast<long long>(alpha_src.size()) + art.sum3q;

            auto lifted = is_lift_witness(art, alpha_src);
            auto projected = is_project_witness(art, alpha_big);
            const bool witness_ok =
                static_cast<long long>(lifted.size()) ==
                    static_cast<long long>(alpha_src.size()) + art.sum3q &&
                static_cast<int>(projected.size()) == static_cast<int>(alpha_src.size());

            c.check(mult6 && alpha_ok && witness_ok, id,
                    json{{"graph", graph_to_json(fx.graph)},
                         {"alpha_source", alpha_src.size()},
                         {"alpha_udg", alpha_big.size()},
                         {"sum3q", art.sum3q},
                         {"mult6", mult6},
                         {"witness_ok", witness_ok}});
        } catch (const std::exception& e) {
            c.fail(id, json{{"graph", graph_to_json(fx.graph)}, {"error", e.what()}});
        }
    }
}

} // namespace

VerificationReport verify_equivalence(const std::string& reduction_id,
                                      const VerifyOptions& opts) {
    Campaign c("equivalence/" + reduction_id, opts.seed);
    c.report.invocation = json{{"campaign", "equivalence"},
                               {"reduction", reduction_id},
                               {"seed", opts.seed},
                               {"trials", opts.trials},
                               {"size_bound", opts.size_bound},
                               {"oracle_budget_seconds", opts.oracle_budget_seconds}};
    if (reduction_id == "unanimous_vc")
        run_unanimous_vc(c, opts);
    else if (reduction_id == "preprocess")
        run_preprocess(c, opts);
    else if (reduction_id == "subdivide")
        run_subdivide(c, opts);
    else if (reduction_id == "majority")
        run_majority(c, opts);
    else if (reduction_id == "planar2grid")
        run_planar2grid(c, opts);
    else if (reduction_id == "sat2tss")
        run_sat2tss(c, opts, false);
    else if (reduction_id == "sat2majority")
        run_sat2tss(c, opts, true);
    else if (reduction_id == "grid2exact2")
        run_grid2exact2(c, opts);
    else if (reduction_id == "is2udg")
        run_is2udg(c, opts);
    else
        throw input_error("unknown reduction id: " + reduction_id);
    return c.finish();
}

VerificationReport verify_replay(const json& report) {
    if (!report.contains("invocation") || report.at("invocation").is_null())
        throw input_error("verify_replay: report has no invocation block");
    const json& inv = report.at("invocation");
    const std::string campaign = inv.at("campaign").get<std::string>();
    if (campaign == "gadgets") return verify_gadgets();
    if (campaign == "mod6") return verify_mod6(inv.at("g_max").get<int>());
    if (campaign == "equivalence") {
        VerifyOptions opts;
        opts.seed = inv.at("seed").get<std::uint64_t>();
        opts.trials = inv.at("trials").get<int>();
        opts.size_bound = inv.at("size_bound").get<int>();
        opts.oracle_budget_seconds = inv.at("oracle_budget_seconds").get<double>();
        return verify_equivalence(inv.at("reduction").get<std::string>(), opts);
    }
    throw input_error("verify_replay: unknown campaign " + campaign);
}

VerificationReport verify_gadgets() {
    Campaign c("gadgets");
    c.report.invocation = json{{"campaign", "gadgets"}};

    // a single variable with clauses (x)(x)(-x): the three clause vertices
    // are exactly the gadget's outside neighbourhood
    CnfFormula f = parse_dimacs(kHandcraftedRestricted[0]);
    ReductionArtifact art = sat_to_planar_tss(f);
    const TSSInstance& inst = *art.tss;
    const VariableGadget& gd = art.gadgets[0];
    const int y_pos1 = art.clause_vertices[0]; // (x)
    const int y_pos2 = art.clause_vertices[1]; // (x)
    const int y_neg = art.clause_vertices[2];  // (-x)

    { // property i: seeding the true anchor reaches the ring in exactly 4 rounds
        auto tr = simulate(inst, {gd.anchor_true});
        const auto& s4 = set_at(tr, 4);
        bool all = contains(s4, gd.ring_a) && contains(s4, gd.ring_b) &&
                   contains(s4, gd.ring_c) && contains(s4, gd.ring_d) &&
                   contains(s4, gd.lit_pos);
        bool exact = !contains(set_at(tr, 3), gd.lit_pos);
        c.check(all && exact, "gadget/property-i",
                json{{"rounds", trace_to_json(tr)["rounds"]}});
    }
    { // property ii: seeding the false anchor reaches the whole literal path
        auto tr = simulate(inst, {gd.anchor_false});
        const auto& s4 = set_at(tr, 4);
        bool all = contains(s4, gd.path[0]) && contains(s4, gd.path[1]) &&
                   contains(s4, gd.path[2]) && contains(s4, gd.lit_neg);
        c.check(all, "gadget/property-ii", json{{"rounds", trace_to_json(tr)["rounds"]}});
    }
    { // property iii: an active boundary never infects the anchors
        auto tr = simulate(inst, {y_pos1, y_pos2, y_neg});
        const auto& fin = tr.final_set();
        c.check(!contains(fin, gd.anchor_true) && !contains(fin, gd.anchor_false),
                "gadget/property-iii", json{{"final", fin}});
    }
    { // property iv: false anchor plus activated positive literal fills the gadget
        auto tr = simulate(inst, {gd.anchor_false, y_pos1, y_pos2});
        c.check(static_cast<int>(tr.final_set().size()) == inst.graph.vertex_count(),
                "gadget/property-iv", json{{"final", tr.final_set()}});
    }
    { // property v: true anchor plus activated negative literal fills the gadget
        auto tr = simulate(inst, {gd.anchor_true, y_neg});
        c.check(static_cast<int>(tr.final_set().size()) == inst.graph.vertex_count(),
                "gadget/property-v", json{{"final", tr.final_set()}});
    }

    // disk-chain placement, all four lengths, exact arithmetic
    for (int l = 6; l <= 9; ++l) {
        auto centers = chain_centers({0, 0}, {1, 0}, l);
        const Rational d(1, 7);
        bool ends = centers.front().x == d && centers.front().y == Rational(0) &&
                    centers.back().x == Rational(1) - d && centers.back().y == Rational(0);
        DiskRepresentation chain{d, centers};
        bool path_graph_ok = intersection_graph_disks(chain) == path_graph(l);

        DiskRepresentation with_ends{d, {}};
        with_ends.centers.push_back({Rational(0), Rational(0)});
        with_ends.centers.insert(with_ends.centers.end(), centers.begin(), centers.end());
        with_ends.centers.push_back({Rational(1), Rational(0)});
        bool with_ends_ok = intersection_graph_disks(with_ends) == path_graph(l + 2);

        c.check(ends && path_graph_ok && with_ends_ok,
                "disk-chain/l=" + std::to_string(l),
                json{{"s1", centers.front().x.str()}, {"sl", centers.back().x.str()}});
    }

    { // cherry pigeonhole: every optimal target set hits every cherry
        TSSInstance src(path_graph(3), {0, 0, 0}, 0);
        ReductionArtifact m = majority_transform(src);
        auto best = min_target_set_bruteforce(*m.tss, m.tss->graph.vertex_count());
        const int k_min = best.best->first;
        const int big_n = m.tss->graph.vertex_count();

        bool all_hit = true;
        std::vector<int> comb(static_cast<std::size_t>(k_min));
        for (int i = 0; i < k_min; ++i) comb[static_cast<std::size_t>(i)] = i;
        // walk every subset of size k_min
        auto next_comb = [&]() {
            for (int i = k_min - 1; i >= 0; --i) {
                if (comb[static_cast<std::size_t>(i)] < big_n - k_min + i) {
                    ++comb[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k_min; ++j)
                        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            if (!is_target_set(*m.tss, comb)) continue;
            for (const auto& ch : m.cherries) {
                bool hit = false;
                for (int v : comb)
                    if (v == ch[0] || v == ch[1] || v == ch[2]) hit = true;
                if (!hit) all_hit = false;
            }
        } while (next_comb() && all_hit);
        c.check(all_hit, "cherry-pigeonhole",
                json{{"instance", instance_to_json(*m.tss)}, {"k_min", k_min}});
    }
    return c.finish();
}

VerificationReport verify_mod6(int g_max) {
    Campaign c("mod6");
    c.report.invocation = json{{"campaign", "mod6"}, {"g_max", g_max}};
    if (g_max < 2) throw input_error("verify_mod6: g_max must be >= 2");
    for (int g = 2; g <= g_max; ++g) {
        auto w = choose_w(g);
        long long y = g - 2;
        bool range_ok = static_cast<int>(w.size()) == g - 1;
        for (int x : w) {
            if (x < 6 || x > 9) range_ok = false;
            y += x;
        }
        c.check(range_ok && y % 6 == 0, "mod6/g=" + std::to_string(g),
                json{{"g", g}, {"w", w}, {"y", y}});
    }
    return c.finish();
}

} // namespace tss
