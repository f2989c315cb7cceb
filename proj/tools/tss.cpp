// Command line front end: solve / simulate / reduce / verify / embed / gen.
// Exit codes: 0 success, 1 domain-level NO or failure, 2 usage/input error.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "tss/cnf.hpp"
#include "tss/embed.hpp"
#include "tss/errors.hpp"
#include "tss/gen.hpp"
#include "tss/io.hpp"
#include "tss/oracles.hpp"
#include "tss/reduce.hpp"
#include "tss/solve.hpp"
#include "tss/svg.hpp"
#include "tss/verify.hpp"

namespace {

using tss::json;

struct CommonOpts {
    std::string in, out, svg;
    std::uint64_t seed = 0;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
};

void emit(const std::string& out_path, const json& j) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        tss::write_json_file(out_path, j);
}

struct LoadedInstance {
    tss::TSSInstance inst;
    std::optional<tss::GridCoords> coords;
};

// accepts a bare instance or the {"instance":..., "coords":...} bundle gen emits
LoadedInstance load_instance(const std::string& path) {
    json j = tss::read_json_file(path);
    if (j.contains("instance")) {
        LoadedInstance l{tss::instance_from_json(j.at("instance")), {}};
        if (j.contains("coords")) l.coords = tss::grid_coords_from_json(j.at("coords"));
        return l;
    }
    return {tss::instance_from_json(j), {}};
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                try {
                    out.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw tss::input_error("bad vertex id in seed set: " + cur);
                }
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

int cmd_solve(const CommonOpts& o, const std::string& mode, const std::string& interval_path,
              const std::string& grid_path, int kmax) {
    if (mode != "auto" && mode != "brute" && mode != "unanimous")
        throw tss::input_error("unknown solve mode: " + mode);
    auto loaded = load_instance(o.in);
    tss::TSSInstance& inst = loaded.inst;
    const int n = inst.graph.vertex_count();
    if (kmax < 0) kmax = n;

    tss::UnanimousCertificate cert;
    if (!interval_path.empty())
        cert.interval = tss::interval_model_from_json(tss::read_json_file(interval_path));
    if (!grid_path.empty())
        cert.grid = tss::grid_coords_from_json(tss::read_json_file(grid_path));
    if (!cert.grid && loaded.coords) cert.grid = loaded.coords;
    const bool has_cert = cert.interval.has_value() || cert.grid.has_value();

    int k_min = -1;
    std::vector<int> witness;
    const bool unanimous = tss::classify_thresholds(inst).unanimous;
    if (mode == "unanimous" || (mode == "auto" && unanimous && has_cert)) {
        auto [k, w] = tss::solve_unanimous(inst, cert);
        k_min = k;
        witness = std::move(w);
    } else {
        tss::BruteForceOptions bo;
        bo.workers = o.workers;
        auto res = tss::min_target_set_bruteforce(inst, kmax, bo);
        if (!res.best) {
            std::cout << "no target set of size <= " << kmax << "\n";
            emit(o.out, json{{"k_min", nullptr}, {"witness", json::array()}});
            return 1;
        }
        k_min = res.best->first;
        witness = res.best->second;
    }
    if (!tss::is_target_set(inst, witness)) {
        std::cerr << "internal error: witness failed re-verification\n";
        return 1;
    }
    std::cout << "k_min = " << k_min << ", witness size " << witness.size() << "\n";
    emit(o.out, json{{"k_min", k_min}, {"witness", witness}});
    return 0;
}

int cmd_simulate(const CommonOpts& o, const std::string& seed_set) {
    tss::TSSInstance inst = load_instance(o.in).inst;
    auto seed = parse_vertex_list(seed_set);
    auto trace = tss::simulate(inst, seed);
    const bool full = static_cast<int>(trace.final_set().size()) == inst.graph.vertex_count();
    std::cout << "rounds: " << trace.rounds.size() - 1 << ", infected "
              << trace.final_set().size() << "/" << inst.graph.vertex_count()
              << (full ? " (target set)" : "") << "\n";
    emit(o.out, tss::trace_to_json(trace));
    return 0;
}

int cmd_embed(const CommonOpts& o) {
    tss::Graph g = tss::graph_from_json(tss::read_json_file(o.in));
    tss::RectilinearEmbedding emb = tss::compute_embedding(g, {o.seed});
    std::cout << "embedded " << g.vertex_count() << " vertices, area "
              << tss::embedding_area(emb) << "\n";
    emit(o.out, tss::embedding_to_json(g, emb));
    if (!o.svg.empty()) tss::write_text_file(o.svg, tss::svg_embedding(g, emb));
    return 0;
}

tss::RectilinearEmbedding load_or_compute_embedding(const tss::Graph& g,
                                                    const std::string& emb_path,
                                                    std::uint64_t seed) {
    if (!emb_path.empty()) {
        auto emb = tss::embedding_from_json(g, tss::read_json_file(emb_path));
        auto rep = tss::validate_embedding(g, emb);
        if (!rep.ok) throw tss::input_error("embedding rejected: " + rep.first());
        return emb;
    }
    return tss::compute_embedding(g, {seed});
}

int emit_artifact(const CommonOpts& o, const tss::ReductionArtifact& art) {
    if (art.tss)
        std::cout << art.reduction << ": " << art.tss->graph.vertex_count()
                  << " vertices, k' = " << art.budget.k_out << "\n";
    else
        std::cout << art.reduction << ": " << art.is_instance->graph.vertex_count()
                  << " vertices, k' = " << art.budget.k_out << "\n";
    emit(o.out, tss::artifact_to_json(art));
    if (!o.svg.empty() && art.disks) tss::write_text_file(o.svg, tss::svg_disks(*art.disks));
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& campaign, const std::string& reduction,
               int trials, int size_bound, int gmax, double budget) {
    tss::VerificationReport rep;
    if (campaign == "gadgets") {
        rep = tss::verify_gadgets();
    } else if (campaign == "mod6") {
        rep = tss::verify_mod6(gmax);
    } else if (campaign == "rerun") {
        if (o.in.empty()) throw tss::input_error("rerun needs --in report.json");
        rep = tss::verify_replay(tss::read_json_file(o.in));
    } else if (campaign == "equivalence") {
        if (reduction.empty()) throw tss::input_error("equivalence needs --reduction");
        tss::VerifyOptions opts;
        opts.seed = o.seed;
        opts.trials = trials;
        opts.size_bound = size_bound;
        opts.oracle_budget_seconds = budget;
        opts.workers = o.workers;
        rep = tss::verify_equivalence(reduction, opts);
    } else {
        throw tss::input_error("unknown campaign: " + campaign);
    }
    std::cout << rep.campaign << ": " << rep.cases << " cases, " << rep.failures
              << " failures, " << rep.skipped << " skipped, "
              << rep.wall_seconds << " s\n";
    emit(o.out, rep.to_json());
    return rep.passed() ? 0 : 1;
}

int cmd_gen(const CommonOpts& o, const std::string& type, int n, int width, int height,
            double p, const std::string& tmode_name, int k) {
    tss::Rng rng(o.seed);
    tss::ThresholdMode tmode = tss::ThresholdMode::Uniform;
    if (tmode_name == "capped") tmode = tss::ThresholdMode::Capped;
    else if (tmode_name == "unanimous") tmode = tss::ThresholdMode::Unanimous;
    else if (tmode_name == "majority") tmode = tss::ThresholdMode::Majority;
    else if (tmode_name != "uniform") throw tss::input_error("unknown tmode: " + tmode_name);

    if (type == "er") {
        tss::Graph g = tss::random_graph(n, p, rng);
        auto t = tss::random_thresholds(g, tmode, rng);
        tss::TSSInstance inst(g, t, k >= 0 ? k : n);
        emit(o.out, tss::instance_to_json(inst));
    } else if (type == "grid") {
        auto [g, coords] = tss::random_grid_graph(width, height, p, rng);
        tss::TSSInstance inst(g, tss::random_thresholds(g, tmode, rng),
                              k >= 0 ? k : g.vertex_count());
        emit(o.out, json{{"instance", tss::instance_to_json(inst)},
                         {"coords", tss::grid_coords_to_json(coords)}});
    } else if (type == "interval") {
        emit(o.out, tss::interval_model_to_json(tss::random_interval_model(n, 4 * n + 4, rng)));
    } else if (type == "rsat") {
        std::string text = tss::to_dimacs(tss::random_restricted_3sat(n, rng));
        if (o.out.empty())
            std::cout << text;
        else
            tss::write_text_file(o.out, text);
    } else if (type == "planar4") {
        emit(o.out, tss::graph_to_json(tss::random_planar_deg4_graph(width, height, p, rng)));
    } else {
        throw tss::input_error("unknown generator type: " + type);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"target-set selection on geometric graphs: solvers, reductions, verification"};
    app.require_subcommand(1);

    CommonOpts o;
    app.add_option("--workers", o.workers, "worker threads for the brute-force oracle");

    // solve
    auto* solve = app.add_subcommand("solve", "minimum target set of an instance");
    std::string mode = "auto", interval_path, grid_path;
    int kmax = -1;
    solve->add_option("--in", o.in, "instance JSON")->required();
    solve->add_option("--out", o.out, "result JSON path (stdout if omitted)");
    solve->add_option("--mode", mode, "auto | brute | unanimous");
    solve->add_option("--interval", interval_path, "interval model certificate JSON");
    solve->add_option("--grid", grid_path, "grid coordinates certificate JSON");
    solve->add_option("--kmax", kmax, "largest seed size to try (default n)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the activation process");
    std::string seed_set;
    simulate->add_option("--in", o.in, "instance JSON")->required();
    simulate->add_option("--seed-set", seed_set, "comma-separated seed vertices")->required();
    simulate->add_option("--out", o.out, "trace JSON path");

    // embed
    auto* embed = app.add_subcommand("embed", "rectilinear embedding of a planar graph");
    embed->add_option("--in", o.in, "graph JSON")->required();
    embed->add_option("--out", o.out, "embedding JSON path");
    embed->add_option("--seed", o.seed, "placement seed");
    embed->add_option("--svg", o.svg, "also draw the embedding");

    // reduce <id>
    auto* reduce = app.add_subcommand("reduce", "instance transformations");
    reduce->require_subcommand(1);
    std::string emb_path, coords_path;
    int blowup_q = 1, is_k = 0;
    auto add_io = [&](CLI::App* sub, bool needs_out = true) {
        sub->add_option("--in", o.in, "input path")->required();
        if (needs_out) sub->add_option("--out", o.out, "artifact JSON path");
        sub->add_option("--seed", o.seed, "seed for any embedding computed on the fly");
    };
    auto* r_sat = reduce->add_subcommand("sat2tss", "restricted 3-SAT to planar TSS, thresholds <= 2");
    add_io(r_sat);
    auto* r_satm = reduce->add_subcommand("sat2majority", "restricted 3-SAT to planar majority TSS");
    add_io(r_satm);
    auto* r_grid = reduce->add_subcommand("planar2grid", "planar TSS to grid TSS along an embedding");
    add_io(r_grid);
    r_grid->add_option("--emb", emb_path, "embedding JSON (computed when omitted)");
    auto* r_maj = reduce->add_subcommand("majority", "general TSS to majority TSS");
    add_io(r_maj);
    auto* r_udg = reduce->add_subcommand("is2udg", "IS on an r-regular planar graph to IS on an r-regular unit disk graph");
    add_io(r_udg);
    r_udg->add_option("--emb", emb_path, "embedding JSON (computed when omitted)");
    r_udg->add_option("--k", is_k, "source independent-set bound");
    r_udg->add_option("--svg", o.svg, "draw the disk representation");
    auto* r_e2 = reduce->add_subcommand("grid2exact2", "majority grid TSS to exact-threshold-2 unit disk TSS");
    add_io(r_e2);
    r_e2->add_option("--coords", coords_path, "grid coordinates JSON (optional for bundled inputs)");
    r_e2->add_option("--svg", o.svg, "draw the disk representation");
    auto* r_blow = reduce->add_subcommand("blowup", "replace each vertex by a clique K_q");
    add_io(r_blow);
    r_blow->add_option("--q", blowup_q, "clique size")->required();

    // verify <campaign>
    auto* verify = app.add_subcommand("verify", "verification campaigns");
    std::string campaign, reduction;
    int trials = 200, size_bound = 8, gmax = 1000;
    double budget = tss::default_oracle_budget_seconds();
    verify->add_option("campaign", campaign, "equivalence | gadgets | mod6 | rerun")->required();
    verify->add_option("--reduction", reduction,
                       "unanimous_vc | preprocess | subdivide | majority | planar2grid | "
                       "sat2tss | sat2majority | grid2exact2 | is2udg");
    verify->add_option("--in", o.in, "report JSON to replay (campaign rerun)");
    verify->add_option("--seed", o.seed, "campaign seed");
    verify->add_option("--trials", trials, "cases to run");
    verify->add_option("--size-bound", size_bound, "max source instance size");
    verify->add_option("--gmax", gmax, "largest chain length for mod6");
    verify->add_option("--budget", budget, "oracle seconds per case (env TSS_ORACLE_BUDGET)");
    verify->add_option("--out", o.out, "report JSON path");

    // gen
    auto* gen = app.add_subcommand("gen", "random inputs for experiments");
    std::string type = "er", tmode_name = "uniform";
    int n = 8, width = 4, height = 4, k = -1;
    double p = 0.3;
    gen->add_option("--type", type, "er | grid | interval | rsat | planar4")->required();
    gen->add_option("--n", n, "vertex / variable / interval count");
    gen->add_option("--width", width, "grid width");
    gen->add_option("--height", height, "grid height");
    gen->add_option("--p", p, "edge / keep probability");
    gen->add_option("--tmode", tmode_name, "uniform | capped | unanimous | majority");
    gen->add_option("--k", k, "budget (default n)");
    gen->add_option("--seed", o.seed, "generator seed");
    gen->add_option("--out", o.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) return cmd_solve(o, mode, interval_path, grid_path, kmax);
        if (*simulate) return cmd_simulate(o, seed_set);
        if (*embed) return cmd_embed(o);
        if (*verify) return cmd_verify(o, campaign, reduction, trials, size_bound, gmax, budget);
        if (*gen) return cmd_gen(o, type, n, width, height, p, tmode_name, k);

        if (*reduce) {
            const char* planarity_note =
                "note: incidence-graph planarity of the formula is NOT verified; the output "
                "is planar only when the input formula was planar. The instance-level "
                "equivalence (satisfiable <=> k_min <= budget) holds regardless.\n";
            if (*r_sat) {
                std::cout << planarity_note;
                return emit_artifact(o, tss::sat_to_planar_tss(tss::parse_dimacs(
                                            tss::read_text_file(o.in))));
            }
            if (*r_satm) {
                std::cout << planarity_note;
                return emit_artifact(o, tss::sat_to_planar_majority_tss(tss::parse_dimacs(
                                            tss::read_text_file(o.in))));
            }
            if (*r_grid) {
                auto inst = load_instance(o.in).inst;
                auto emb = load_or_compute_embedding(inst.graph, emb_path, o.seed);
                return emit_artifact(o, tss::planar_tss_to_grid_tss(inst, emb));
            }
            if (*r_maj) {
                auto inst = load_instance(o.in).inst;
                return emit_artifact(o, tss::majority_transform(inst));
            }
            if (*r_udg) {
                auto g = tss::graph_from_json(tss::read_json_file(o.in));
                const int r = g.vertex_count() > 0 ? g.degree(0) : 0;
                auto emb = load_or_compute_embedding(g, emb_path, o.seed);
                return emit_artifact(o, tss::is_planar_to_is_udg(g, r, emb, is_k));
            }
            if (*r_e2) {
                auto loaded = load_instance(o.in);
                std::optional<tss::GridCoords> coords = loaded.coords;
                if (!coords_path.empty())
                    coords = tss::grid_coords_from_json(tss::read_json_file(coords_path));
                if (!coords)
                    throw tss::input_error("grid2exact2 needs --coords or a bundled input");
                return emit_artifact(o,
                                     tss::majority_grid_to_exact2_udg(loaded.inst, *coords));
            }
            if (*r_blow) {
                auto g = tss::graph_from_json(tss::read_json_file(o.in));
                auto [big, disks] = tss::clique_blowup_is(g, blowup_q);
                json out = {{"graph", tss::graph_to_json(big)}};
                if (disks) out["disks"] = tss::disks_to_json(*disks);
                emit(o.out, out);
                return 0;
            }
        }
    } catch (const tss::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tss::embed_error& e) {
        std::cerr << "embedding failed: " << e.what() << "\n";
        return 1;
    } catch (const tss::contract_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
