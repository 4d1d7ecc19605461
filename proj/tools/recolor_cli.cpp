#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/json_io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/poly_solvers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using recolor::Json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

void print_report(const Json& j) { std::cout << j.dump(2) << "\n"; }

recolor::OracleBudget budget_from(std::uint64_t flag_value, bool flag_set) {
    recolor::OracleBudget budget;
    if (flag_set) {
        budget.max_states = flag_value;
    } else if (const char* env = std::getenv("RECOLOR_BUDGET")) {
        budget.max_states = std::strtoull(env, nullptr, 10);
    }
    return budget;
}

struct VerifyArgs {
    std::string graph, coloring, lists, instance, sequence;
    int d = 0, k = 0;
};

int run_verify(const VerifyArgs& args) {
    if (!args.graph.empty()) {
        recolor::Graph g = recolor::graph_from_json(recolor::load_json_file(args.graph));
        recolor::Coloring col = recolor::coloring_from_json(
            g, recolor::load_json_file(args.coloring));
        std::optional<recolor::ListAssignment> lists;
        if (!args.lists.empty())
            lists = recolor::lists_from_json(g, recolor::load_json_file(args.lists));
        auto report = recolor::verify_coloring(g, args.d, args.k, col,
                                               lists ? &*lists : nullptr);
        Json out;
        out["valid"] = report.valid;
        Json conflicts = Json::array();
        for (auto [u, v] : report.conflicts)
            conflicts.push_back({g.label(u), g.label(v)});
        out["conflicts"] = std::move(conflicts);
        Json lv = Json::array();
        for (auto [v, c] : report.list_violations)
            lv.push_back({g.label(v), c});
        out["list_violations"] = std::move(lv);
        print_report(out);
        return report.valid ? kExitYes : kExitNo;
    }

    recolor::ReconfigInstance inst =
        recolor::instance_from_json(recolor::load_json_file(args.instance));
    Json out;
    out["instance_valid"] = true;
    if (!args.sequence.empty()) {
        recolor::ReconfigSequence seq =
            recolor::sequence_from_json(inst.graph, recolor::load_json_file(args.sequence));
        auto report = recolor::verify_sequence(inst, seq);
        out["sequence_ok"] = report.ok;
        if (report.first_bad_step)
            out["first_bad_step"] = *report.first_bad_step;
        if (report.final_mismatch)
            out["final_mismatch"] = true;
        print_report(out);
        return report.ok ? kExitYes : kExitNo;
    }
    print_report(out);
    return kExitYes;
}

struct SolveArgs {
    std::string instance, solver = "auto", emit_sequence;
    std::uint64_t budget = 0;
    bool budget_set = false;
};

bool all_components_within_diameter(const recolor::Graph& g, int d) {
    for (int v = 0; v < g.n; ++v) {
        auto dist = recolor::bfs_distances(g, v);
        for (int u = 0; u < g.n; ++u)
            if (dist[u] > d)
                return false;
    }
    return true;
}

bool is_path_graph(const recolor::Graph& g) {
    try {
        recolor::path_blocks(g, 1);
        return true;
    } catch (const recolor::input_error&) {
        return false;
    }
}

int run_solve(const SolveArgs& args) {
    recolor::ReconfigInstance inst =
        recolor::instance_from_json(recolor::load_json_file(args.instance));
    std::string solver = args.solver;
    if (solver == "auto") {
        if (!inst.lists && is_path_graph(inst.graph))
            solver = "path";
        else if (!inst.lists && all_components_within_diameter(inst.graph, inst.d))
            solver = "diameter";
        else if (!inst.lists && inst.d >= 3 && recolor::split_partition(inst.graph))
            solver = "split";
        else
            solver = "oracle";
    }

    bool yes = false;
    recolor::ReconfigSequence sequence;
    Json report;
    report["solver"] = solver;
    if (solver == "oracle") {
        auto result = recolor::reconfig_reachable(inst, budget_from(args.budget,
                                                                    args.budget_set));
        yes = result.reachable;
        sequence = result.sequence;
        report["states_visited"] = result.states_visited;
    } else {
        recolor::SolveOutcome outcome;
        if (solver == "path")
            outcome = recolor::solve_path(inst);
        else if (solver == "diameter")
            outcome = recolor::solve_diameter_le_d(inst);
        else if (solver == "split")
            outcome = recolor::solve_split(inst);
        else
            throw recolor::input_error("unknown solver '" + solver + "'");
        yes = outcome.yes;
        sequence = outcome.sequence;
        if (!outcome.certificate.empty())
            report["certificate"] = outcome.certificate;
    }
    report["decision"] = yes ? "yes" : "no";
    if (yes) {
        report["steps"] = sequence.steps.size();
        if (!args.emit_sequence.empty())
            recolor::save_json_file(args.emit_sequence,
                                    recolor::sequence_to_json(inst.graph, sequence));
    }
    print_report(report);
    return yes ? kExitYes : kExitNo;
}

struct ReduceArgs {
    std::string kind, in, out;
    int d = 0;
    int ell = 0;
    bool d_set = false, ell_set = false;
};

int run_reduce(const ReduceArgs& args) {
    Json in = recolor::load_json_file(args.in);
    auto take_instance = [&](const Json& j) {
        return j.contains("instance") ? j.at("instance") : j;
    };
    Json bundle;
    if (args.kind == "restrict-st") {
        recolor::STInstance source = recolor::st_from_json(take_instance(in));
        recolor::RestrictResult result = recolor::restrict_st(source);
        auto check = recolor::validate_st(result.out);
        if (!check.restricted)
            throw recolor::internal_error("restriction output failed revalidation");
        bundle = recolor::restrict_bundle_to_json(source, result);
    } else if (args.kind == "rst-to-list") {
        if (!args.d_set)
            throw recolor::input_error("rst-to-list requires --d");
        recolor::STInstance source = recolor::st_from_json(take_instance(in));
        auto art = recolor::rst_to_list(source, args.d);
        bundle = recolor::rst_bundle_to_json(art);
    } else if (args.kind == "list-to-plain") {
        recolor::ListToPlainArtifact art;
        if (in.contains("meta") &&
            in.at("meta").at("construction").get<std::string>() == "rst_to_list") {
            art = recolor::list_to_plain_from(recolor::rst_bundle_from_json(in));
        } else {
            art = recolor::list_to_plain(recolor::instance_from_json(take_instance(in)));
        }
        bundle = recolor::plain_bundle_to_json(art, "list_to_plain");
    } else if (args.kind == "reduce-palette") {
        auto art = recolor::plain_bundle_from_json(in);
        auto reduced = recolor::reduce_palette(art);
        bundle = recolor::plain_bundle_to_json(reduced, "reduce_palette");
    } else if (args.kind == "lcol-to-split") {
        if (!args.ell_set)
            throw recolor::input_error("lcol-to-split requires --l");
        recolor::Graph g = recolor::graph_from_json(take_instance(in).contains("graph")
                                                        ? take_instance(in).at("graph")
                                                        : take_instance(in));
        auto art = recolor::lcol_to_split(g, args.ell);
        bundle = recolor::split_bundle_to_json(art);
    } else if (args.kind == "lcr-to-split") {
        Json inst_json = take_instance(in);
        recolor::Graph g = recolor::graph_from_json(inst_json.at("graph"));
        recolor::Coloring alpha = recolor::coloring_from_json(g, inst_json.at("alpha"));
        recolor::Coloring beta = recolor::coloring_from_json(g, inst_json.at("beta"));
        int ell = args.ell_set ? args.ell : inst_json.at("k").get<int>();
        auto art = recolor::lcr_to_split(g, alpha, beta, ell);
        bundle = recolor::split_bundle_to_json(art);
    } else {
        throw recolor::input_error("unknown reduction '" + args.kind + "'");
    }
    recolor::save_json_file(args.out, bundle);
    Json report;
    report["construction"] = bundle.at("meta").at("construction");
    report["out"] = args.out;
    report["meta"] = bundle.at("meta");
    print_report(report);
    return kExitYes;
}

struct MapArgs {
    std::string bundle, sequence, direction, out;
};

int run_map_sequence(const MapArgs& args) {
    Json bundle = recolor::load_json_file(args.bundle);
    const std::string construction =
        bundle.at("meta").at("construction").get<std::string>();
    Json report;
    report["construction"] = construction;
    report["direction"] = args.direction;

    if (construction == "rst_to_list") {
        auto art = recolor::rst_bundle_from_json(bundle);
        if (args.direction == "lift") {
            auto moves = recolor::moves_from_json(recolor::load_json_file(args.sequence));
            auto seq = recolor::lift_ts_sequence(art, moves);
            auto check = recolor::verify_sequence(art.out, seq);
            if (!check.ok)
                throw recolor::internal_error("lifted sequence failed verification");
            recolor::save_json_file(args.out, recolor::sequence_to_json(art.out.graph, seq));
            report["steps"] = seq.steps.size();
        } else {
            auto seq = recolor::sequence_from_json(art.out.graph,
                                                   recolor::load_json_file(args.sequence));
            auto moves = recolor::project_recoloring_sequence(art, seq);
            recolor::save_json_file(args.out, recolor::moves_to_json(moves));
            report["moves"] = moves.moves.size();
        }
    } else if (construction == "lcr_to_split") {
        auto art = recolor::split_bundle_from_json(bundle);
        if (args.direction == "lift") {
            auto seq = recolor::sequence_from_json(art.source,
                                                   recolor::load_json_file(args.sequence));
            auto lifted = recolor::lift_split_sequence(art, seq);
            auto check = recolor::verify_sequence(*art.out, lifted);
            if (!check.ok)
                throw recolor::internal_error("lifted sequence failed verification");
            recolor::save_json_file(args.out,
                                    recolor::sequence_to_json(art.out->graph, lifted));
            report["steps"] = lifted.steps.size();
        } else {
            auto seq = recolor::sequence_from_json(art.out->graph,
                                                   recolor::load_json_file(args.sequence));
            auto projected = recolor::project_split_sequence(art, seq);
            recolor::save_json_file(args.out,
                                    recolor::sequence_to_json(art.source, projected));
            report["steps"] = projected.steps.size();
        }
    } else {
        throw recolor::input_error("bundle construction '" + construction +
                                   "' has no sequence mapping");
    }
    print_report(report);
    return kExitYes;
}

struct GenArgs {
    std::string kind, out;
    int n = 5, n_clique = 3, n_indep = 3, n_triangles = 1, n_token_edges = 2;
    double edge_prob = 0.5;
    std::uint64_t seed = 1;
};

int run_gen(const GenArgs& args) {
    Json payload;
    if (args.kind == "path") {
        payload = recolor::graph_to_json(recolor::gen_path(args.n));
    } else if (args.kind == "split") {
        payload = recolor::graph_to_json(
            recolor::gen_split(args.n_clique, args.n_indep, args.edge_prob, args.seed));
    } else if (args.kind == "random-connected") {
        payload = recolor::graph_to_json(
            recolor::gen_random_connected(args.n, args.edge_prob, args.seed));
    } else if (args.kind == "st") {
        payload = recolor::st_to_json(
            recolor::gen_st(args.n_triangles, args.n_token_edges, args.seed));
    } else {
        throw recolor::input_error("unknown generator '" + args.kind + "'");
    }
    recolor::save_json_file(args.out, payload);
    Json report;
    report["kind"] = args.kind;
    report["out"] = args.out;
    print_report(report);
    return kExitYes;
}

struct OracleArgs {
    std::string instance, emit_sequence;
    std::uint64_t budget = 0;
    bool budget_set = false;
};

int run_oracle(const OracleArgs& args) {
    recolor::ReconfigInstance inst =
        recolor::instance_from_json(recolor::load_json_file(args.instance));
    auto result = recolor::reconfig_reachable(inst, budget_from(args.budget, args.budget_set));
    Json report;
    report["decision"] = result.reachable ? "yes" : "no";
    report["states_visited"] = result.states_visited;
    if (result.reachable) {
        report["steps"] = result.sequence.steps.size();
        if (!args.emit_sequence.empty())
            recolor::save_json_file(args.emit_sequence,
                                    recolor::sequence_to_json(inst.graph, result.sequence));
    }
    print_report(report);
    return result.reachable ? kExitYes : kExitNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance coloring reconfiguration toolkit"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "validate a coloring or replay a sequence");
    verify->add_option("--graph", verify_args.graph);
    verify->add_option("--coloring", verify_args.coloring);
    verify->add_option("--lists", verify_args.lists);
    verify->add_option("--instance", verify_args.instance);
    verify->add_option("--sequence", verify_args.sequence);
    verify->add_option("--d", verify_args.d);
    verify->add_option("--k", verify_args.k);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "decide reachability and emit a sequence");
    solve->add_option("--instance", solve_args.instance)->required();
    solve->add_option("--solver", solve_args.solver)
        ->check(CLI::IsMember({"auto", "path", "diameter", "split", "oracle"}));
    auto* budget_opt = solve->add_option("--budget", solve_args.budget);
    solve->add_option("--emit-sequence", solve_args.emit_sequence);

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "apply a reduction and write its bundle");
    reduce->add_option("kind", reduce_args.kind)
        ->required()
        ->check(CLI::IsMember({"restrict-st", "rst-to-list", "list-to-plain",
                               "reduce-palette", "lcol-to-split", "lcr-to-split"}));
    reduce->add_option("--in", reduce_args.in)->required();
    reduce->add_option("--out", reduce_args.out)->required();
    auto* reduce_d = reduce->add_option("--d", reduce_args.d);
    auto* reduce_l = reduce->add_option("--l", reduce_args.ell);

    MapArgs map_args;
    auto* map = app.add_subcommand("map-sequence", "translate sequences through a bundle");
    map->add_option("--bundle", map_args.bundle)->required();
    map->add_option("--sequence", map_args.sequence)->required();
    map->add_option("--direction", map_args.direction)
        ->required()
        ->check(CLI::IsMember({"lift", "project"}));
    map->add_option("--out", map_args.out)->required();

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("kind", gen_args.kind)
        ->required()
        ->check(CLI::IsMember({"path", "split", "random-connected", "st"}));
    gen->add_option("--out", gen_args.out)->required();
    gen->add_option("--n", gen_args.n);
    gen->add_option("--n-clique", gen_args.n_clique);
    gen->add_option("--n-indep", gen_args.n_indep);
    gen->add_option("--n-triangles", gen_args.n_triangles);
    gen->add_option("--n-token-edges", gen_args.n_token_edges);
    gen->add_option("--edge-prob", gen_args.edge_prob);
    gen->add_option("--seed", gen_args.seed);

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reachability search");
    oracle->add_option("--instance", oracle_args.instance)->required();
    auto* oracle_budget = oracle->add_option("--budget", oracle_args.budget);
    oracle->add_option("--emit-sequence", oracle_args.emit_sequence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitError : kExitYes;
    }

    try {
        if (*verify) {
            if (verify_args.graph.empty() == verify_args.instance.empty())
                throw recolor::input_error("verify needs either --graph/--coloring or --instance");
            return run_verify(verify_args);
        }
        if (*solve) {
            solve_args.budget_set = budget_opt->count() > 0;
            return run_solve(solve_args);
        }
        if (*reduce) {
            reduce_args.d_set = reduce_d->count() > 0;
            reduce_args.ell_set = reduce_l->count() > 0;
            return run_reduce(reduce_args);
        }
        if (*map)
            return run_map_sequence(map_args);
        if (*gen)
            return run_gen(gen_args);
        if (*oracle) {
            oracle_args.budget_set = oracle_budget->count() > 0;
            return run_oracle(oracle_args);
        }
    } catch (const recolor::budget_exceeded& e) {
        Json report;
        report["error"] = "budget_exceeded";
        report["detail"] = e.what();
        report["states_visited"] = e.states_visited;
        print_report(report);
        return kExitError;
    } catch (const std::exception& e) {
        Json report;
        report["error"] = e.what();
        print_report(report);
        return kExitError;
    }
    return kExitError;
}
