// Command-line surface for the strong-clique toolkit. Subcommands mirror the
// library modules: gen, omega, bounds, verify, certify, stability, sweep.
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 2 bad input,
// 3 precondition failure, 4 violated bound (treated as a potential
// counterexample and never ignored).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgc/bounds.hpp"
#include "sgc/certificates.hpp"
#include "sgc/generators.hpp"
#include "sgc/graph.hpp"
#include "sgc/io.hpp"
#include "sgc/line_graph.hpp"
#include "sgc/solver.hpp"
#include "sgc/stability.hpp"
#include "sgc/sweep.hpp"

using nlohmann::json;

namespace {

sgc::Graph load_graph(const std::string& path) {
    if (path == "-") return sgc::read_graph(std::cin);
    return sgc::read_graph_file(path);
}

json check_to_json(const sgc::CheckResult& c) {
    return json{{"name", c.name},       {"lhs", c.lhs},   {"rhs", c.rhs},
                {"equality", c.equality}, {"ok", c.ok},   {"slack", c.slack}};
}

json checks_to_json(const std::vector<sgc::CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(check_to_json(c));
    return arr;
}

json witness_to_json(const sgc::StabilityWitness& w) {
    json matching = json::array();
    for (const auto& [u, v] : w.matching) matching.push_back(json::array({u, v}));
    return json{{"a", w.a},
                {"b", w.b},
                {"Aprime", w.a_prime},
                {"Bprime", w.b_prime},
                {"S_a", w.s_a},
                {"S_b", w.s_b},
                {"E_a_size", w.e_a_size},
                {"E_b_size", w.e_b_size},
                {"epsilon", w.epsilon},
                {"alpha", w.alpha},
                {"matching", matching},
                {"matching_size", w.matching_size},
                {"cover", w.cover},
                {"cover_size", w.cover_size},
                {"r_guarantee_real", w.r_guarantee_real},
                {"r_guaranteed", w.r_guaranteed},
                {"r_found", w.r_found},
                {"biclique_A", w.biclique_a},
                {"biclique_B", w.biclique_b}};
}

sgc::EdgeSet clique_or_solve(const sgc::Graph& g, const std::vector<int>& edges, int threads) {
    if (!edges.empty()) return sgc::EdgeSet(edges.begin(), edges.end());
    sgc::SolveOptions opts;
    opts.threads = threads;
    return sgc::max_strong_clique(g, opts).witness;
}

sgc::GeneratorSpec parse_random_spec(const std::string& text, uint64_t seed) {
    sgc::GeneratorSpec spec;
    spec.seed = seed;
    std::istringstream iss(text);
    std::string tok;
    if (!std::getline(iss, tok, ':')) throw sgc::input_error("empty generator spec");
    spec.family = tok;
    while (std::getline(iss, tok, ':')) {
        try {
            spec.params.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw sgc::input_error("bad generator parameter '" + tok + "' in '" + text + "'");
        }
    }
    return spec;
}

struct Cli {
    // gen
    std::string gen_family;
    std::vector<double> gen_params;
    uint64_t gen_seed = 1;
    std::string gen_out;
    // omega / certify / stability / verify
    std::string path;
    int threads = 1;
    double a = 1.0 / 3.0;
    std::vector<int> edge_ids;
    std::string certify_mode;
    // sweep
    int exhaustive_n = 0;
    std::string random_text;
    int count = 0;
    uint64_t seed = 1;
    std::string checks_text;
    std::string out_path;
};

int run_gen(const Cli& cli) {
    sgc::GeneratorSpec spec{cli.gen_family, cli.gen_params, cli.gen_seed};
    sgc::Graph g = sgc::make_graph(spec);
    if (cli.gen_out.empty() || cli.gen_out == "-")
        sgc::write_graph(std::cout, g);
    else
        sgc::write_graph_file(cli.gen_out, g);
    return 0;
}

int run_conflict(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    sgc::EdgeConflictGraph c = sgc::square_of_line_graph(g);
    sgc::Graph out(c.m);
    for (sgc::EdgeId e = 0; e < c.m; ++e)
        for (sgc::EdgeId f : c.adj[static_cast<size_t>(e)])
            if (f > e) out.add_edge(e, f);
    if (cli.out_path.empty() || cli.out_path == "-")
        sgc::write_graph(std::cout, out);
    else
        sgc::write_graph_file(cli.out_path, out);
    return 0;
}

int run_omega(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    sgc::SolveOptions opts;
    opts.threads = cli.threads;
    sgc::SolveResult res = sgc::max_strong_clique(g, opts);
    json out{{"omega", res.omega},
             {"witness", res.witness},
             {"nodes", res.nodes_explored},
             {"ms", res.elapsed_ms},
             {"deterministic_witness", res.deterministic_witness}};
    std::cout << out.dump() << '\n';
    return 0;
}

int run_bounds(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    sgc::OreReport ore = sgc::ore_degree(g, sgc::all_edges(g));
    sgc::BoundCatalog cat = sgc::bound_catalog(ore, cli.a);
    json out{{"trivial_2d2", cat.trivial_2d2},
             {"nowak_15d2", cat.nowak_15d2},
             {"conj_125d2", cat.conj_125d2},
             {"general_sigma2_3", cat.general_sigma2_3},
             {"general_43d2", cat.general_43d2},
             {"bip_sigma2_4", cat.bip_sigma2_4},
             {"bip_exact", cat.bip_exact},
             {"reduction_a", cat.reduction_a},
             {"ore", json{{"delta_G", ore.delta_G},
                          {"delta_H", ore.delta_H},
                          {"sigma_G", ore.sigma_G},
                          {"sigma_G_H", ore.sigma_G_H}}}};
    std::cout << out.dump() << '\n';
    return 0;
}

int run_verify(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    auto bad = sgc::verify_strong_clique(g, sgc::EdgeSet(cli.edge_ids.begin(), cli.edge_ids.end()));
    json out{{"ok", !bad.has_value()}};
    if (bad) out["failing_pair"] = json::array({bad->first, bad->second});
    std::cout << out.dump() << '\n';
    return 0;  // a correct "no" is still a successful verification
}

int run_certify(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    sgc::EdgeSet h = clique_or_solve(g, cli.edge_ids, cli.threads);
    json out;
    bool ok;
    if (cli.certify_mode == "bipartite") {
        auto p = sgc::bipartition_of(g);
        if (!p) throw sgc::precondition_error("certify bipartite: graph is not bipartite");
        sgc::BipartiteDecomposition d = sgc::decompose_bipartite(g, *p, h);
        out = json{{"mode", "bipartite"},
                   {"clique", h},
                   {"v", d.v},
                   {"A", d.A},
                   {"C", d.C},
                   {"S", d.S},
                   {"E_A", d.E_A},
                   {"E_C", d.E_C},
                   {"E_S", d.E_S},
                   {"overlaps", d.overlaps},
                   {"sigma", d.sigma},
                   {"delta_H", d.delta_H},
                   {"d_v", d.d_v},
                   {"checks", checks_to_json(d.checks)}};
        ok = sgc::all_ok(d.checks);
    } else if (cli.certify_mode == "reduction") {
        sgc::ReductionDecomposition d = sgc::decompose_reduction(g, h);
        out = json{{"mode", "reduction"},
                   {"clique", h},
                   {"x", d.x},
                   {"y", d.y},
                   {"A1", d.A1},
                   {"A2", d.A2},
                   {"A3", d.A3},
                   {"B", d.B},
                   {"C", d.C},
                   {"E_A", d.E_A},
                   {"H1", d.H1},
                   {"H2", d.H2},
                   {"sigma", d.sigma},
                   {"sigma1", d.sigma1},
                   {"sigma2", d.sigma2},
                   {"d_x", d.dx},
                   {"d_y", d.dy},
                   {"simple_bound", d.simple_bound},
                   {"average_bound", d.average_bound},
                   {"checks", checks_to_json(d.checks)}};
        ok = sgc::all_ok(d.checks);
    } else {
        throw sgc::input_error("certify: mode must be 'bipartite' or 'reduction'");
    }
    out["all_checks_ok"] = ok;
    std::cout << out.dump() << '\n';
    if (!ok) throw sgc::bound_violation("certificate check failed (potential counterexample)");
    return 0;
}

int run_stability(const Cli& cli) {
    sgc::Graph g = load_graph(cli.path);
    sgc::EdgeSet h = clique_or_solve(g, cli.edge_ids, cli.threads);
    std::cout << witness_to_json(sgc::stability_pipeline(g, h)).dump() << '\n';
    return 0;
}

int run_sweep(const Cli& cli) {
    sgc::SweepOptions opts;
    if ((cli.exhaustive_n > 0) == !cli.random_text.empty())
        throw sgc::input_error("sweep: pass exactly one of --exhaustive N / --random SPEC");
    if (cli.exhaustive_n > 0) {
        opts.exhaustive = true;
        opts.exhaustive_n = cli.exhaustive_n;
    } else {
        opts.random_spec = parse_random_spec(cli.random_text, cli.seed);
        opts.count = cli.count;
        if (opts.count <= 0) throw sgc::input_error("sweep: --random needs --count > 0");
    }
    if (!cli.checks_text.empty()) {
        opts.checks.clear();
        std::istringstream iss(cli.checks_text);
        std::string tok;
        while (std::getline(iss, tok, ',')) opts.checks.push_back(tok);
    }
    opts.a = cli.a;
    opts.threads = cli.threads;

    std::ofstream csv;
    if (!cli.out_path.empty()) {
        csv.open(cli.out_path);
        if (!csv) throw sgc::input_error("cannot open '" + cli.out_path + "' for writing");
        csv << sgc::sweep_csv_header() << '\n';
    }
    sgc::SweepSummary sum = sgc::run_sweep(opts, [&](const sgc::SweepRecord& rec) {
        if (csv.is_open()) csv << sgc::format_csv(rec) << '\n';
    });

    json out{{"instances", sum.instances},
             {"violations", sum.violations},
             {"min_slack_per_bound", sum.min_slack},
             {"tight_instances", json{{"counts", sum.tight_counts}, {"examples", sum.tight}}}};
    std::cout << out.dump() << '\n';
    if (sum.violations > 0) {
        for (const std::string& s : sum.violating_graphs) std::cerr << s;
        throw sgc::bound_violation(std::to_string(sum.violations) +
                                   " bound violation(s) found (potential counterexample)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong clique toolkit: exact omega(L(G)^2), Ore-degree bounds, "
                 "proof certificates, bipartite stability"};
    app.require_subcommand(1);
    Cli cli;

    auto* gen = app.add_subcommand("gen", "generate a graph and write it in 'p sgc' format");
    gen->add_option("family", cli.gen_family,
                    "cycle_blowup | complete_bipartite | path | cycle | gnp | random_bipartite")
        ->required();
    gen->add_option("params", cli.gen_params, "family parameters, e.g. 'cycle_blowup 5 3'");
    gen->add_option("--seed", cli.gen_seed, "PRNG seed for random families");
    gen->add_option("--out", cli.gen_out, "output path (default stdout)");

    auto* conflict = app.add_subcommand("conflict",
                                        "export L(G)^2 over edge ids in 'p sgc' format");
    conflict->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    conflict->add_option("--out", cli.out_path, "output path (default stdout)");

    auto* omega = app.add_subcommand("omega", "exact maximum strong clique");
    omega->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    omega->add_option("--threads", cli.threads, "solver threads");

    auto* bounds = app.add_subcommand("bounds", "bound catalog for a graph");
    bounds->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    bounds->add_option("--a", cli.a, "reduction parameter in [1/4, 1/3]");

    auto* verify = app.add_subcommand("verify", "check that edge ids form a strong clique");
    verify->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    verify->add_option("edges", cli.edge_ids, "edge ids");

    auto* certify = app.add_subcommand("certify", "decomposition certificate for a strong clique");
    certify->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    certify->add_option("--mode", cli.certify_mode, "bipartite | reduction")->required();
    certify->add_option("--edges", cli.edge_ids, "clique edge ids (default: solve for the maximum)");
    certify->add_option("--threads", cli.threads, "solver threads when solving");

    auto* stab = app.add_subcommand("stability", "K_{r,r} extraction pipeline");
    stab->add_option("path", cli.path, "graph file, '-' for stdin")->required();
    stab->add_option("--edges", cli.edge_ids, "clique edge ids (default: solve for the maximum)");
    stab->add_option("--threads", cli.threads, "solver threads when solving");

    auto* sweep = app.add_subcommand("sweep", "solve a family of instances and check bounds");
    sweep->add_option("--exhaustive", cli.exhaustive_n, "all labeled graphs on N vertices (N <= 7)");
    sweep->add_option("--random", cli.random_text, "generator spec family:p1:p2[:p3], e.g. gnp:8:0.4");
    sweep->add_option("--count", cli.count, "number of random instances");
    sweep->add_option("--seed", cli.seed, "base seed; instance i uses seed+i");
    sweep->add_option("--checks", cli.checks_text,
                      "comma list of bound names (default general_sigma2_3,general_43d2,conj_125d2)");
    sweep->add_option("--a", cli.a, "reduction parameter in [1/4, 1/3]");
    sweep->add_option("--threads", cli.threads, "instance worker threads");
    sweep->add_option("--out", cli.out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(cli);
        if (conflict->parsed()) return run_conflict(cli);
        if (omega->parsed()) return run_omega(cli);
        if (bounds->parsed()) return run_bounds(cli);
        if (verify->parsed()) return run_verify(cli);
        if (certify->parsed()) return run_certify(cli);
        if (stab->parsed()) return run_stability(cli);
        if (sweep->parsed()) return run_sweep(cli);
    } catch (const sgc::bound_violation& e) {
        std::cerr << "bound violation: " << e.what() << '\n';
        return 4;
    } catch (const sgc::precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 3;
    } catch (const sgc::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
