// cliquedist - maximal clique size distributions, Watts-Strogatz sweeps and
// network metric reports over edge-list / GML / Pajek graphs.
//
// Subcommands: generate ws | analyze | sweep | tables.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cliquedist/experiment.hpp"
#include "cliquedist/graph_io.hpp"
#include "cliquedist/ws.hpp"

namespace {

using namespace cliquedist;

void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

DegenerateClustering clustering_rule_from(const std::string& s) {
    if (s == "one") return DegenerateClustering::one;
    if (s == "zero") return DegenerateClustering::zero;
    throw CLI::ValidationError("--clustering-degenerate must be one|zero");
}

NPrimeFilter filter_from(const std::string& s) {
    if (s == "w") return NPrimeFilter::candidate_degree;
    if (s == "u") return NPrimeFilter::selected_degree;
    throw CLI::ValidationError("--nprime-filter must be w|u");
}

AssortativityMode mode_from(const std::string& s) {
    if (s == "symmetric") return AssortativityMode::symmetric;
    if (s == "literal") return AssortativityMode::literal;
    throw CLI::ValidationError("--eq2-mode must be symmetric|literal");
}

int run_generate(const WSParams& params, const std::string& out) {
    const RewireResult result = generate_ws(params);
    write_text(out, write_edge_list(result.graph));
    if (out != "-") {
        nlohmann::ordered_json sidecar = {
            {"n", params.n},
            {"k_regular", params.k_regular},
            {"p_rewire", params.p_rewire},
            {"seed", params.seed},
            {"rng", kRngName},
            {"edges", result.graph.edge_count()},
            {"rewired_edges", result.rewired},
            {"resample_failures", result.resample_failures},
        };
        write_text(out + ".json", sidecar.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal clique size distributions and small-world network experiments"};
    app.require_subcommand(1);

    // generate ws
    auto* generate = app.add_subcommand("generate", "generate a network");
    generate->require_subcommand(1);
    auto* gen_ws = generate->add_subcommand("ws", "Watts-Strogatz ring lattice with rewiring");
    WSParams ws_params;
    std::string gen_out = "-";
    gen_ws->add_option("--n", ws_params.n, "node count")->required();
    gen_ws->add_option("--k", ws_params.k_regular, "links per node (even)")->required();
    gen_ws->add_option("--p", ws_params.p_rewire, "rewiring probability")->required();
    gen_ws->add_option("--seed", ws_params.seed, "RNG seed")->default_val(0);
    gen_ws->add_option("--out", gen_out, "output edge-list path ('-' for stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full metric report for one graph (JSON)");
    std::string an_input, an_format = "edgelist", an_out = "-";
    std::string an_rule = "one", an_filter = "w";
    analyze->add_option("input", an_input, "graph file")->required();
    analyze->add_option("--format", an_format, "edgelist|gml|pajek");
    analyze->add_option("--out", an_out, "output path ('-' for stdout)");
    analyze->add_option("--clustering-degenerate", an_rule, "clustering value for degree<2: one|zero");
    analyze->add_option("--nprime-filter", an_filter, "candidate degree filter variant: w|u");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Watts-Strogatz parameter sweep (CSV)");
    std::vector<std::size_t> sw_n;
    std::vector<unsigned> sw_k;
    std::vector<double> sw_p;
    std::size_t sw_trials = 100;
    std::uint64_t sw_seed = 1;
    std::string sw_out_dir;
    std::string sw_rule = "one";
    bool sw_per_trial = false;
    sweep->add_option("--n", sw_n, "node counts (default 100 200)");
    sweep->add_option("--k", sw_k, "links per node (default 4..20 step 2)");
    sweep->add_option("--p", sw_p, "rewiring probabilities (default 0.01..0.1, 0.2..1.0)");
    sweep->add_option("--trials", sw_trials, "trials per cell")->default_val(100);
    sweep->add_option("--seed", sw_seed, "base seed; trial t uses seed+t")->default_val(1);
    sweep->add_option("--out-dir", sw_out_dir, "output directory")->required();
    sweep->add_option("--clustering-degenerate", sw_rule, "one|zero");
    sweep->add_flag("--per-trial", sw_per_trial, "also write per-trial rows");

    // tables
    auto* tables = app.add_subcommand("tables", "bundled dataset metric table (CSV)");
    std::string tb_data = "data", tb_out = "-", tb_mode = "symmetric";
    std::string tb_rule = "one", tb_filter = "w";
    tables->add_option("--data", tb_data, "dataset directory")->default_val("data");
    tables->add_option("--out", tb_out, "output path ('-' for stdout)");
    tables->add_option("--eq2-mode", tb_mode, "assortativity ordering mode: symmetric|literal");
    tables->add_option("--clustering-degenerate", tb_rule, "one|zero");
    tables->add_option("--nprime-filter", tb_filter, "w|u");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (gen_ws->parsed()) {
            return run_generate(ws_params, gen_out);
        }
        if (analyze->parsed()) {
            const LoadedGraph lg = load_graph_file(an_input, format_from_name(an_format));
            AnalyzeOptions options;
            options.clustering_rule = clustering_rule_from(an_rule);
            options.nprime_filter = filter_from(an_filter);
            write_text(an_out, analyze_graph(lg, options).dump(2) + "\n");
            return 0;
        }
        if (sweep->parsed()) {
            SweepSpec spec = SweepSpec::reference();
            if (!sw_n.empty()) spec.n_values = sw_n;
            if (!sw_k.empty()) spec.k_values = sw_k;
            if (!sw_p.empty()) spec.p_values = sw_p;
            spec.trials = sw_trials;
            spec.base_seed = sw_seed;
            SweepOptions options;
            options.clustering_rule = clustering_rule_from(sw_rule);
            options.keep_trials = sw_per_trial;
            write_sweep_files(run_sweep(spec, options), sw_out_dir, sw_per_trial);
            return 0;
        }
        if (tables->parsed()) {
            AnalyzeOptions options;
            options.clustering_rule = clustering_rule_from(tb_rule);
            options.nprime_filter = filter_from(tb_filter);
            write_text(tb_out, tables_to_csv(run_tables(tb_data, options, mode_from(tb_mode))));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
