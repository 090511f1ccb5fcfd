#include "cliquedist/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cliquedist/ws.hpp"

namespace cliquedist {

std::string csv_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json json_optional(const std::optional<double>& v) {
    if (v) return *v;
    return "undefined";
}

} // namespace

nlohmann::ordered_json analyze_graph(const LoadedGraph& lg, const AnalyzeOptions& options) {
    const Graph& g = lg.graph;
    if (g.empty()) throw std::invalid_argument("empty graph");

    nlohmann::ordered_json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();

    const GraphSummary summary = graph_summary(g, options.clustering_rule);
    out["summary"] = {
        {"avg_degree", summary.avg_degree},
        {"spectral_radius", summary.spectral_radius},
        {"spectral_ratio", summary.spectral_ratio},
        {"avg_clustering", summary.avg_clustering},
        {"avg_diameter_per_node", summary.avg_diameter_per_node},
        {"connected", summary.connected},
        {"unreachable_pairs", summary.unreachable_pairs},
    };

    const DistributionTable dd = degree_distribution(g);
    out["degree_distribution"] = {
        {"support", dd.support}, {"pmf", dd.pmf}, {"cdf", dd.cdf}};

    CliqueOptions copts;
    copts.filter = options.nprime_filter;
    copts.parallel = options.parallel;
    const CliqueReport cliques = maximal_clique_sizes(g, copts);
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [size, count] : cliques.histogram) hist[std::to_string(size)] = count;
    out["maximal_clique"] = {
        {"per_vertex", cliques.per_vertex},
        {"max_size", cliques.max_size},
        {"average", cliques.average},
        {"histogram", hist},
    };

    std::vector<double> deg(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = static_cast<double>(g.degree(v));
    std::vector<double> mcs(cliques.per_vertex.begin(), cliques.per_vertex.end());
    const auto clustering = clustering_coefficients(g, options.clustering_rule, options.parallel);

    const MetricVector mv_deg = MetricVector::of("degree", std::move(deg));
    const MetricVector mv_mcs = MetricVector::of("maximal_clique_size", std::move(mcs));
    const MetricVector mv_cc = MetricVector::of("clustering_coefficient", clustering);

    out["correlations"] = {
        {"clique_vs_degree", json_optional(pearson_correlation(mv_mcs, mv_deg))},
        {"clique_vs_clustering", json_optional(pearson_correlation(mv_mcs, mv_cc))},
    };
    out["assortativity"] = {
        {"degree",
         {{"symmetric", json_optional(assortativity_index(g, mv_deg, AssortativityMode::symmetric))},
          {"literal", json_optional(assortativity_index(g, mv_deg, AssortativityMode::literal))}}},
        {"maximal_clique_size",
         {{"symmetric", json_optional(assortativity_index(g, mv_mcs, AssortativityMode::symmetric))},
          {"literal", json_optional(assortativity_index(g, mv_mcs, AssortativityMode::literal))}}},
    };

    out["options"] = {
        {"clustering_degenerate",
         options.clustering_rule == DegenerateClustering::one ? "one" : "zero"},
        {"nprime_filter",
         options.nprime_filter == NPrimeFilter::candidate_degree ? "w" : "u"},
    };
    if (!lg.labels.empty()) out["labels"] = lg.labels;
    return out;
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

SweepSpec SweepSpec::reference() {
    SweepSpec spec;
    spec.n_values = {100, 200};
    for (unsigned k = 4; k <= 20; k += 2) spec.k_values.push_back(k);
    for (int i = 1; i <= 10; ++i) spec.p_values.push_back(i / 100.0);
    for (int i = 2; i <= 10; ++i) spec.p_values.push_back(i / 10.0);
    spec.trials = 100;
    spec.base_seed = 1;
    return spec;
}

void SweepSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (n_values.empty() || k_values.empty()) {
        throw std::invalid_argument("sweep: need at least one n and one k");
    }
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sweep: p must be in [0,1]");
    }
    for (unsigned k : k_values) {
        if (k % 2 != 0) throw std::invalid_argument("sweep: k values must be even");
        for (std::size_t n : n_values) {
            WSParams{n, k, 0.0, 0}.validate();
        }
    }
}

namespace {

struct TrialStats {
    double avg_diameter = 0.0;
    double avg_clustering = 0.0;
    double avg_clique = 0.0;
    std::map<int, std::size_t> histogram;
    std::size_t resample_failures = 0;
    bool done = false; // stays false when the clique budget expired
};

TrialStats evaluate_graph(const Graph& g, DegenerateClustering rule,
                          const std::optional<double>& clique_budget) {
    TrialStats stats;
    const double n = static_cast<double>(g.vertex_count());

    const auto eccs = node_diameters(g, /*parallel=*/false);
    double esum = 0.0;
    for (const auto& e : eccs) esum += e.eccentricity;
    stats.avg_diameter = esum / n;

    const auto clustering = clustering_coefficients(g, rule, /*parallel=*/false);
    double csum = 0.0;
    for (double c : clustering) csum += c;
    stats.avg_clustering = csum / n;

    CliqueOptions copts;
    copts.parallel = false;
    copts.time_budget_seconds = clique_budget;
    try {
        const CliqueReport report = maximal_clique_sizes(g, copts);
        stats.avg_clique = report.average;
        stats.histogram = report.histogram;
        stats.done = true;
    } catch (const CliqueBudgetError&) {
        stats.done = false;
    }
    return stats;
}

std::string zone_label(double p) { return p <= 0.1 ? "small-world" : "random"; }

} // namespace

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    spec.validate();

    std::vector<double> ps = spec.p_values;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    const bool had_zero = !ps.empty() && ps.front() == 0.0;
    if (!had_zero) ps.insert(ps.begin(), 0.0); // baseline for the ratio denominators

    SweepResult result;
    for (std::size_t n : spec.n_values) {
        for (unsigned k : spec.k_values) {
            // The p = 0 cell is the unrewired lattice: every trial is the same
            // graph, so it is evaluated once.
            const Graph lattice = ring_lattice(n, k);
            const TrialStats base =
                evaluate_graph(lattice, options.clustering_rule, options.clique_budget_seconds);
            if (!base.done) {
                throw std::runtime_error("sweep: clique budget too small for the p=0 baseline (n=" +
                                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
            }

            for (double p : ps) {
                SweepCell cell;
                cell.n = n;
                cell.k = k;
                cell.p = p;
                cell.zone = zone_label(p);
                cell.trials = spec.trials;
                cell.first_seed = spec.base_seed;
                cell.last_seed = spec.base_seed + spec.trials - 1;

                std::vector<TrialStats> stats(spec.trials);
                if (p == 0.0) {
                    for (auto& s : stats) s = base;
                } else {
#pragma omp parallel for schedule(dynamic) if (options.parallel)
                    for (std::int64_t t = 0; t < static_cast<std::int64_t>(spec.trials); ++t) {
                        WSParams params{n, k, p, spec.base_seed + static_cast<std::uint64_t>(t)};
                        RewireResult rewired = rewire(lattice, params);
                        stats[t] = evaluate_graph(rewired.graph, options.clustering_rule,
                                                  options.clique_budget_seconds);
                        stats[t].resample_failures = rewired.resample_failures;
                    }
                }

                double dsum = 0.0, csum = 0.0, qsum = 0.0;
                for (std::size_t t = 0; t < spec.trials; ++t) {
                    if (!stats[t].done) continue;
                    ++cell.trials_done;
                    dsum += stats[t].avg_diameter;
                    csum += stats[t].avg_clustering;
                    qsum += stats[t].avg_clique;
                    for (const auto& [size, count] : stats[t].histogram) {
                        cell.clique_histogram[size] += count;
                    }
                    cell.resample_failures += stats[t].resample_failures;
                    if (options.keep_trials) {
                        result.trials.push_back({n, k, p, t, spec.base_seed + t,
                                                 stats[t].avg_diameter, stats[t].avg_clustering,
                                                 stats[t].avg_clique, stats[t].histogram});
                    }
                }
                cell.complete = cell.trials_done == spec.trials;
                const double done = static_cast<double>(std::max<std::size_t>(cell.trials_done, 1));
                cell.mean_avg_diameter = dsum / done;
                cell.mean_avg_clustering = csum / done;
                cell.mean_avg_clique = qsum / done;
                cell.ratio_diameter_vs_p0 = cell.mean_avg_diameter / base.avg_diameter;
                cell.ratio_clustering_vs_p0 = cell.mean_avg_clustering / base.avg_clustering;
                cell.ratio_clique_vs_p0 = cell.mean_avg_clique / base.avg_clique;
                result.cells.push_back(std::move(cell));
            }
        }
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out =
        "n,k,p,zone,trials,trials_done,complete,first_seed,last_seed,rng,"
        "mean_avg_diameter,mean_avg_clustering,mean_avg_maximal_clique,"
        "ratio_diameter_vs_p0,ratio_clustering_vs_p0,ratio_clique_vs_p0,resample_failures\n";
    for (const auto& c : result.cells) {
        out += std::to_string(c.n) + ',' + std::to_string(c.k) + ',' + csv_number(c.p) + ',' +
               c.zone + ',' + std::to_string(c.trials) + ',' + std::to_string(c.trials_done) +
               ',' + (c.complete ? "1" : "0") + ',' + std::to_string(c.first_seed) + ',' +
               std::to_string(c.last_seed) + ',' + kRngName + ',' +
               csv_number(c.mean_avg_diameter) + ',' + csv_number(c.mean_avg_clustering) + ',' +
               csv_number(c.mean_avg_clique) + ',' + csv_number(c.ratio_diameter_vs_p0) + ',' +
               csv_number(c.ratio_clustering_vs_p0) + ',' + csv_number(c.ratio_clique_vs_p0) +
               ',' + std::to_string(c.resample_failures) + '\n';
    }
    return out;
}

std::string sweep_histograms_to_csv(const SweepResult& result) {
    std::string out = "n,k,p,clique_size,vertex_count\n";
    for (const auto& c : result.cells) {
        for (const auto& [size, count] : c.clique_histogram) {
            out += std::to_string(c.n) + ',' + std::to_string(c.k) + ',' + csv_number(c.p) + ',' +
                   std::to_string(size) + ',' + std::to_string(count) + '\n';
        }
    }
    return out;
}

std::string sweep_trials_to_csv(const SweepResult& result) {
    std::string out = "n,k,p,trial,seed,avg_diameter,avg_clustering,avg_maximal_clique\n";
    for (const auto& t : result.trials) {
        out += std::to_string(t.n) + ',' + std::to_string(t.k) + ',' + csv_number(t.p) + ',' +
               std::to_string(t.trial) + ',' + std::to_string(t.seed) + ',' +
               csv_number(t.avg_diameter) + ',' + csv_number(t.avg_clustering) + ',' +
               csv_number(t.avg_clique) + '\n';
    }
    return out;
}

std::string sweep_trial_histograms_to_csv(const SweepResult& result) {
    std::string out = "n,k,p,trial,seed,clique_size,vertex_count\n";
    for (const auto& t : result.trials) {
        for (const auto& [size, count] : t.clique_histogram) {
            out += std::to_string(t.n) + ',' + std::to_string(t.k) + ',' + csv_number(t.p) + ',' +
                   std::to_string(t.trial) + ',' + std::to_string(t.seed) + ',' +
                   std::to_string(size) + ',' + std::to_string(count) + '\n';
        }
    }
    return out;
}

void write_sweep_files(const SweepResult& result, const std::filesystem::path& out_dir,
                       bool per_trial) {
    std::filesystem::create_directories(out_dir);
    auto write = [&](const std::filesystem::path& name, const std::string& content) {
        std::ofstream f(out_dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (out_dir / name).string());
        f << content;
    };
    write("sweep.csv", sweep_to_csv(result));
    write("clique_histograms.csv", sweep_histograms_to_csv(result));
    if (per_trial) {
        write("per_trial.csv", sweep_trials_to_csv(result));
        write("per_trial_histograms.csv", sweep_trial_histograms_to_csv(result));
    }
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

TableReport run_tables(const std::filesystem::path& data_dir, const AnalyzeOptions& options,
                       AssortativityMode ordering_mode) {
    TableReport report;
    report.ordering_mode = ordering_mode;
    for (const DatasetDescriptor& desc : bundled_datasets()) {
        const LoadedGraph lg = load_dataset(data_dir, desc);
        const Graph& g = lg.graph;

        TableRow row;
        row.name = desc.name;
        row.n = g.vertex_count();
        row.m = g.edge_count();

        const GraphSummary summary = graph_summary(g, options.clustering_rule);
        row.spectral_ratio = summary.spectral_ratio;

        CliqueOptions copts;
        copts.filter = options.nprime_filter;
        copts.parallel = options.parallel;
        const CliqueReport cliques = maximal_clique_sizes(g, copts);
        row.avg_maximal_clique = cliques.average;

        std::vector<double> deg(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = static_cast<double>(g.degree(v));
        const MetricVector mv_deg = MetricVector::of("degree", std::move(deg));
        const MetricVector mv_mcs = MetricVector::of(
            "maximal_clique_size",
            std::vector<double>(cliques.per_vertex.begin(), cliques.per_vertex.end()));
        const MetricVector mv_cc = MetricVector::of(
            "clustering_coefficient",
            clustering_coefficients(g, options.clustering_rule, options.parallel));

        row.corr_clique_vs_degree = pearson_correlation(mv_mcs, mv_deg).value();
        row.corr_clique_vs_clustering = pearson_correlation(mv_mcs, mv_cc).value();
        row.assort_clique_sym = assortativity_index(g, mv_mcs, AssortativityMode::symmetric).value();
        row.assort_clique_lit = assortativity_index(g, mv_mcs, AssortativityMode::literal).value();
        row.assort_degree_sym = assortativity_index(g, mv_deg, AssortativityMode::symmetric).value();
        row.assort_degree_lit = assortativity_index(g, mv_deg, AssortativityMode::literal).value();
        report.rows.push_back(std::move(row));
    }

    auto order_by = [&](auto key) {
        std::vector<const TableRow*> ptrs;
        for (const auto& r : report.rows) ptrs.push_back(&r);
        std::stable_sort(ptrs.begin(), ptrs.end(),
                         [&](const TableRow* a, const TableRow* b) { return key(*a) < key(*b); });
        std::vector<std::string> names;
        for (const TableRow* r : ptrs) names.push_back(r->name);
        return names;
    };
    const bool sym = ordering_mode == AssortativityMode::symmetric;
    report.order_by_assort_clique =
        order_by([&](const TableRow& r) { return sym ? r.assort_clique_sym : r.assort_clique_lit; });
    report.order_by_assort_degree =
        order_by([&](const TableRow& r) { return sym ? r.assort_degree_sym : r.assort_degree_lit; });
    return report;
}

std::string tables_to_csv(const TableReport& report) {
    std::string out =
        "name,n,m,spectral_ratio,corr_clique_vs_clustering,corr_clique_vs_degree,"
        "assort_clique_symmetric,assort_clique_literal,assort_degree_symmetric,"
        "assort_degree_literal,avg_maximal_clique\n";
    for (const auto& r : report.rows) {
        out += r.name + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               csv_number(r.spectral_ratio) + ',' + csv_number(r.corr_clique_vs_clustering) + ',' +
               csv_number(r.corr_clique_vs_degree) + ',' + csv_number(r.assort_clique_sym) + ',' +
               csv_number(r.assort_clique_lit) + ',' + csv_number(r.assort_degree_sym) + ',' +
               csv_number(r.assort_degree_lit) + ',' + csv_number(r.avg_maximal_clique) + '\n';
    }
    auto join = [](const std::vector<std::string>& names) {
        std::string s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) s += " < ";
            s += names[i];
        }
        return s;
    };
    const char* mode = report.ordering_mode == AssortativityMode::symmetric ? "symmetric" : "literal";
    out += "# ordering by assortativity(maximal clique size), " + std::string(mode) + ": " +
           join(report.order_by_assort_clique) + '\n';
    out += "# ordering by assortativity(degree), " + std::string(mode) + ": " +
           join(report.order_by_assort_degree) + '\n';
    return out;
}

} // namespace cliquedist
