#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedist/clique.hpp"
#include "cliquedist/graph_io.hpp"
#include "cliquedist/metrics.hpp"

#include <json.hpp>

namespace cliquedist {

struct AnalyzeOptions {
    DegenerateClustering clustering_rule = DegenerateClustering::one;
    NPrimeFilter nprime_filter = NPrimeFilter::candidate_degree;
    bool parallel = true;
};

/// Full single-graph report: summary metrics, degree distribution, per-vertex
/// clique report, clique/degree and clique/clustering correlations, and the
/// assortativity of both metrics in both modes.
nlohmann::ordered_json analyze_graph(const LoadedGraph& lg, const AnalyzeOptions& options = {});

// ---------------------------------------------------------------------------
// Watts-Strogatz sweeps
// ---------------------------------------------------------------------------

struct SweepSpec {
    std::vector<std::size_t> n_values;
    std::vector<unsigned> k_values;
    std::vector<double> p_values; // p = 0 baselines are always added
    std::size_t trials = 100;
    std::uint64_t base_seed = 1;

    /// n in {100, 200}; k in {4, 6, ..., 20}; p in {0.01..0.1 step 0.01} then
    /// {0.2..1.0 step 0.1}; 100 trials.
    static SweepSpec reference();

    void validate() const;
};

struct SweepCell {
    std::size_t n = 0;
    unsigned k = 0;
    double p = 0.0;
    std::string zone;     // "small-world" (p <= 0.1) or "random"
    std::size_t trials = 0;      // trials requested
    std::size_t trials_done = 0; // trials that finished within budget
    bool complete = true;        // false when a clique time budget expired
    double mean_avg_diameter = 0.0;
    double mean_avg_clustering = 0.0;
    double mean_avg_clique = 0.0;
    double ratio_diameter_vs_p0 = 1.0;
    double ratio_clustering_vs_p0 = 1.0;
    double ratio_clique_vs_p0 = 1.0;
    std::map<int, std::size_t> clique_histogram; // pooled over trials
    std::uint64_t first_seed = 0;                // trial seeds are base_seed + trial index
    std::uint64_t last_seed = 0;
    std::size_t resample_failures = 0;
};

struct TrialRecord {
    std::size_t n = 0;
    unsigned k = 0;
    double p = 0.0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double avg_diameter = 0.0;
    double avg_clustering = 0.0;
    double avg_clique = 0.0;
    std::map<int, std::size_t> clique_histogram;
};

struct SweepResult {
    std::vector<SweepCell> cells;        // baselines first per (n,k), then by p
    std::vector<TrialRecord> trials;     // filled when keep_trials is set
};

struct SweepOptions {
    DegenerateClustering clustering_rule = DegenerateClustering::one;
    bool parallel = true;     // trials run concurrently; results are order-merged
    bool keep_trials = false; // record per-trial rows
    /// Per-trial wall-clock budget for the clique engine; trials that exceed
    /// it are dropped and the cell is marked incomplete.
    std::optional<double> clique_budget_seconds;
};

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

std::string sweep_to_csv(const SweepResult& result);
std::string sweep_histograms_to_csv(const SweepResult& result);
std::string sweep_trials_to_csv(const SweepResult& result);
std::string sweep_trial_histograms_to_csv(const SweepResult& result);

/// Writes sweep.csv + clique_histograms.csv (+ per_trial.csv and
/// per_trial_histograms.csv) under out_dir.
void write_sweep_files(const SweepResult& result, const std::filesystem::path& out_dir,
                       bool per_trial);

// ---------------------------------------------------------------------------
// Real-world dataset tables
// ---------------------------------------------------------------------------

struct TableRow {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    double spectral_ratio = 0.0;
    double corr_clique_vs_clustering = 0.0;
    double corr_clique_vs_degree = 0.0;
    double assort_clique_sym = 0.0;
    double assort_clique_lit = 0.0;
    double assort_degree_sym = 0.0;
    double assort_degree_lit = 0.0;
    double avg_maximal_clique = 0.0;
};

struct TableReport {
    std::vector<TableRow> rows;
    // Dataset names sorted ascending by the chosen assortativity columns.
    std::vector<std::string> order_by_assort_clique;
    std::vector<std::string> order_by_assort_degree;
    AssortativityMode ordering_mode = AssortativityMode::symmetric;
};

TableReport run_tables(const std::filesystem::path& data_dir,
                       const AnalyzeOptions& options = {},
                       AssortativityMode ordering_mode = AssortativityMode::symmetric);

std::string tables_to_csv(const TableReport& report);

/// Numbers in CSV output: 6 significant digits, '.' decimal separator.
std::string csv_number(double value);

} // namespace cliquedist
