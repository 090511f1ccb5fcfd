// Acceptance suite: one self-contained check per shipped claim, each printing
// a PASS/FAIL line with the measured values. Run all with no arguments or one
// with --criterion N (as registered in ctest).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliquedist/clique.hpp"
#include "cliquedist/experiment.hpp"
#include "cliquedist/graph_io.hpp"
#include "cliquedist/metrics.hpp"
#include "cliquedist/ws.hpp"
#include "test_util.hpp"

using namespace cliquedist;
namespace fs = std::filesystem;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct Timer {
    double t0 = now_seconds();
    double elapsed() const { return now_seconds() - t0; }
};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& line) {
        ok &= cond;
        detail << "    " << (cond ? "ok  " : "FAIL") << ' ' << line << '\n';
    }
};

// ---------------------------------------------------------------------------
// shared dataset pipeline (criteria 3-7)
// ---------------------------------------------------------------------------

struct DatasetPipeline {
    TableReport report;
    double elapsed_seconds = 0.0;

    const TableRow& row(const std::string& name) const {
        for (const auto& r : report.rows) {
            if (r.name == name) return r;
        }
        throw std::runtime_error("no dataset row " + name);
    }
};

const DatasetPipeline& dataset_pipeline() {
    static const DatasetPipeline pipeline = [] {
        DatasetPipeline p;
        Timer timer;
        p.report = run_tables(CLIQUEDIST_DATA_DIR);
        p.elapsed_seconds = timer.elapsed();
        return p;
    }();
    return pipeline;
}

const std::vector<std::string> kDatasetNames = {"USAir97", "Karate",   "Dolphins",
                                                "AdjNoun", "PolBooks", "Football"};

bool check_dataset_values(Check& c, const std::map<std::string, double>& expected, double tol,
                          const std::function<double(const TableRow&)>& metric) {
    for (const auto& name : kDatasetNames) {
        const double want = expected.at(name);
        const double got = metric(dataset_pipeline().row(name));
        std::ostringstream line;
        line << name << ": got " << got << ", expected " << want << " +- " << tol;
        c.expect(std::abs(got - want) <= tol, line.str());
    }
    return c.ok;
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

bool criterion_1(Check& c) {
    Timer timer;
    const double ps[3] = {0.2, 0.5, 0.8};
    int agreements = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 4 + static_cast<std::size_t>(i) % 15; // 4..18
        const double p = ps[i % 3];
        const Graph g = testutil::random_graph(n, p, 9000 + static_cast<std::uint64_t>(i));
        const CliqueReport expected = oracle_maximal_clique_sizes(g);
        const CliqueReport got = maximal_clique_sizes(g);
        const bool same = got.per_vertex == expected.per_vertex &&
                          max_clique_size(g) == expected.max_size;
        if (same) ++agreements;
        else c.expect(false, "instance " + std::to_string(i) + " disagrees with the oracle");
    }
    c.expect(agreements == 200,
             "oracle equivalence on " + std::to_string(agreements) + "/200 random graphs");
    const double secs = timer.elapsed();
    c.expect(secs < 60.0, "runtime " + csv_number(secs) + " s < 60 s");
    return c.ok;
}

bool criterion_2(Check& c) {
    for (std::size_t n : {100, 200}) {
        for (unsigned k = 4; k <= 20; k += 2) {
            SweepSpec spec;
            spec.n_values = {n};
            spec.k_values = {k};
            spec.p_values = {0.0};
            spec.trials = 1;
            const SweepResult result = run_sweep(spec);
            const SweepCell& cell = result.cells.at(0);
            const double clique_want = 1.0 + k / 2.0;
            const double cc_want = 3.0 * (k - 2.0) / (4.0 * (k - 1.0));
            std::ostringstream line;
            line << "n=" << n << " k=" << k << ": clique " << cell.mean_avg_clique << " (want "
                 << clique_want << " exactly), clustering " << cell.mean_avg_clustering
                 << " (want " << cc_want << ")";
            c.expect(cell.mean_avg_clique == clique_want &&
                         std::abs(cell.mean_avg_clustering - cc_want) <= 1e-9,
                     line.str());
        }
    }
    return c.ok;
}

bool criterion_3(Check& c) {
    const std::map<std::string, double> expected = {
        {"USAir97", 0.87}, {"Karate", 0.64},   {"Dolphins", 0.78},
        {"AdjNoun", 0.71}, {"PolBooks", 0.70}, {"Football", 0.32},
    };
    check_dataset_values(c, expected, 0.01,
                         [](const TableRow& r) { return r.corr_clique_vs_degree; });
    const double secs = dataset_pipeline().elapsed_seconds;
    c.expect(secs < 120.0, "six-dataset pipeline " + csv_number(secs) + " s < 120 s");
    return c.ok;
}

bool criterion_4(Check& c) {
    const std::map<std::string, double> expected = {
        {"USAir97", -0.47}, {"Karate", -0.22},  {"Dolphins", -0.17},
        {"AdjNoun", -0.09}, {"PolBooks", 0.07}, {"Football", 0.69},
    };
    return check_dataset_values(c, expected, 0.02,
                                [](const TableRow& r) { return r.corr_clique_vs_clustering; });
}

bool criterion_5(Check& c) {
    const std::map<std::string, double> expected = {
        {"AdjNoun", 3.56}, {"PolBooks", 4.57}, {"Football", 6.38}, {"USAir97", 5.56}};
    for (const auto& [name, want] : expected) {
        const double got = dataset_pipeline().row(name).avg_maximal_clique;
        std::ostringstream line;
        line << name << ": got " << got << ", expected " << want << " +- 0.02";
        c.expect(std::abs(got - want) <= 0.02, line.str());
    }
    return c.ok;
}

bool criterion_6(Check& c) {
    const std::map<std::string, double> expected = {
        {"Football", 1.01}, {"Dolphins", 1.40}, {"PolBooks", 1.41},
        {"Karate", 1.46},   {"AdjNoun", 1.73},  {"USAir97", 3.22},
    };
    return check_dataset_values(c, expected, 0.01,
                                [](const TableRow& r) { return r.spectral_ratio; });
}

bool criterion_7(Check& c) {
    const std::map<std::string, double> expected_clique = {
        {"Karate", 0.13},   {"USAir97", 0.17},  {"AdjNoun", 0.20},
        {"PolBooks", 0.20}, {"Dolphins", 0.23}, {"Football", 0.59},
    };
    const std::map<std::string, double> expected_degree = {
        {"Karate", -0.48},   {"USAir97", -0.21},  {"AdjNoun", -0.09},
        {"PolBooks", -0.04}, {"Dolphins", -0.02}, {"Football", 0.19},
    };
    check_dataset_values(c, expected_clique, 0.05,
                         [](const TableRow& r) { return r.assort_clique_sym; });
    check_dataset_values(c, expected_degree, 0.05,
                         [](const TableRow& r) { return r.assort_degree_sym; });

    const auto& by_clique = dataset_pipeline().report.order_by_assort_clique;
    const auto& by_degree = dataset_pipeline().report.order_by_assort_degree;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " < ") + x;
        return s;
    };
    c.expect(by_clique == by_degree, "identical dataset ordering by both assortativity columns: [" +
                                         join(by_clique) + "] vs [" + join(by_degree) + "]");
    return c.ok;
}

struct SmallWorldSweeps {
    SweepResult zone;   // k in {4,12,20}, p = 0.01..0.1
    SweepResult random; // k = 20, p = 0.1..1.0
};

const SmallWorldSweeps& small_world_sweeps() {
    static const SmallWorldSweeps sweeps = [] {
        SmallWorldSweeps s;
        SweepSpec zone;
        zone.n_values = {100};
        zone.k_values = {4, 12, 20};
        for (int i = 1; i <= 10; ++i) zone.p_values.push_back(i / 100.0);
        zone.trials = 100;
        zone.base_seed = 1;
        s.zone = run_sweep(zone);

        SweepSpec random;
        random.n_values = {100};
        random.k_values = {20};
        for (int i = 1; i <= 10; ++i) random.p_values.push_back(i / 10.0);
        random.trials = 100;
        random.base_seed = 1;
        s.random = run_sweep(random);
        return s;
    }();
    return sweeps;
}

bool criterion_8(Check& c) {
    Timer timer;
    const SmallWorldSweeps& sweeps = small_world_sweeps();
    for (const auto& cell : sweeps.zone.cells) {
        if (cell.p == 0.0) continue;
        std::ostringstream line;
        line << "k=" << cell.k << " p=" << cell.p << ": ratio_clique_vs_p0 "
             << cell.ratio_clique_vs_p0 << " >= 0.90";
        c.expect(cell.ratio_clique_vs_p0 >= 0.90, line.str());
    }
    double prev = -1.0;
    bool first = true;
    for (const auto& cell : sweeps.random.cells) {
        if (cell.p == 0.0) continue;
        if (!first) {
            std::ostringstream line;
            line << "k=20 p=" << cell.p << ": mean " << cell.mean_avg_clique << " <= previous "
                 << prev << " + 0.1";
            c.expect(cell.mean_avg_clique <= prev + 0.1, line.str());
        }
        prev = cell.mean_avg_clique;
        first = false;
    }
    const double secs = timer.elapsed();
    c.expect(secs < 600.0, "runtime " + csv_number(secs) + " s < 600 s");
    return c.ok;
}

// Folds bins holding less than 1% of the mass into their neighbor, then
// requires a single peak (plateaus allowed).
bool unimodal_after_merge(const std::map<int, std::size_t>& histogram) {
    std::size_t total = 0;
    for (const auto& [size, count] : histogram) total += count;
    if (total == 0) return true;
    const double threshold = 0.01 * static_cast<double>(total);

    std::vector<double> bins;
    double carry = 0.0;
    for (const auto& [size, count] : histogram) {
        const double mass = static_cast<double>(count) + carry;
        carry = 0.0;
        if (mass < threshold) carry = mass;
        else bins.push_back(mass);
    }
    if (carry > 0.0) {
        if (bins.empty()) bins.push_back(carry);
        else bins.back() += carry;
    }

    std::size_t peak = 0;
    for (std::size_t i = 1; i < bins.size(); ++i) {
        if (bins[i] > bins[peak]) peak = i;
    }
    for (std::size_t i = 0; i + 1 < peak; ++i) {
        if (bins[i] > bins[i + 1]) return false;
    }
    for (std::size_t i = peak; i + 1 < bins.size(); ++i) {
        if (bins[i + 1] > bins[i]) return false;
    }
    return true;
}

bool criterion_9(Check& c) {
    const SmallWorldSweeps& sweeps = small_world_sweeps();
    auto check_cells = [&](const SweepResult& result) {
        for (const auto& cell : result.cells) {
            if (cell.p == 0.0) continue;
            std::ostringstream line;
            line << "k=" << cell.k << " p=" << cell.p << ": pooled histogram unimodal ("
                 << cell.clique_histogram.size() << " raw bins)";
            c.expect(unimodal_after_merge(cell.clique_histogram), line.str());
        }
    };
    check_cells(sweeps.zone);
    check_cells(sweeps.random);
    return c.ok;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool criterion_10(Check& c) {
#ifndef CLIQUEDIST_CLI_PATH
    c.expect(false, "CLI path not configured");
    return c.ok;
#else
    const std::string cli = CLIQUEDIST_CLI_PATH;
    const fs::path tmp = fs::path("acceptance_tmp");
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    auto run = [&](const std::string& args) {
        const std::string cmd = '"' + cli + "\" " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };

    bool ran = true;
    ran &= run("generate ws --n 40 --k 6 --p 0.3 --seed 5 --out " + (tmp / "g1.txt").string());
    ran &= run("generate ws --n 40 --k 6 --p 0.3 --seed 5 --out " + (tmp / "g2.txt").string());
    ran &= run("analyze " + std::string(CLIQUEDIST_DATA_DIR) + "/karate.gml --format gml --out " +
               (tmp / "a1.json").string());
    ran &= run("analyze " + std::string(CLIQUEDIST_DATA_DIR) + "/karate.gml --format gml --out " +
               (tmp / "a2.json").string());
    ran &= run("sweep --n 20 --k 4 --p 0.2 --trials 3 --seed 2 --out-dir " + (tmp / "s1").string());
    ran &= run("sweep --n 20 --k 4 --p 0.2 --trials 3 --seed 2 --out-dir " + (tmp / "s2").string());
    ran &= run("tables --data " + std::string(CLIQUEDIST_DATA_DIR) + " --out " +
               (tmp / "t1.csv").string());
    ran &= run("tables --data " + std::string(CLIQUEDIST_DATA_DIR) + " --out " +
               (tmp / "t2.csv").string());
    c.expect(ran, "all CLI invocations succeeded");
    if (!ran) return c.ok;

    c.expect(slurp(tmp / "g1.txt") == slurp(tmp / "g2.txt"), "generate: edge lists byte-identical");
    c.expect(slurp(tmp / "g1.txt.json") == slurp(tmp / "g2.txt.json"),
             "generate: sidecars byte-identical");
    c.expect(!slurp(tmp / "g1.txt").empty(), "generate: output nonempty");
    c.expect(slurp(tmp / "a1.json") == slurp(tmp / "a2.json"), "analyze: JSON byte-identical");
    c.expect(slurp(tmp / "s1/sweep.csv") == slurp(tmp / "s2/sweep.csv"),
             "sweep: CSV byte-identical");
    c.expect(slurp(tmp / "s1/clique_histograms.csv") == slurp(tmp / "s2/clique_histograms.csv"),
             "sweep: histogram CSV byte-identical");
    c.expect(slurp(tmp / "t1.csv") == slurp(tmp / "t2.csv"), "tables: CSV byte-identical");
    fs::remove_all(tmp);
    return c.ok;
#endif
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(Check&)> fn;
};

const std::vector<Criterion> kCriteria = {
    {1, "oracle equivalence on 200 random graphs", criterion_1},
    {2, "ring lattice closed forms at p=0", criterion_2},
    {3, "clique size vs degree correlation per dataset (+-0.01)", criterion_3},
    {4, "clique size vs clustering correlation per dataset (+-0.02)", criterion_4},
    {5, "average maximal clique size per dataset (+-0.02)", criterion_5},
    {6, "spectral radius / average degree ratios (+-0.01)", criterion_6},
    {7, "assortativity values (+-0.05, symmetric) and ordering", criterion_7},
    {8, "small-world zone clique ratio and random-zone decay", criterion_8},
    {9, "pooled clique histograms unimodal", criterion_9},
    {10, "byte-identical reruns of every CLI command", criterion_10},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    bool all_ok = true;
    for (const auto& criterion : kCriteria) {
        if (only != 0 && criterion.id != only) continue;
        Check check;
        bool ok = false;
        try {
            ok = criterion.fn(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "[criterion " << criterion.id << "] " << (ok ? "PASS" : "FAIL") << " - "
                  << criterion.name << "\n"
                  << check.detail.str();
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
