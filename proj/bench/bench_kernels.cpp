// Compares the serial reference kernels against the OpenMP-parallel ones on
// Watts-Strogatz graphs and the bundled airport network, and verifies that
// both paths produce identical results while timing them.
//
//   ./bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cliquedist/clique.hpp"
#include "cliquedist/graph_io.hpp"
#include "cliquedist/metrics.hpp"
#include "cliquedist/ws.hpp"

using namespace cliquedist;

namespace {

template <typename F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e100;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_graph(const std::string& name, const Graph& g, int repeats) {
    std::printf("%-28s n=%zu m=%zu\n", name.c_str(), g.vertex_count(), g.edge_count());

    CliqueOptions serial_opts;
    serial_opts.parallel = false;
    CliqueReport serial_report, parallel_report;
    const double t_clique_s =
        time_best_of(repeats, [&] { serial_report = maximal_clique_sizes_serial(g, serial_opts); });
    const double t_clique_p =
        time_best_of(repeats, [&] { parallel_report = maximal_clique_sizes(g); });
    const bool clique_same = serial_report.per_vertex == parallel_report.per_vertex;

    std::vector<double> cc_s, cc_p;
    const double t_cc_s = time_best_of(
        repeats, [&] { cc_s = clustering_coefficients(g, DegenerateClustering::one, false); });
    const double t_cc_p = time_best_of(
        repeats, [&] { cc_p = clustering_coefficients(g, DegenerateClustering::one, true); });

    std::vector<NodeDiameter> ecc_s, ecc_p;
    const double t_ecc_s = time_best_of(repeats, [&] { ecc_s = node_diameters(g, false); });
    const double t_ecc_p = time_best_of(repeats, [&] { ecc_p = node_diameters(g, true); });

    bool ecc_same = ecc_s.size() == ecc_p.size();
    for (std::size_t i = 0; ecc_same && i < ecc_s.size(); ++i) {
        ecc_same = ecc_s[i].eccentricity == ecc_p[i].eccentricity;
    }

    auto line = [](const char* kernel, double ts, double tp, bool same) {
        std::printf("  %-22s serial %9.4f ms   omp %9.4f ms   speedup %5.2fx   %s\n", kernel,
                    ts * 1e3, tp * 1e3, ts / tp, same ? "results identical" : "RESULTS DIFFER");
    };
    line("maximal_clique_sizes", t_clique_s, t_clique_p, clique_same);
    line("clustering", t_cc_s, t_cc_p, cc_s == cc_p);
    line("eccentricity", t_ecc_s, t_ecc_p, ecc_same);
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    bench_graph("ws n=1000 k=20 p=0.05", generate_ws({1000, 20, 0.05, 42}).graph, repeats);
    bench_graph("ws n=4000 k=12 p=0.1", generate_ws({4000, 12, 0.1, 7}).graph, repeats);
    try {
        const auto& usair = bundled_datasets().back();
        bench_graph("USAir97", load_dataset(CLIQUEDIST_DATA_DIR, usair).graph, repeats);
    } catch (const std::exception& e) {
        std::printf("skipping USAir97 fixture: %s\n", e.what());
    }
    return 0;
}
