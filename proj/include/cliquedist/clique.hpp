#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cliquedist/graph.hpp"

namespace cliquedist {

/// Candidate filter applied when expanding a clique through vertex u.
/// `candidate_degree` keeps neighbors w with degree(w) >= current bound.
/// `selected_degree` gates on degree(u) >= bound instead; both are pure
/// pruning rules and never change results, only the search size.
enum class NPrimeFilter { candidate_degree, selected_degree };

struct CliqueOptions {
    NPrimeFilter filter = NPrimeFilter::candidate_degree;
    /// Seed each vertex bound with the best clique already found that
    /// contains it instead of starting from zero. Off by default.
    bool share_bounds = false;
    bool parallel = true;
    /// Wall-clock budget for one call; disabled by default. When exceeded the
    /// call aborts with CliqueBudgetError carrying the partial results.
    std::optional<double> time_budget_seconds;
};

/// Thrown when a clique computation exceeds its time budget. `partial`
/// holds the per-vertex sizes finished before the abort, -1 elsewhere.
class CliqueBudgetError : public std::runtime_error {
public:
    CliqueBudgetError(std::string message, std::vector<int> partial_sizes, std::size_t done)
        : std::runtime_error(std::move(message)), partial(std::move(partial_sizes)),
          completed(done) {}

    std::vector<int> partial;
    std::size_t completed;
};

/// Per-vertex maximal clique sizes plus aggregates.
struct CliqueReport {
    std::vector<int> per_vertex;           // size of largest clique containing v
    int max_size = 0;                      // = graph maximum clique size
    double average = 0.0;                  // arithmetic mean of per_vertex
    std::map<int, std::size_t> histogram;  // clique size -> vertex count

    static CliqueReport from_sizes(std::vector<int> sizes);
};

/// Exact maximum clique size of the whole graph by degree-pruned
/// branch-and-bound. Sequential (the bound is shared across root vertices).
int max_clique_size(const Graph& g, NPrimeFilter filter = NPrimeFilter::candidate_degree);

/// As above with full options; honors options.time_budget_seconds.
int max_clique_size(const Graph& g, const CliqueOptions& options);

/// Exact maximal clique size for every vertex. Each vertex search is
/// independent with its own bound, so vertices are evaluated in parallel
/// when options.parallel is set; results are identical either way.
CliqueReport maximal_clique_sizes(const Graph& g, const CliqueOptions& options = {});

/// Serial reference of the same per-vertex computation, kept for tests and
/// benchmarks against the parallel path.
CliqueReport maximal_clique_sizes_serial(const Graph& g, const CliqueOptions& options = {});

/// Verification oracle: enumerates every maximal clique with pivoted
/// Bron-Kerbosch over word-packed vertex sets and takes per-vertex maxima.
/// Independent of the branch-and-bound code path. Throws
/// std::invalid_argument for n > 25 (exhaustive enumeration budget).
CliqueReport oracle_maximal_clique_sizes(const Graph& g);

} // namespace cliquedist
