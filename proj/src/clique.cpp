#include "cliquedist/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cliquedist {
namespace {

// ---------------------------------------------------------------------------
// Word-packed vertex sets
// ---------------------------------------------------------------------------

constexpr int kWordBits = 64;

inline std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline void set_bit(std::uint64_t* row, Vertex v) { row[v / kWordBits] |= 1ull << (v % kWordBits); }

inline int popcount(const std::uint64_t* row, std::size_t words) {
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

inline int lowest_bit(const std::uint64_t* row, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if (row[w]) return static_cast<int>(w * kWordBits + std::countr_zero(row[w]));
    }
    return -1;
}

// Read-only search tables shared by every worker: packed adjacency rows plus,
// for each degree threshold d, the set of vertices with degree >= d (the
// N'(u) filter is then a single AND).
struct GraphBits {
    explicit GraphBits(const Graph& g)
        : n(g.vertex_count()), words(word_count(std::max<std::size_t>(n, 1))), max_deg(g.max_degree()) {
        adj.assign(n * words, 0);
        degree.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            degree[v] = static_cast<int>(g.degree(v));
            for (Vertex w : g.neighbors(v)) set_bit(&adj[v * words], w);
        }
        deg_at_least.assign((max_deg + 2) * words, 0);
        for (std::size_t d = 0; d <= max_deg + 1; ++d) {
            std::uint64_t* row = &deg_at_least[d * words];
            for (Vertex v = 0; v < n; ++v) {
                if (degree[v] >= static_cast<int>(d)) set_bit(row, v);
            }
        }
    }

    const std::uint64_t* adj_row(Vertex v) const { return &adj[v * words]; }

    const std::uint64_t* degree_mask(int bound) const {
        const std::size_t d = std::min<std::size_t>(bound < 0 ? 0 : bound, max_deg + 1);
        return &deg_at_least[d * words];
    }

    std::size_t n;
    std::size_t words;
    std::size_t max_deg;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> deg_at_least;
    std::vector<int> degree;
};

// Shared deadline for one engine call. Workers poll it coarsely; once any
// worker sees the deadline pass, every search unwinds.
struct Deadline {
    std::chrono::steady_clock::time_point at;
    std::atomic<bool> expired{false};

    bool check() {
        if (expired.load(std::memory_order_relaxed)) return true;
        if (std::chrono::steady_clock::now() >= at) {
            expired.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

// One branch-and-bound worker. Holds the per-level candidate buffers and the
// chosen-vertex stack; cheap to create per thread.
class Searcher {
public:
    Searcher(const GraphBits& bits, NPrimeFilter filter, Deadline* deadline = nullptr)
        : bits_(bits), filter_(filter), deadline_(deadline) {}

    using CliqueSink = std::function<void(const std::vector<Vertex>&, int)>;

    // Runs the CLIQUE subroutine for root vertex v. `bound` carries the best
    // size known so far (0 per-vertex, or the shared graph maximum) and is
    // raised in place. With `filter_seed` the candidate set keeps only
    // neighbors with degree >= bound, as in the whole-graph procedure; the
    // per-vertex variant seeds all neighbors.
    void search_root(Vertex v, int& bound, bool filter_seed, const CliqueSink& on_clique = {}) {
        ensure_level(0);
        std::uint64_t* u0 = level(0);
        const std::uint64_t* nbrs = bits_.adj_row(v);
        if (filter_seed) {
            const std::uint64_t* mask = bits_.degree_mask(bound);
            for (std::size_t w = 0; w < bits_.words; ++w) u0[w] = nbrs[w] & mask[w];
        } else {
            std::copy(nbrs, nbrs + bits_.words, u0);
        }
        bound_ = &bound;
        on_clique_ = &on_clique;
        stack_.clear();
        aborted_ = false;
        extend(0, 1);
    }

    // True when the last search_root unwound because the deadline passed.
    bool aborted() const { return aborted_; }

private:
    std::uint64_t* level(std::size_t depth) { return &levels_[depth * bits_.words]; }

    void ensure_level(std::size_t depth) {
        if ((depth + 1) * bits_.words > levels_.size()) {
            levels_.resize((depth + 1) * bits_.words, 0);
        }
    }

    void extend(std::size_t depth, int size) {
        if (deadline_ && (++ticks_ & 1023u) == 0 && deadline_->check()) aborted_ = true;
        if (aborted_) return;
        std::uint64_t* cand = level(depth);
        int remaining = popcount(cand, bits_.words);
        if (remaining == 0) {
            if (size > *bound_) {
                *bound_ = size;
                if (on_clique_ && *on_clique_) (*on_clique_)(stack_, size);
            }
            return;
        }
        while (remaining > 0 && !aborted_) {
            if (size + remaining <= *bound_) return;
            const int u = lowest_bit(cand, bits_.words);
            cand[u / kWordBits] &= ~(1ull << (u % kWordBits));
            --remaining;

            ensure_level(depth + 1);
            cand = level(depth); // ensure_level may reallocate
            std::uint64_t* next = level(depth + 1);
            const std::uint64_t* uadj = bits_.adj_row(static_cast<Vertex>(u));
            if (filter_ == NPrimeFilter::candidate_degree) {
                const std::uint64_t* mask = bits_.degree_mask(*bound_);
                for (std::size_t w = 0; w < bits_.words; ++w) next[w] = cand[w] & uadj[w] & mask[w];
            } else if (bits_.degree[u] >= *bound_) {
                for (std::size_t w = 0; w < bits_.words; ++w) next[w] = cand[w] & uadj[w];
            } else {
                std::fill(next, next + bits_.words, 0);
            }
            stack_.push_back(static_cast<Vertex>(u));
            extend(depth + 1, size + 1);
            stack_.pop_back();
            cand = level(depth);
        }
    }

    const GraphBits& bits_;
    NPrimeFilter filter_;
    Deadline* deadline_ = nullptr;
    std::vector<std::uint64_t> levels_;
    std::vector<Vertex> stack_;
    int* bound_ = nullptr;
    const CliqueSink* on_clique_ = nullptr;
    std::uint32_t ticks_ = 0;
    bool aborted_ = false;
};

void atomic_fetch_max(std::atomic<int>& a, int value) {
    int cur = a.load(std::memory_order_relaxed);
    while (cur < value && !a.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

std::chrono::steady_clock::time_point budget_deadline(double seconds) {
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(seconds));
}

CliqueReport run_per_vertex(const Graph& g, const CliqueOptions& options, bool parallel) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return CliqueReport::from_sizes({});

    GraphBits bits(g);
    std::vector<int> sizes(n, -1);
    std::vector<std::atomic<int>> seeds(options.share_bounds ? n : 0);
    Deadline deadline;
    Deadline* deadline_ptr = nullptr;
    if (options.time_budget_seconds) {
        deadline.at = budget_deadline(*options.time_budget_seconds);
        deadline_ptr = &deadline;
    }

#pragma omp parallel if (parallel)
    {
        Searcher searcher(bits, options.filter, deadline_ptr);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            if (deadline_ptr && deadline_ptr->expired.load(std::memory_order_relaxed)) continue;
            const Vertex root = static_cast<Vertex>(v);
            int bound = options.share_bounds ? seeds[root].load(std::memory_order_relaxed) : 0;
            if (options.share_bounds) {
                Searcher::CliqueSink sink = [&](const std::vector<Vertex>& members, int size) {
                    atomic_fetch_max(seeds[root], size);
                    for (Vertex w : members) atomic_fetch_max(seeds[w], size);
                };
                searcher.search_root(root, bound, /*filter_seed=*/false, sink);
                bound = std::max(bound, seeds[root].load(std::memory_order_relaxed));
            } else {
                searcher.search_root(root, bound, /*filter_seed=*/false);
            }
            if (!searcher.aborted()) sizes[v] = bound;
        }
    }
    if (deadline_ptr && deadline.expired.load(std::memory_order_relaxed)) {
        std::size_t completed = 0;
        for (int s : sizes) completed += s >= 0;
        throw CliqueBudgetError("maximal_clique_sizes: time budget of " +
                                    std::to_string(*options.time_budget_seconds) +
                                    " s exceeded after " + std::to_string(completed) + "/" +
                                    std::to_string(n) + " vertices",
                                std::move(sizes), completed);
    }
    return CliqueReport::from_sizes(std::move(sizes));
}

} // namespace

CliqueReport CliqueReport::from_sizes(std::vector<int> sizes) {
    CliqueReport report;
    report.per_vertex = std::move(sizes);
    if (report.per_vertex.empty()) return report;
    long long sum = 0;
    for (int s : report.per_vertex) {
        sum += s;
        report.max_size = std::max(report.max_size, s);
        ++report.histogram[s];
    }
    report.average = static_cast<double>(sum) / static_cast<double>(report.per_vertex.size());
    return report;
}

int max_clique_size(const Graph& g, NPrimeFilter filter) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    GraphBits bits(g);
    Searcher searcher(bits, filter);
    int best = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (bits.degree[v] >= best) {
            searcher.search_root(v, best, /*filter_seed=*/true);
        }
    }
    return best;
}

int max_clique_size(const Graph& g, const CliqueOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    GraphBits bits(g);
    Deadline deadline;
    Deadline* deadline_ptr = nullptr;
    if (options.time_budget_seconds) {
        deadline.at = budget_deadline(*options.time_budget_seconds);
        deadline_ptr = &deadline;
    }
    Searcher searcher(bits, options.filter, deadline_ptr);
    int best = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (bits.degree[v] >= best) {
            searcher.search_root(v, best, /*filter_seed=*/true);
            if (searcher.aborted()) {
                throw CliqueBudgetError("max_clique_size: time budget of " +
                                            std::to_string(*options.time_budget_seconds) +
                                            " s exceeded; best clique so far " +
                                            std::to_string(best),
                                        {}, v);
            }
        }
    }
    return best;
}

CliqueReport maximal_clique_sizes(const Graph& g, const CliqueOptions& options) {
    return run_per_vertex(g, options, options.parallel);
}

CliqueReport maximal_clique_sizes_serial(const Graph& g, const CliqueOptions& options) {
    return run_per_vertex(g, options, /*parallel=*/false);
}

// ---------------------------------------------------------------------------
// Enumeration oracle (independent of the branch-and-bound path)
// ---------------------------------------------------------------------------

namespace {

struct OracleState {
    std::vector<std::uint32_t> adj;
    std::vector<int> best;

    void enumerate(std::uint32_t in_clique, std::uint32_t candidates, std::uint32_t excluded) {
        if (candidates == 0 && excluded == 0) {
            const int size = std::popcount(in_clique);
            for (std::uint32_t rest = in_clique; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                best[v] = std::max(best[v], size);
            }
            return;
        }
        // Pivot on the vertex covering most candidates; only non-neighbors of
        // the pivot need to be branched on.
        std::uint32_t pool = candidates | excluded;
        int pivot = -1, pivot_cover = -1;
        for (std::uint32_t rest = pool; rest;) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            const int cover = std::popcount(candidates & adj[u]);
            if (cover > pivot_cover) {
                pivot_cover = cover;
                pivot = u;
            }
        }
        std::uint32_t branch = candidates & ~adj[pivot];
        for (std::uint32_t rest = branch; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t bit = 1u << v;
            enumerate(in_clique | bit, candidates & adj[v], excluded & adj[v]);
            candidates &= ~bit;
            excluded |= bit;
        }
    }
};

} // namespace

CliqueReport oracle_maximal_clique_sizes(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 25) {
        throw std::invalid_argument("oracle limited to n <= 25, got n = " + std::to_string(n));
    }
    if (n == 0) return CliqueReport::from_sizes({});

    OracleState state;
    state.adj.assign(n, 0);
    state.best.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) state.adj[v] |= 1u << w;
    }
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    state.enumerate(0, all, 0);
    return CliqueReport::from_sizes(std::move(state.best));
}

} // namespace cliquedist
