#pragma once

#include <cstdint>
#include <random>

#include "cliquedist/graph.hpp"

namespace cliquedist {

/// Name of the generator recorded in reports for reproducibility.
inline constexpr const char* kRngName = "mt19937_64";

struct WSParams {
    std::size_t n = 0;        // node count
    unsigned k_regular = 0;   // even links per node, 2 <= k <= n-1
    double p_rewire = 0.0;    // per-original-edge rewiring probability
    std::uint64_t seed = 0;

    void validate() const; // throws std::invalid_argument
};

/// 1-D ring lattice: vertex i adjacent to (i +- d) mod n for d = 1..k/2.
Graph ring_lattice(std::size_t n, unsigned k_regular);

struct RewireResult {
    Graph graph;
    std::size_t rewired = 0;            // original edges actually rewired
    std::size_t resample_failures = 0;  // edges left in place after the resample cap
};

/// Rewires each original lattice edge independently with probability
/// p_rewire, visiting edges in ascending (u,v) order with u the lower
/// endpoint. The replacement target w is drawn uniformly, resampled while
/// w is u, v, or already adjacent to u (cap 100n draws, then the edge is
/// left unrewired and counted). Fully determined by params.
RewireResult rewire(const Graph& lattice, const WSParams& params);

/// ring_lattice + rewire in one step.
RewireResult generate_ws(const WSParams& params);

namespace detail {
/// Uniform double in [0,1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; platform-independent.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}
} // namespace detail

} // namespace cliquedist
