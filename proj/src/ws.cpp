#include "cliquedist/ws.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquedist {

void WSParams::validate() const {
    if (n < 3) throw std::invalid_argument("ws: need n >= 3 nodes");
    if (k_regular % 2 != 0) {
        throw std::invalid_argument("ws: k_regular must be even, got " + std::to_string(k_regular));
    }
    if (k_regular < 2 || k_regular >= n) {
        throw std::invalid_argument("ws: need 2 <= k_regular <= n-1, got k=" +
                                    std::to_string(k_regular) + ", n=" + std::to_string(n));
    }
    if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
        throw std::invalid_argument("ws: p_rewire must be in [0,1]");
    }
}

Graph ring_lattice(std::size_t n, unsigned k_regular) {
    WSParams check{n, k_regular, 0.0, 0};
    check.validate();
    std::vector<EdgePair> edges;
    edges.reserve(n * k_regular / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (unsigned d = 1; d <= k_regular / 2; ++d) {
            const auto j = static_cast<Vertex>((i + d) % n);
            edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return Graph::build(n, edges);
}

RewireResult rewire(const Graph& lattice, const WSParams& params) {
    params.validate();
    const std::size_t n = lattice.vertex_count();

    // Mutable adjacency as ordered sets; the graph stays simple throughout.
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        auto nbrs = lattice.neighbors(v);
        adj[v].insert(nbrs.begin(), nbrs.end());
    }

    std::vector<EdgePair> originals = lattice.edges(); // ascending (u,v), u < v
    std::mt19937_64 rng(params.seed);
    const std::size_t resample_cap = 100 * n;

    RewireResult result;
    for (const auto& [u, v] : originals) {
        if (detail::rand_unit(rng) >= params.p_rewire) continue;
        bool placed = false;
        for (std::size_t attempt = 0; attempt < resample_cap; ++attempt) {
            const auto w = static_cast<Vertex>(detail::rand_below(rng, n));
            if (w == u || w == v || adj[u].count(w)) continue;
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
            placed = true;
            break;
        }
        if (placed) ++result.rewired;
        else ++result.resample_failures;
    }

    std::vector<EdgePair> edges;
    edges.reserve(lattice.edge_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w : adj[u]) {
            if (u < w) edges.emplace_back(u, w);
        }
    }
    result.graph = Graph::build(n, edges);
    return result;
}

RewireResult generate_ws(const WSParams& params) {
    return rewire(ring_lattice(params.n, params.k_regular), params);
}

} // namespace cliquedist
