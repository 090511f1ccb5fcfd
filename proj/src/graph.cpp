#include "cliquedist/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliquedist {

Graph Graph::build(std::size_t n, std::span<const EdgePair> edges) {
    Graph g;
    g.adj_.resize(n);
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("self-loop rejected: vertex " + std::to_string(u));
        }
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + "), n=" + std::to_string(n));
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t half_degree_sum = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        half_degree_sum += nbrs.size();
    }
    g.num_edges_ = half_degree_sum / 2;
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range, n=" +
                                std::to_string(adj_.size()));
    }
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return adj_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, nbrs.size());
    return best;
}

std::vector<EdgePair> Graph::edges() const {
    std::vector<EdgePair> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
        auto na = a.neighbors(v);
        auto nb = b.neighbors(v);
        if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
    }
    return true;
}

} // namespace cliquedist
