#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquedist {

using Vertex = std::uint32_t;
using EdgePair = std::pair<Vertex, Vertex>;

/// Simple undirected graph over vertices 0..n-1.
///
/// Adjacency lists are sorted ascending and duplicate-free, so neighbor
/// iteration order is deterministic. Instances are immutable after build()
/// and safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from unordered vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge. Throws std::invalid_argument on
    /// self-loops or out-of-range endpoints.
    static Graph build(std::size_t n, std::span<const EdgePair> edges);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return num_edges_; }
    bool empty() const { return adj_.empty(); }

    /// |adjacency[v]|. Throws std::out_of_range on bad vertex.
    std::size_t degree(Vertex v) const;

    /// Neighbor IDs of v in ascending order. Throws std::out_of_range.
    std::span<const Vertex> neighbors(Vertex v) const;

    /// Adjacency test by binary search; endpoints must be in range.
    bool has_edge(Vertex u, Vertex v) const;

    std::size_t max_degree() const;

    /// Canonical edge dump: pairs with u < v, ascending.
    std::vector<EdgePair> edges() const;

private:
    void check_vertex(Vertex v) const;

    std::size_t num_edges_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

bool operator==(const Graph& a, const Graph& b);

} // namespace cliquedist
