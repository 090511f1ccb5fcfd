#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquedist/graph.hpp"

namespace cliquedist {

/// Value assigned to the clustering coefficient of a vertex with degree < 2,
/// where the defining ratio degenerates. `one` reproduces the reference
/// results on the bundled datasets and is the default; `zero` is the other
/// common convention.
enum class DegenerateClustering { one, zero };

/// C(v) = edges among neighbors / (k choose 2) for degree k >= 2.
double clustering_coefficient(const Graph& g, Vertex v,
                              DegenerateClustering rule = DegenerateClustering::one);

/// Per-vertex clustering coefficients; parallelizes over vertices.
std::vector<double> clustering_coefficients(const Graph& g,
                                            DegenerateClustering rule = DegenerateClustering::one,
                                            bool parallel = true);

struct NodeDiameter {
    int eccentricity = 0;       // max BFS distance within v's reachable set
    std::size_t reachable = 0;  // vertices reachable from v, including v
};

/// BFS eccentricity of v over its reachable set.
NodeDiameter node_diameter(const Graph& g, Vertex v);

/// Eccentricities for all vertices; parallelizes over source vertices.
std::vector<NodeDiameter> node_diameters(const Graph& g, bool parallel = true);

struct DistributionTable {
    std::vector<double> support; // sorted distinct values
    std::vector<double> pmf;     // fraction of vertices at each value
    std::vector<double> cdf;     // running sum, last entry 1
};

/// Degree distribution of a nonempty graph; throws std::invalid_argument on
/// an empty one.
DistributionTable degree_distribution(const Graph& g);

/// Largest adjacency eigenvalue by power iteration (all-ones start, Rayleigh
/// quotient convergence < 1e-10, at most 1e5 iterations), restarted per
/// connected component and maxed. Throws std::invalid_argument on an empty
/// graph and std::runtime_error (with the last iterate) on non-convergence.
double spectral_radius(const Graph& g);

/// A named per-vertex metric with its cached mean.
struct MetricVector {
    std::string name;
    std::vector<double> values;
    double mean = 0.0;

    static MetricVector of(std::string name, std::vector<double> values);
};

/// Pearson correlation coefficient of two equal-length metric vectors.
/// Returns nullopt when either vector is constant (undefined, never NaN).
std::optional<double> pearson_correlation(const MetricVector& x, const MetricVector& y);

/// Edge-endpoint correlation modes. `symmetric` lets each undirected edge
/// contribute both orientations (the plain Pearson coefficient of the
/// endpoint value pairs). `literal` uses one canonical orientation (u < v)
/// and centers on the node-average of the metric.
enum class AssortativityMode { symmetric, literal };

/// Assortativity index of metric m over the edges of g. Returns nullopt for
/// a constant metric. Requires at least one edge.
std::optional<double> assortativity_index(const Graph& g, const MetricVector& m,
                                          AssortativityMode mode = AssortativityMode::symmetric);

struct GraphSummary {
    double avg_degree = 0.0;
    double spectral_radius = 0.0;
    double spectral_ratio = 0.0; // spectral_radius / avg_degree
    double avg_clustering = 0.0;
    double avg_diameter_per_node = 0.0; // mean eccentricity, reachable-set convention
    bool connected = false;
    std::size_t unreachable_pairs = 0; // unordered vertex pairs with no path
};

GraphSummary graph_summary(const Graph& g,
                           DegenerateClustering rule = DegenerateClustering::one);

} // namespace cliquedist
