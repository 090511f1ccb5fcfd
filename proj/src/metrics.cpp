#include "cliquedist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace cliquedist {

double clustering_coefficient(const Graph& g, Vertex v, DegenerateClustering rule) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) return rule == DegenerateClustering::one ? 1.0 : 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto more = g.neighbors(nbrs[i]);
        // count neighbors of nbrs[i] that are also neighbors of v and > nbrs[i]
        auto it = more.begin();
        auto jt = nbrs.begin() + static_cast<std::ptrdiff_t>(i) + 1;
        while (it != more.end() && jt != nbrs.end()) {
            if (*it < *jt) ++it;
            else if (*jt < *it) ++jt;
            else { ++links; ++it; ++jt; }
        }
    }
    return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

std::vector<double> clustering_coefficients(const Graph& g, DegenerateClustering rule,
                                            bool parallel) {
    std::vector<double> out(g.vertex_count());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(g.vertex_count()); ++v) {
        out[v] = clustering_coefficient(g, static_cast<Vertex>(v), rule);
    }
    return out;
}

namespace {

NodeDiameter bfs_eccentricity(const Graph& g, Vertex source, std::vector<int>& dist,
                              std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    NodeDiameter result{0, 1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                result.eccentricity = dist[w];
                ++result.reachable;
                queue.push_back(w);
            }
        }
    }
    return result;
}

} // namespace

NodeDiameter node_diameter(const Graph& g, Vertex v) {
    g.degree(v); // range check
    std::vector<int> dist(g.vertex_count());
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    return bfs_eccentricity(g, v, dist, queue);
}

std::vector<NodeDiameter> node_diameters(const Graph& g, bool parallel) {
    std::vector<NodeDiameter> out(g.vertex_count());
#pragma omp parallel if (parallel)
    {
        std::vector<int> dist(g.vertex_count());
        std::vector<Vertex> queue;
        queue.reserve(g.vertex_count());
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(g.vertex_count()); ++v) {
            out[v] = bfs_eccentricity(g, static_cast<Vertex>(v), dist, queue);
        }
    }
    return out;
}

DistributionTable degree_distribution(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("degree_distribution: empty graph");
    std::map<std::size_t, std::size_t> counts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
    DistributionTable table;
    const double n = static_cast<double>(g.vertex_count());
    double running = 0.0;
    for (const auto& [value, count] : counts) {
        table.support.push_back(static_cast<double>(value));
        table.pmf.push_back(static_cast<double>(count) / n);
        running += static_cast<double>(count) / n;
        table.cdf.push_back(running);
    }
    return table;
}

namespace {

// Power iteration over one connected component, on A + I so that bipartite
// components cannot oscillate; the shift is subtracted at the end.
double component_spectral_radius(const Graph& g, const std::vector<Vertex>& component,
                                 std::vector<double>& x, std::vector<double>& y) {
    if (component.size() == 1) return 0.0;
    constexpr double kTolerance = 1e-10;
    constexpr int kMaxIterations = 100000;

    for (Vertex v : component) x[v] = 1.0;
    double rayleigh = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        double norm_sq = 0.0, xay = 0.0;
        for (Vertex v : component) {
            double acc = x[v]; // the +I shift
            for (Vertex w : g.neighbors(v)) acc += x[w];
            y[v] = acc;
            norm_sq += x[v] * x[v];
            xay += x[v] * acc;
        }
        const double next = xay / norm_sq;
        double scale = 0.0;
        for (Vertex v : component) scale = std::max(scale, std::abs(y[v]));
        for (Vertex v : component) x[v] = y[v] / scale;
        if (it > 0 && std::abs(next - rayleigh) < kTolerance) {
            return next - 1.0;
        }
        rayleigh = next;
    }
    throw std::runtime_error("spectral_radius: no convergence after 100000 iterations, last iterate " +
                             std::to_string(rayleigh - 1.0));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> components;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        components.push_back(queue);
    }
    return components;
}

} // namespace

double spectral_radius(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("spectral_radius: empty graph");
    std::vector<double> x(g.vertex_count(), 0.0), y(g.vertex_count(), 0.0);
    double best = 0.0;
    for (const auto& component : connected_components(g)) {
        best = std::max(best, component_spectral_radius(g, component, x, y));
    }
    return best;
}

MetricVector MetricVector::of(std::string name, std::vector<double> values) {
    MetricVector mv;
    mv.name = std::move(name);
    mv.values = std::move(values);
    double sum = 0.0;
    for (double v : mv.values) sum += v;
    mv.mean = mv.values.empty() ? 0.0 : sum / static_cast<double>(mv.values.size());
    return mv;
}

std::optional<double> pearson_correlation(const MetricVector& x, const MetricVector& y) {
    if (x.values.size() != y.values.size()) {
        throw std::invalid_argument("pearson_correlation: length mismatch");
    }
    if (x.values.size() < 2) {
        throw std::invalid_argument("pearson_correlation: need at least 2 samples");
    }
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        const double dx = x.values[i] - x.mean;
        const double dy = y.values[i] - y.mean;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

std::optional<double> assortativity_index(const Graph& g, const MetricVector& m,
                                          AssortativityMode mode) {
    if (m.values.size() != g.vertex_count()) {
        throw std::invalid_argument("assortativity_index: metric length != vertex count");
    }
    if (g.edge_count() == 0) {
        throw std::invalid_argument("assortativity_index: graph has no edges");
    }
    const auto edge_list = g.edges();
    if (mode == AssortativityMode::literal) {
        const double mbar = m.mean;
        double num = 0.0, si = 0.0, sj = 0.0;
        for (const auto& [u, v] : edge_list) {
            const double du = m.values[u] - mbar;
            const double dv = m.values[v] - mbar;
            num += du * dv;
            si += du * du;
            sj += dv * dv;
        }
        if (si == 0.0 || sj == 0.0) return std::nullopt;
        return num / (std::sqrt(si) * std::sqrt(sj));
    }
    // Symmetric: Pearson over both orientations. The doubled endpoint list has
    // the degree-weighted mean, and both sides share one variance.
    double weighted_sum = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        weighted_sum += static_cast<double>(g.degree(v)) * m.values[v];
    }
    const double mu = weighted_sum / (2.0 * static_cast<double>(g.edge_count()));
    double num = 0.0, den = 0.0;
    for (const auto& [u, v] : edge_list) {
        num += 2.0 * (m.values[u] - mu) * (m.values[v] - mu);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const double d = m.values[v] - mu;
        den += static_cast<double>(g.degree(v)) * d * d;
    }
    if (den == 0.0) return std::nullopt;
    return num / den;
}

GraphSummary graph_summary(const Graph& g, DegenerateClustering rule) {
    if (g.empty()) throw std::invalid_argument("graph_summary: empty graph");
    GraphSummary s;
    const double n = static_cast<double>(g.vertex_count());
    s.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / n;
    s.spectral_radius = spectral_radius(g);
    s.spectral_ratio = s.avg_degree > 0.0 ? s.spectral_radius / s.avg_degree : 0.0;

    const auto clustering = clustering_coefficients(g, rule);
    double csum = 0.0;
    for (double c : clustering) csum += c;
    s.avg_clustering = csum / n;

    const auto eccs = node_diameters(g);
    double esum = 0.0;
    std::size_t unreachable = 0;
    for (const auto& e : eccs) {
        esum += e.eccentricity;
        unreachable += g.vertex_count() - e.reachable;
    }
    s.avg_diameter_per_node = esum / n;
    s.unreachable_pairs = unreachable / 2;
    s.connected = unreachable == 0;
    return s;
}

} // namespace cliquedist
