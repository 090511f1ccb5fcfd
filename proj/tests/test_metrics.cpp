#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cliquedist/metrics.hpp"
#include "cliquedist/ws.hpp"
#include "test_util.hpp"

using namespace cliquedist;

namespace {
Graph complete(std::size_t n) {
    std::vector<EdgePair> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<EdgePair> edges;
    for (Vertex leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
    return Graph::build(leaves + 1, edges);
}

Graph path3() { return Graph::build(3, std::vector<EdgePair>{{0, 1}, {1, 2}}); }
} // namespace

TEST_CASE("clustering coefficient") {
    const Graph tri = complete(3);
    for (Vertex v = 0; v < 3; ++v) CHECK(clustering_coefficient(tri, v) == doctest::Approx(1.0));

    const Graph s = star(4);
    CHECK(clustering_coefficient(s, 0) == doctest::Approx(0.0));

    const Graph lattice = ring_lattice(12, 4);
    for (Vertex v = 0; v < 12; ++v) {
        CHECK(clustering_coefficient(lattice, v) == doctest::Approx(0.5));
    }

    // degenerate degree < 2: convention selects the value
    CHECK(clustering_coefficient(s, 1, DegenerateClustering::one) == doctest::Approx(1.0));
    CHECK(clustering_coefficient(s, 1, DegenerateClustering::zero) == doctest::Approx(0.0));

    CHECK_THROWS_AS((void)clustering_coefficient(s, 99), std::out_of_range);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = testutil::random_graph(20, 0.3, seed);
        for (Vertex v = 0; v < 20; ++v) {
            const double c = clustering_coefficient(g, v, DegenerateClustering::zero);
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
    }
}

TEST_CASE("node diameter (eccentricity)") {
    const Graph k5 = complete(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(node_diameter(k5, v).eccentricity == 1);

    const Graph c10 = ring_lattice(10, 2);
    for (Vertex v = 0; v < 10; ++v) CHECK(node_diameter(c10, v).eccentricity == 5);

    const Graph p = path3();
    CHECK(node_diameter(p, 1).eccentricity == 1);
    CHECK(node_diameter(p, 0).eccentricity == 2);

    const Graph split = Graph::build(4, std::vector<EdgePair>{{0, 1}, {2, 3}});
    const NodeDiameter nd = node_diameter(split, 0);
    CHECK(nd.eccentricity == 1);
    CHECK(nd.reachable == 2);
}

TEST_CASE("degree distribution") {
    const DistributionTable k4 = degree_distribution(complete(4));
    CHECK(k4.support == std::vector<double>{3.0});
    CHECK(k4.pmf == std::vector<double>{1.0});

    const DistributionTable s = degree_distribution(star(4));
    CHECK(s.support == std::vector<double>{1.0, 4.0});
    CHECK(s.pmf[0] == doctest::Approx(0.8));
    CHECK(s.pmf[1] == doctest::Approx(0.2));
    CHECK(s.cdf.back() == doctest::Approx(1.0));

    CHECK_THROWS_AS((void)degree_distribution(Graph::build(0, {})), std::invalid_argument);
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(complete(6)) == doctest::Approx(5.0).epsilon(1e-8));
    // star with L leaves has largest eigenvalue sqrt(L); bipartite, so this
    // also exercises the oscillation-free iteration
    CHECK(spectral_radius(star(9)) == doctest::Approx(3.0).epsilon(1e-8));
    // disconnected: maximum over components
    const Graph two = Graph::build(9, std::vector<EdgePair>{{0, 1}, {2, 3}, {3, 4}, {2, 4},
                                                            {5, 6}, {6, 7}, {7, 8}});
    CHECK(spectral_radius(two) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK_THROWS_AS((void)spectral_radius(Graph::build(0, {})), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = testutil::random_graph(25, 0.25, seed);
        if (g.edge_count() == 0) continue;
        const double lam = spectral_radius(g);
        const double avg = 2.0 * g.edge_count() / g.vertex_count();
        CHECK(lam >= avg - 1e-8);
        CHECK(lam <= static_cast<double>(g.max_degree()) + 1e-8);
    }
}

TEST_CASE("pearson correlation") {
    const MetricVector x = MetricVector::of("x", {1, 2, 3, 4});
    const MetricVector y = MetricVector::of("y", {-1, -2, -3, -4});
    CHECK(pearson_correlation(x, x).value() == doctest::Approx(1.0));
    CHECK(pearson_correlation(x, y).value() == doctest::Approx(-1.0));

    const MetricVector flat = MetricVector::of("flat", {2, 2, 2, 2});
    CHECK(!pearson_correlation(x, flat).has_value());

    // invariance under positive affine maps, sign flip under negative scale
    const MetricVector z = MetricVector::of("z", {0.5, 3.0, 2.5, 1.0});
    const double base = pearson_correlation(x, z).value();
    std::vector<double> scaled;
    for (double v : z.values) scaled.push_back(3.0 * v + 7.0);
    CHECK(pearson_correlation(x, MetricVector::of("s", scaled)).value() ==
          doctest::Approx(base).epsilon(1e-12));
    std::vector<double> flipped;
    for (double v : z.values) flipped.push_back(-2.0 * v + 1.0);
    CHECK(pearson_correlation(x, MetricVector::of("f", flipped)).value() ==
          doctest::Approx(-base).epsilon(1e-12));

    CHECK_THROWS_AS((void)pearson_correlation(x, MetricVector::of("short", {1.0})),
                    std::invalid_argument);
}

TEST_CASE("assortativity index") {
    const Graph p = path3();
    const MetricVector flat = MetricVector::of("flat", {1, 1, 1});
    CHECK(!assortativity_index(p, flat).has_value());

    // known value: star endpoints anti-correlate maximally in literal mode
    const Graph s = star(3);
    const MetricVector deg = MetricVector::of("deg", {3, 1, 1, 1});
    const double sym = assortativity_index(s, deg, AssortativityMode::symmetric).value();
    CHECK(sym == doctest::Approx(-1.0));

    CHECK_THROWS_AS((void)assortativity_index(Graph::build(2, {}), MetricVector::of("m", {1, 2})),
                    std::invalid_argument);

    // symmetric mode is invariant under vertex relabeling
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = testutil::random_graph(18, 0.3, 200 + seed);
        if (g.edge_count() == 0) continue;
        std::vector<double> d(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = static_cast<double>(g.degree(v));
        const auto r1 = assortativity_index(g, MetricVector::of("d", d));
        const auto [h, perm] = testutil::permuted(g, 300 + seed);
        std::vector<double> dh(h.vertex_count());
        for (Vertex v = 0; v < h.vertex_count(); ++v) dh[v] = static_cast<double>(h.degree(v));
        const auto r2 = assortativity_index(h, MetricVector::of("d", dh));
        if (r1 && r2) CHECK(*r1 == doctest::Approx(*r2).epsilon(1e-12));
        else CHECK(r1.has_value() == r2.has_value());
    }
}

TEST_CASE("graph summary") {
    GraphSummary k5 = graph_summary(complete(5));
    CHECK(k5.avg_diameter_per_node == doctest::Approx(1.0));
    CHECK(k5.spectral_ratio == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(k5.connected);
    CHECK(k5.unreachable_pairs == 0);

    GraphSummary lattice = graph_summary(ring_lattice(100, 4));
    CHECK(lattice.avg_degree == doctest::Approx(4.0));
    CHECK(lattice.avg_clustering == doctest::Approx(0.5));

    GraphSummary split = graph_summary(Graph::build(4, std::vector<EdgePair>{{0, 1}, {2, 3}}));
    CHECK(!split.connected);
    CHECK(split.unreachable_pairs == 4);
}
