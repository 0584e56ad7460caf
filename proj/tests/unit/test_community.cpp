#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "../support/oracles.hpp"
#include "jnet/community.hpp"
#include "jnet/error.hpp"

using namespace jnet;

namespace {

WeightedGraph make_graph(std::size_t n, std::vector<Edge> edges) {
  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.node_labels.push_back("v" + std::to_string(i));
  g.edges = std::move(edges);
  canonicalize(g);
  return g;
}

WeightedGraph two_triangles() {
  return make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
}

WeightedGraph random_graph(std::size_t n, double p, int max_w) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (oracle::uniform01() < p) edges.push_back({i, j, oracle::uniform(1, max_w)});
    }
  }
  return make_graph(n, std::move(edges));
}

/// n nodes, the last `isolated` of them without edges, and exactly `m` edges
/// spread over the others.
WeightedGraph graph_with(std::size_t n, std::size_t isolated, std::size_t m) {
  std::vector<Edge> edges;
  const std::size_t active = n - isolated;
  for (std::size_t i = 0; i < active && edges.size() < m; ++i) {
    for (std::size_t j = i + 1; j < active && edges.size() < m; ++j) edges.push_back({i, j, 1});
  }
  REQUIRE(edges.size() == m);
  return make_graph(n, std::move(edges));
}

double round_to(double x, int digits) {
  const double f = std::pow(10.0, digits);
  return std::round(x * f) / f;
}

}  // namespace

TEST_CASE("network stats of a complete graph") {
  const auto s = network_stats(make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 5}}));
  CHECK(s.density == 1.0);
  CHECK(s.average_degree == 3.0);
  CHECK(s.isolated_count == 0);
  CHECK_THROWS_AS(network_stats(make_graph(1, {})), DomainError);
}

TEST_CASE("network stats reproduce published row arithmetic") {
  // 79 journals, 4 isolated, 373 edges -> 0.121 / 9.443 / 4
  const auto s = network_stats(graph_with(79, 4, 373));
  CHECK(round_to(s.density, 3) == doctest::Approx(0.121));
  CHECK(round_to(s.average_degree, 3) == doctest::Approx(9.443));
  CHECK(s.isolated_count == 4);
  CHECK(s.density * 78 == doctest::Approx(s.average_degree));

  // 169 journals with average degree 95.053 -> density 95.053 / 168 = 0.566
  const auto e = network_stats(graph_with(169, 0, 8032));
  CHECK(round_to(e.average_degree, 3) == doctest::Approx(95.053));
  CHECK(round_to(e.density, 3) == doctest::Approx(0.566));
  CHECK(round_to(95.053 / 168, 3) == doctest::Approx(0.566));
}

TEST_CASE("modularity closed forms") {
  const auto g = two_triangles();
  CHECK(modularity(g, Partition({1, 1, 1, 2, 2, 2})) == doctest::Approx(0.5));
  CHECK(modularity(g, Partition(std::vector<int>(6, 1))) == doctest::Approx(0.0));
  const auto path = make_graph(3, {{0, 1, 2}, {1, 2, 1}});
  CHECK(modularity(path, Partition({1, 1, 1})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(modularity(make_graph(3, {}), Partition({1, 2, 3})), DomainError);
  CHECK_THROWS_AS(modularity(g, Partition({1, 1, 1, 2, 2, 2}), 0.0), DomainError);
  CHECK_THROWS_AS(modularity(g, Partition({1, 2})), AlignmentError);
}

TEST_CASE("modularity matches the pairwise-sum formula") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(10, 0.4, 6);
    if (g.edges.empty()) continue;
    const auto raw = oracle::random_partition(10, oracle::uniform(1, 5));
    const auto p = Partition::from_raw(raw);
    const double gamma = trial % 3 == 0 ? 1.0 : 0.3 + 2.0 * oracle::uniform01();
    CHECK(std::abs(modularity(g, p, gamma) - oracle::modularity_pairwise(oracle::weights(g), raw, gamma)) < 1e-12);
  }
}

TEST_CASE("modularity and E-I are invariant under node relabeling") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(9, 0.4, 4);
    if (g.edges.empty()) continue;
    const auto p = Partition::from_raw(oracle::random_partition(9, 3));
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), oracle::gen());
    std::vector<std::string> labels(9);
    std::vector<int> ids(9);
    for (std::size_t i = 0; i < 9; ++i) {
      labels[i] = g.node_labels[perm[i]];
      ids[i] = p[perm[i]];
    }
    const auto g2 = reorder(g, labels);
    const auto p2 = Partition::from_raw(ids);
    CHECK(modularity(g2, p2) == doctest::Approx(modularity(g, p)).epsilon(1e-12));
    CHECK(ei_index(g2, p2, true) == doctest::Approx(ei_index(g, p, true)).epsilon(1e-12));
    CHECK(ei_index(g2, p2, false) == doctest::Approx(ei_index(g, p, false)).epsilon(1e-12));
  }
}

TEST_CASE("E-I index extremes and weighting") {
  const auto g = two_triangles();
  CHECK(ei_index(g, Partition({1, 1, 1, 2, 2, 2}), false) == -1.0);
  CHECK(ei_index(g, Partition({1, 1, 1, 2, 2, 2}), true) == -1.0);
  const auto bip = make_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
  CHECK(ei_index(bip, Partition({1, 1, 2, 2}), false) == 1.0);
  // one internal edge of weight 3, one external of weight 1
  const auto w = make_graph(3, {{0, 1, 3}, {1, 2, 1}});
  const Partition p({1, 1, 2});
  CHECK(ei_index(w, p, false) == 0.0);
  CHECK(ei_index(w, p, true) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(ei_index(make_graph(2, {}), Partition({1, 2}), false), DomainError);
}

TEST_CASE("Louvain splits two triangles exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = louvain(two_triangles(), {1.0, seed, 1});
    CHECK(r.partition.assignment() == std::vector<int>{1, 1, 1, 2, 2, 2});
    CHECK(r.stats.modularity == doctest::Approx(0.5));
    CHECK(r.stats.n_communities == 2);
    CHECK(r.stats.ei_unweighted == -1.0);
  }
}

TEST_CASE("Louvain keeps isolates as trailing singletons") {
  auto g = two_triangles();
  g.node_labels.push_back("iso1");
  g.node_labels.push_back("iso2");
  const auto r = louvain(g, {1.0, 3, 5});
  CHECK(r.partition.community_count() == 4);
  CHECK(r.partition[6] == 3);
  CHECK(r.partition[7] == 4);
  CHECK(r.stats.n_non_isolated_communities == 2);
  CHECK(r.stats.resolution == 1.0);
}

TEST_CASE("Louvain on an edgeless graph reports undefined modularity") {
  CHECK_THROWS_AS(louvain(make_graph(4, {}), {}), DomainError);
  CHECK_THROWS_AS(louvain(two_triangles(), {0.0, 1, 1}), DomainError);
  CHECK_THROWS_AS(louvain(two_triangles(), {1.0, 1, 0}), DomainError);
}

TEST_CASE("Louvain beats the trivial baselines and is deterministic") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(20, 0.2, 5);
    if (g.edges.empty()) continue;
    const double gamma = trial % 2 == 0 ? 1.0 : 0.8;
    const LouvainOptions opt{gamma, static_cast<std::uint64_t>(trial), 4, 1};
    const auto r = louvain(g, opt);
    std::vector<int> singletons(20);
    std::iota(singletons.begin(), singletons.end(), 1);
    CHECK(r.stats.modularity >= modularity(g, Partition(singletons), gamma) - 1e-12);
    CHECK(r.stats.modularity >= modularity(g, Partition(std::vector<int>(20, 1)), gamma) - 1e-12);
    CHECK(r.stats.modularity == doctest::Approx(modularity(g, r.partition, gamma)));

    LouvainOptions parallel = opt;
    parallel.workers = 4;
    CHECK(louvain(g, parallel).partition == r.partition);
    CHECK(louvain(g, opt).partition == r.partition);
  }
}

TEST_CASE("Louvain communities are numbered by decreasing size") {
  const auto g = random_graph(30, 0.15, 3);
  const auto sizes = louvain(g, {1.0, 11, 3}).partition.community_sizes();
  CHECK(std::is_sorted(sizes.begin(), sizes.end(), std::greater<>()));
}

TEST_CASE("Louvain finds the exhaustive optimum on small graphs") {
  int hits = 0, trials = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(8, 0.45, 4);
    if (g.edges.empty()) continue;
    ++trials;
    const double best = oracle::best_modularity(oracle::weights(g), 1.0);
    const double q = louvain(g, {1.0, static_cast<std::uint64_t>(trial), 10}).stats.modularity;
    CHECK(q <= best + 1e-12);
    if (q >= best - 1e-9) ++hits;
  }
  CHECK(hits >= 0.9 * trials);
}

TEST_CASE("higher resolution does not produce fewer communities") {
  int low_total = 0, high_total = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(25, 0.25, 3);
    if (g.edges.empty()) continue;
    const auto seed = static_cast<std::uint64_t>(trial);
    low_total += louvain(g, {0.5, seed, 5}).stats.n_communities;
    high_total += louvain(g, {2.0, seed, 5}).stats.n_communities;
  }
  CHECK(high_total >= low_total);
}
