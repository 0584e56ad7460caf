#include <doctest.h>

#include <sstream>

#include "../support/oracles.hpp"
#include "jnet/dissimilarity.hpp"
#include "jnet/error.hpp"
#include "jnet/ingest.hpp"

using namespace jnet;

namespace {
using Set = std::vector<std::size_t>;
}

TEST_CASE("jaccard examples") {
  CHECK(jaccard(Set{1, 2, 3}, Set{1, 2, 3}) == 0.0);
  CHECK(jaccard(Set{1, 2}, Set{3, 4, 5}) == 1.0);
  CHECK(jaccard(Set{1, 2}, Set{2, 3, 4}) == 0.75);
  CHECK(jaccard(Set{}, Set{4}) == 1.0);
  CHECK_THROWS_AS(jaccard(Set{}, Set{}), DomainError);
}

TEST_CASE("dissimilarity from incidence") {
  BipartiteIncidence inc{{"J1", "J2", "J3"}, {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {3}}};
  const auto d = dissim_from_incidence(inc);
  CHECK(d(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(d(0, 2) == 1.0);
  CHECK(d(1, 0) == d(0, 1));
  CHECK(d(2, 2) == 0.0);

  BipartiteIncidence same{{"J1", "J2", "J3"}, {"a", "b"}, {{0, 1}, {0, 1}, {0, 1}}};
  const auto z = dissim_from_incidence(same);
  for (double x : z.values) CHECK(x == 0.0);
}

TEST_CASE("empty pairs resolve through the policy") {
  BipartiteIncidence inc{{"J1", "J2", "J3"}, {"a"}, {{}, {}, {0}}};
  CHECK(dissim_from_incidence(inc)(0, 1) == 1.0);
  CHECK(dissim_from_incidence(inc, {0.25})(0, 1) == 0.25);
  CHECK(dissim_from_incidence(inc)(0, 2) == 1.0);
}

TEST_CASE("dissimilarity matches element-wise brute force on random incidences") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto sets = oracle::random_sets(8, 20, 0.25);
    const auto d = dissim_from_incidence(oracle::to_incidence(sets, 20));
    CHECK(validate(d).empty());
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        if (i == j) continue;
        const double expected = (sets[i].empty() && sets[j].empty()) ? 1.0 : oracle::jaccard(sets[i], sets[j]);
        CHECK(d(i, j) == doctest::Approx(expected).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("dissimilarity from graph node sizes") {
  WeightedGraph g;
  g.node_labels = {"a", "b", "c"};
  g.edges = {{0, 1, 1}};
  g.node_size = std::vector<Count>{2, 2, 3};
  const auto d = dissim_from_graph(g);
  CHECK(d(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(d(0, 2) == 1.0);
  CHECK(d(1, 2) == 1.0);

  g.node_size.reset();
  try {
    dissim_from_graph(g);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "sizes required for Jaccard recovery");
  }
  g.node_size = std::vector<Count>{1, 0, 3};
  CHECK_THROWS_AS(dissim_from_graph(g), DomainError);
}

TEST_CASE("graph route equals incidence route") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto sets = oracle::random_sets(9, 14, 0.3);
    const auto inc = oracle::to_incidence(sets, 14);
    const auto a = dissim_from_incidence(inc);
    const auto b = dissim_from_graph(project_interlocking(inc));
    CHECK(a.labels == b.labels);
    for (std::size_t k = 0; k < a.values.size(); ++k) CHECK(a.values[k] == b.values[k]);
  }
}

TEST_CASE("Jaccard distance satisfies the triangle inequality") {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = oracle::random_sets(3, 8, 0.4);
    if (s[0].empty() || s[1].empty() || s[2].empty()) continue;
    const double ab = oracle::jaccard(s[0], s[1]);
    const double bc = oracle::jaccard(s[1], s[2]);
    const double ac = oracle::jaccard(s[0], s[2]);
    Set a(s[0].begin(), s[0].end()), b(s[1].begin(), s[1].end()), c(s[2].begin(), s[2].end());
    CHECK(jaccard(a, c) <= jaccard(a, b) + jaccard(b, c) + 1e-15);
    CHECK(ac <= ab + bc + 1e-15);
  }
}

TEST_CASE("adding a shared entity never increases dissimilarity") {
  for (int trial = 0; trial < 500; ++trial) {
    auto s = oracle::random_sets(2, 10, 0.4);
    if (s[0].empty() && s[1].empty()) continue;
    Set a(s[0].begin(), s[0].end()), b(s[1].begin(), s[1].end());
    const double before = jaccard(a, b);
    s[0].insert(99);
    s[1].insert(99);
    Set a2(s[0].begin(), s[0].end()), b2(s[1].begin(), s[1].end());
    CHECK(jaccard(a2, b2) <= before);
  }
}

TEST_CASE("matrix CSV round-trips at full precision") {
  const auto m = oracle::to_matrix(oracle::random_dissim(6));
  std::istringstream in(write_matrix_csv(m));
  const auto back = read_matrix_csv(in);
  CHECK(back.labels == m.labels);
  CHECK(back.values == m.values);
}

TEST_CASE("matrix CSV rejects malformed input") {
  std::istringstream bad_label(",a,b\na,0,0.5\nc,0.5,0\n");
  CHECK_THROWS_AS(read_matrix_csv(bad_label), ParseError);
  std::istringstream asym(",a,b\na,0,0.5\nb,0.4,0\n");
  CHECK_THROWS_AS(read_matrix_csv(asym), ParseError);
  std::istringstream short_rows(",a,b\na,0,0.5\n");
  CHECK_THROWS_AS(read_matrix_csv(short_rows), ParseError);
}
