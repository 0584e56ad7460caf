#include <doctest.h>

#include "jnet/error.hpp"
#include "jnet/model.hpp"

using namespace jnet;

TEST_CASE("validate reports a self-loop") {
  WeightedGraph g;
  g.node_labels = {"a", "b", "c"};
  g.edges = {{1, 1, 2}};
  const auto v = validate(g);
  REQUIRE(v.size() == 1);
  CHECK(v.front() == "self-loop at 1");
}

TEST_CASE("validate accepts the empty graph and a minimal graph") {
  CHECK(validate(WeightedGraph{}).empty());
  WeightedGraph g;
  g.node_labels = {"a", "b"};
  g.edges = {{0, 1, 1}};
  CHECK(validate(g).empty());
}

TEST_CASE("validate names duplicate edges, bad weights and duplicate labels") {
  WeightedGraph g;
  g.node_labels = {"a", "b", "a"};
  g.edges = {{0, 1, 1}, {1, 0, 3}, {1, 2, 0}, {0, 7, 1}};
  const auto v = validate(g);
  CHECK(v.size() == 4);
}

TEST_CASE("partition ids must be contiguous") {
  CHECK_NOTHROW(Partition({1, 2, 2, 3}));
  CHECK_THROWS_AS(Partition({1, 3}), DomainError);
  CHECK_THROWS_AS(Partition({0, 1}), DomainError);
  const auto p = Partition::from_raw(std::vector<int>{7, 3, 7, 10});
  CHECK(p.assignment() == std::vector<int>{2, 1, 2, 3});
  CHECK(p.community_count() == 3);
  CHECK(p.community_sizes() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("contingency margins and transpose") {
  const auto t = ContingencyTable::from_counts(2, 3, {1, 0, 2, 3, 4, 0});
  CHECK(t.row_margins == std::vector<Count>{3, 7});
  CHECK(t.col_margins == std::vector<Count>{4, 4, 2});
  CHECK(t.total == 10);
  const auto tt = t.transposed();
  CHECK(tt.rows == 3);
  CHECK(tt(2, 0) == 2);
  CHECK(tt.row_margins == t.col_margins);
}

TEST_CASE("alignment by label and hard failure on mismatch") {
  const std::vector<std::string> a{"x", "y", "z"};
  const std::vector<std::string> b{"z", "x", "y"};
  CHECK(alignment(a, b) == std::vector<std::size_t>{2, 0, 1});
  const std::vector<std::string> c{"x", "y", "w"};
  CHECK_THROWS_AS(alignment(a, c), AlignmentError);
  const std::vector<std::string> d{"x", "y"};
  CHECK_THROWS_AS(alignment(a, d), AlignmentError);
}

TEST_CASE("reorder permutes edges and node sizes consistently") {
  WeightedGraph g;
  g.node_labels = {"a", "b", "c"};
  g.edges = {{0, 1, 2}, {1, 2, 5}};
  g.node_size = std::vector<Count>{3, 6, 7};
  const std::vector<std::string> order{"c", "a", "b"};
  const auto r = reorder(g, order);
  CHECK(r.node_labels == order);
  CHECK(r.weight(1, 2) == 2);
  CHECK(r.weight(0, 2) == 5);
  CHECK(*r.node_size == std::vector<Count>{7, 3, 6});
  CHECK(validate(r).empty());
}

TEST_CASE("dissimilarity matrix validation") {
  DissimMatrix m({"a", "b"}, {0.0, 0.4, 0.4, 0.0});
  CHECK(validate(m).empty());
  m(0, 1) = 0.5;
  CHECK(validate(m).size() == 1);
  m(1, 0) = 0.5;
  m(0, 0) = 0.1;
  CHECK(validate(m).size() == 1);
  CHECK_THROWS_AS(DissimMatrix({"a"}, {0.0, 1.0}), DomainError);
}
