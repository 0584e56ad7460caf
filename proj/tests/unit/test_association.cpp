#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "../support/oracles.hpp"
#include "jnet/association.hpp"
#include "jnet/error.hpp"

using namespace jnet;

namespace {

Partition relabel(const Partition& p, std::uint64_t salt) {
  std::vector<int> ids(static_cast<std::size_t>(p.community_count()));
  std::iota(ids.begin(), ids.end(), 1);
  std::mt19937_64 g(salt);
  std::shuffle(ids.begin(), ids.end(), g);
  std::vector<int> out;
  for (int c : p.assignment()) out.push_back(ids[static_cast<std::size_t>(c - 1)]);
  return Partition(out);
}

}  // namespace

TEST_CASE("contingency examples") {
  const auto t = contingency(Partition({1, 1, 2}), Partition({1, 1, 2}));
  CHECK(t.counts == std::vector<Count>{2, 0, 0, 1});
  const auto crossed = contingency(Partition({1, 1, 2, 2}), Partition({1, 2, 1, 2}));
  CHECK(crossed.counts == std::vector<Count>{1, 1, 1, 1});
  CHECK_THROWS_AS(contingency(Partition({1, 2}), Partition({1, 1, 2})), AlignmentError);
}

TEST_CASE("contingency matches a direct tally") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_partition(30, 5);
    const auto b = oracle::random_partition(30, 4);
    const auto pa = Partition::from_raw(a);
    const auto pb = Partition::from_raw(b);
    const auto t = contingency(pa, pb);
    for (std::size_t r = 0; r < t.rows; ++r) {
      for (std::size_t c = 0; c < t.cols; ++c) {
        Count n = 0;
        for (std::size_t i = 0; i < 30; ++i) n += (pa[i] == static_cast<int>(r + 1) && pb[i] == static_cast<int>(c + 1));
        CHECK(t(r, c) == n);
      }
    }
    CHECK(t.total == 30);
  }
}

TEST_CASE("chi-square") {
  const auto prop = ContingencyTable::from_counts(2, 2, {2, 4, 3, 6});
  CHECK(chi_square(prop).chi2 == doctest::Approx(0.0));
  CHECK(chi_square(prop).df == 1);
  const auto single = ContingencyTable::from_counts(1, 3, {1, 2, 3});
  CHECK(chi_square(single).chi2 == 0.0);
  CHECK(chi_square(single).df == 0);
  // 2x2 textbook case: [[10, 0], [0, 10]] -> chi2 = n = 20
  CHECK(chi_square(ContingencyTable::from_counts(2, 2, {10, 0, 0, 10})).chi2 == doctest::Approx(20.0));
}

TEST_CASE("df follows community counts including singletons") {
  // 10 and 3 communities over 79 journals -> 18 degrees of freedom
  std::vector<int> a(79), b(79);
  for (int i = 0; i < 79; ++i) {
    a[i] = i < 10 ? i + 1 : 1 + i % 6;
    b[i] = 1 + i % 3;
  }
  CHECK(chi_square(contingency(Partition(a), Partition(b))).df == 18);
}

TEST_CASE("Cramer's V") {
  CHECK(cramers_v(contingency(Partition({1, 1, 2, 2, 3, 3}), Partition({1, 1, 2, 2, 3, 3}))) ==
        doctest::Approx(1.0));
  CHECK(cramers_v(ContingencyTable::from_counts(2, 2, {2, 4, 3, 6})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(cramers_v(ContingencyTable::from_counts(1, 2, {1, 1})), DomainError);
  // V from a published chi-square: sqrt(68.59 / (79 * 2))
  CHECK(std::abs(cramers_v(68.59, 79, 10, 3) - 0.659) <= 0.001);
  CHECK(cramers_v(68.59, 79, 10, 3) == cramers_v(68.59, 79, 3, 10));
  CHECK_THROWS_AS(cramers_v(1.0, 0, 2, 2), DomainError);
}

TEST_CASE("Rajski coherence") {
  const auto same = rajski(contingency(Partition({1, 1, 2, 3, 3}), Partition({1, 1, 2, 3, 3})));
  CHECK(same.sym == doctest::Approx(1.0));
  CHECK(same.left == doctest::Approx(1.0));
  CHECK(same.right == doctest::Approx(1.0));

  const auto indep = rajski(ContingencyTable::from_counts(2, 2, {3, 3, 3, 3}));
  CHECK(indep.sym == doctest::Approx(0.0));
  CHECK(indep.left == doctest::Approx(0.0));
  CHECK(indep.right == doctest::Approx(0.0));

  const auto trivial = rajski(ContingencyTable::from_counts(1, 1, {5}));
  CHECK(trivial.sym == 1.0);
  CHECK_THROWS_AS(rajski(ContingencyTable::from_counts(2, 1, {2, 3})), DomainError);
}

TEST_CASE("Rajski left and right are the asymmetric predictions") {
  // rows refine columns: rows fully predict columns, so I = H(cols)
  const auto t = contingency(Partition({1, 2, 3, 4}), Partition({1, 1, 2, 2}));
  const auto r = rajski(t);
  CHECK(r.left == doctest::Approx(1.0));
  CHECK(r.right == doctest::Approx(0.5));
  const auto tr = rajski(t.transposed());
  CHECK(tr.left == doctest::Approx(r.right));
  CHECK(tr.right == doctest::Approx(r.left));
  CHECK(tr.sym == doctest::Approx(r.sym));
}

TEST_CASE("adjusted Rand index") {
  const Partition p({1, 1, 2, 2, 3});
  CHECK(adjusted_rand(p, p) == doctest::Approx(1.0));
  CHECK(adjusted_rand(Partition({1, 1, 1}), Partition({1, 1, 1})) == 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_partition(12, oracle::uniform(1, 5));
    const auto b = oracle::random_partition(12, oracle::uniform(1, 5));
    const double got = adjusted_rand(Partition::from_raw(a), Partition::from_raw(b));
    CHECK(std::abs(got - oracle::ari_pairs(a, b)) < 1e-12);
  }
}

TEST_CASE("index properties on random partitions") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform(6, 40);
    const auto a = Partition::from_raw(oracle::random_partition(n, oracle::uniform(2, 6)));
    const auto b = Partition::from_raw(oracle::random_partition(n, oracle::uniform(2, 6)));
    if (a.community_count() < 2 || b.community_count() < 2) continue;
    const auto r = associate(a, b);
    CHECK(r.cramers_v >= 0.0);
    CHECK(r.cramers_v <= 1.0);
    CHECK(r.rajski_sym <= r.rajski_left);
    CHECK(r.rajski_sym <= r.rajski_right);
    CHECK(r.rajski_sym >= 0.0);
    CHECK(r.rajski_left <= 1.0);
    CHECK(r.ari <= 1.0);
    CHECK(r.ari >= -1.0);
    CHECK(r.df == (a.community_count() - 1) * (b.community_count() - 1));

    const auto ra = relabel(a, static_cast<std::uint64_t>(trial));
    const auto rb = relabel(b, static_cast<std::uint64_t>(trial) + 1000);
    const auto s = associate(ra, rb);
    CHECK(s.ari == doctest::Approx(r.ari).epsilon(1e-12));
    CHECK(s.rajski_sym == doctest::Approx(r.rajski_sym).epsilon(1e-12));
    CHECK(s.rajski_left == doctest::Approx(r.rajski_left).epsilon(1e-12));
    CHECK(s.rajski_right == doctest::Approx(r.rajski_right).epsilon(1e-12));
    CHECK(s.chi2 == doctest::Approx(r.chi2).epsilon(1e-12));
    CHECK(s.cramers_v == doctest::Approx(r.cramers_v).epsilon(1e-12));
  }
}
