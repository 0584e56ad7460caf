#include "jnet/association.hpp"

#include <algorithm>
#include <cmath>

#include "jnet/error.hpp"

namespace jnet {

namespace {

double pairs(Count x) { return static_cast<double>(x) * static_cast<double>(x - 1) / 2.0; }

double entropy_term(Count x, double total) {
  if (x <= 0) return 0.0;
  const double p = static_cast<double>(x) / total;
  return -p * std::log(p);
}

}  // namespace

ContingencyTable contingency(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw AlignmentError("partition length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  const auto rows = static_cast<std::size_t>(a.community_count());
  const auto cols = static_cast<std::size_t>(b.community_count());
  std::vector<Count> counts(rows * cols, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++counts[static_cast<std::size_t>(a[i] - 1) * cols + static_cast<std::size_t>(b[i] - 1)];
  }
  return ContingencyTable::from_counts(rows, cols, std::move(counts));
}

ChiSquare chi_square(const ContingencyTable& t) {
  if (t.total <= 0) throw DomainError("chi-square needs a non-empty table");
  if (t.rows < 2 || t.cols < 2) return {0.0, 0};
  const double n = static_cast<double>(t.total);
  double chi2 = 0.0;
  for (std::size_t r = 0; r < t.rows; ++r) {
    for (std::size_t c = 0; c < t.cols; ++c) {
      const double expected =
          static_cast<double>(t.row_margins[r]) * static_cast<double>(t.col_margins[c]) / n;
      if (expected <= 0.0) continue;
      const double diff = static_cast<double>(t(r, c)) - expected;
      chi2 += diff * diff / expected;
    }
  }
  return {chi2, static_cast<long>((t.rows - 1) * (t.cols - 1))};
}

double cramers_v(double chi2, Count total, std::size_t rows, std::size_t cols) {
  const auto m = std::min(rows, cols);
  if (m < 2) throw DomainError("Cramer's V undefined when a partition has a single community");
  if (total <= 0) throw DomainError("Cramer's V needs a non-empty table");
  const double v = std::sqrt(chi2 / (static_cast<double>(total) * static_cast<double>(m - 1)));
  return std::min(v, 1.0);
}

double cramers_v(const ContingencyTable& t) {
  return cramers_v(chi_square(t).chi2, t.total, t.rows, t.cols);
}

Rajski rajski(const ContingencyTable& t) {
  if (t.total <= 0) throw DomainError("Rajski coherence needs a non-empty table");
  const double n = static_cast<double>(t.total);
  double ha = 0.0;
  double hb = 0.0;
  double hab = 0.0;
  for (auto x : t.row_margins) ha += entropy_term(x, n);
  for (auto x : t.col_margins) hb += entropy_term(x, n);
  for (auto x : t.counts) hab += entropy_term(x, n);
  hab = std::max({hab, ha, hb});  // H(A,B) >= max(H(A), H(B)); absorbs rounding
  const double mi = std::max(0.0, ha + hb - hab);

  const bool both_trivial = t.rows == 1 && t.cols == 1;
  auto ratio = [&](double denom, const char* which) {
    if (denom > 0.0) return std::clamp(mi / denom, 0.0, 1.0);
    if (both_trivial) return 1.0;
    throw DomainError(std::string("Rajski ") + which + " undefined: zero entropy denominator");
  };
  Rajski r;
  r.sym = ratio(hab, "symmetric");
  r.left = ratio(hb, "left");
  r.right = ratio(ha, "right");
  return r;
}

double adjusted_rand(const ContingencyTable& t) {
  double index = 0.0;
  for (auto x : t.counts) index += pairs(x);
  double sa = 0.0;
  double sb = 0.0;
  for (auto x : t.row_margins) sa += pairs(x);
  for (auto x : t.col_margins) sb += pairs(x);
  const double all = pairs(t.total);
  if (all <= 0.0) return 0.0;
  const double expected = sa * sb / all;
  const double denom = 0.5 * (sa + sb) - expected;
  if (denom == 0.0) return 0.0;
  return (index - expected) / denom;
}

double adjusted_rand(const Partition& a, const Partition& b) {
  return adjusted_rand(contingency(a, b));
}

AssocReport associate(const Partition& a, const Partition& b) {
  const auto t = contingency(a, b);
  AssocReport r;
  const auto chi = chi_square(t);
  r.chi2 = chi.chi2;
  r.df = chi.df;
  r.cramers_v = cramers_v(t);
  const auto rj = rajski(t);
  r.rajski_sym = rj.sym;
  r.rajski_left = rj.left;
  r.rajski_right = rj.right;
  r.ari = adjusted_rand(t);
  return r;
}

}  // namespace jnet
