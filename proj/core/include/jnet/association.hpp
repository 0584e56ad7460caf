#pragma once

#include "jnet/model.hpp"

namespace jnet {

/// Cross-tabulates two partitions of the same node set: counts(u, v) is the
/// number of nodes in community u+1 of `a` and v+1 of `b`.
ContingencyTable contingency(const Partition& a, const Partition& b);

struct ChiSquare {
  double chi2 = 0.0;
  long df = 0;
};

/// Pearson chi-square without continuity correction, df = (r-1)(c-1).
/// A table with a single row or column yields chi2 = 0, df = 0.
ChiSquare chi_square(const ContingencyTable& t);

/// sqrt(chi2 / (total * (min(r,c) - 1))). Throws when min(r,c) < 2.
double cramers_v(const ContingencyTable& t);
/// Same formula from a reported chi-square and table shape.
double cramers_v(double chi2, Count total, std::size_t rows, std::size_t cols);

struct Rajski {
  double sym = 0.0;    // I / H(A,B)
  double left = 0.0;   // I / H(B): rows predicting columns
  double right = 0.0;  // I / H(A): columns predicting rows
};

/// Rajski coherence from empirical entropies (natural log). A zero-entropy
/// denominator gives 1 when both partitions are single-community and throws
/// DomainError otherwise.
Rajski rajski(const ContingencyTable& t);

/// Adjusted Rand index; 0 when the denominator vanishes.
double adjusted_rand(const Partition& a, const Partition& b);
double adjusted_rand(const ContingencyTable& t);

/// All of the above for one pair of partitions.
AssocReport associate(const Partition& a, const Partition& b);

}  // namespace jnet
