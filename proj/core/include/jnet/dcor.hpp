#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "jnet/model.hpp"

namespace jnet {

/// Centering used by the distance covariance estimator. Classical is the
/// V-statistic double centering; Unbiased is U-centering (needs n > 3).
enum class Centering { Classical, Unbiased };

std::string_view to_string(Centering c) noexcept;
Centering parse_centering(std::string_view text);

/// Row-major n x n double-centred matrix:
/// a_kl - mean(row k) - mean(col l) + grand mean. Throws for n < 2.
std::vector<double> double_center(const DissimMatrix& m);

/// U-centred matrix with zero diagonal. Throws for n < 4.
std::vector<double> u_center(const DissimMatrix& m);

struct DcorStats {
  double dcov2 = 0.0;
  double dvar2_a = 0.0;
  double dvar2_b = 0.0;
  double rd = 0.0;
  double sqrt_rd = 0.0;
};

/// Generalized distance correlation between two aligned dissimilarity
/// matrices. `rd` is dcov2 / sqrt(dvar2_a * dvar2_b) clipped to [0,1].
///
/// Throws AlignmentError when labels differ and DomainError when either
/// matrix has zero distance variance.
DcorStats dcor(const DissimMatrix& a, const DissimMatrix& b,
               Centering centering = Centering::Classical);

struct PermTestOptions {
  std::size_t n_permutations = 99999;
  std::uint64_t seed = 0;
  /// 0 selects the hardware concurrency. The result never depends on it.
  unsigned workers = 1;
  Centering centering = Centering::Classical;
};

/// Permutation test of independence. Replicate r shuffles rows and columns
/// of `b` together with the stream (seed, r); the centred matrix is permuted
/// directly, which equals re-centring the permuted raw matrix. The p-value is
/// (1 + #{stat_r >= stat_obs}) / (1 + R).
DcorResult perm_test(const DissimMatrix& a, const DissimMatrix& b,
                     const PermTestOptions& options = {});

/// Statistic used by perm_test for a given permutation of `b`'s centred
/// matrix: sum_kl A_kl * B_{pi(k) pi(l)} scaled by the estimator constant.
double permuted_statistic(std::span<const double> a_centered, std::span<const double> b_centered,
                          std::size_t n, std::span<const std::size_t> perm, Centering centering);

/// Bonferroni decisions: reject[i] iff p[i] < alpha / family_size.
std::vector<bool> bonferroni_gate(std::span<const double> p_values, double alpha,
                                  std::size_t family_size);

}  // namespace jnet
