#include "jnet/dcor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jnet/error.hpp"
#include "jnet/parallel.hpp"
#include "jnet/rng.hpp"

namespace jnet {

std::string_view to_string(Centering c) noexcept {
  return c == Centering::Classical ? "classical" : "unbiased";
}

Centering parse_centering(std::string_view text) {
  if (text == "classical") return Centering::Classical;
  if (text == "unbiased") return Centering::Unbiased;
  throw Error("unknown centering '" + std::string(text) + "' (expected classical or unbiased)");
}

namespace {

struct Sums {
  std::vector<double> row;
  double total = 0.0;
};

// Matrices are symmetric, so row sums double as column sums.
Sums sums(const DissimMatrix& m) {
  const std::size_t n = m.size();
  Sums s{std::vector<double>(n, 0.0), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) r += m(i, j);
    s.row[i] = r;
    s.total += r;
  }
  return s;
}

std::vector<double> center(const DissimMatrix& m, Centering c) {
  return c == Centering::Classical ? double_center(m) : u_center(m);
}

double scale(std::size_t n, Centering c) {
  const double nd = static_cast<double>(n);
  return c == Centering::Classical ? 1.0 / (nd * nd) : 1.0 / (nd * (nd - 3.0));
}

double inner(std::span<const double> a, std::span<const double> b, std::size_t n, Centering c) {
  double s = 0.0;
  for (std::size_t k = 0; k < n * n; ++k) s += a[k] * b[k];
  return s * scale(n, c);
}

void check_aligned(const DissimMatrix& a, const DissimMatrix& b) {
  if (a.size() != b.size()) {
    throw AlignmentError("matrix dimensions differ (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.labels[i] != b.labels[i]) {
      throw AlignmentError("label mismatch at position " + std::to_string(i + 1) + ": '" +
                           a.labels[i] + "' vs '" + b.labels[i] + "'");
    }
  }
}

}  // namespace

std::vector<double> double_center(const DissimMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw DomainError("double centering needs at least 2 nodes");
  const auto s = sums(m);
  const double nd = static_cast<double>(n);
  const double grand = s.total / (nd * nd);
  std::vector<double> out(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      out[k * n + l] = m(k, l) - s.row[k] / nd - s.row[l] / nd + grand;
    }
  }
  return out;
}

std::vector<double> u_center(const DissimMatrix& m) {
  const std::size_t n = m.size();
  if (n < 4) throw DomainError("U-centering needs at least 4 nodes");
  const auto s = sums(m);
  const double nd = static_cast<double>(n);
  std::vector<double> out(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      out[k * n + l] = m(k, l) - s.row[k] / (nd - 2.0) - s.row[l] / (nd - 2.0) +
                       s.total / ((nd - 1.0) * (nd - 2.0));
    }
  }
  return out;
}

DcorStats dcor(const DissimMatrix& a, const DissimMatrix& b, Centering centering) {
  check_aligned(a, b);
  const std::size_t n = a.size();
  const auto ca = center(a, centering);
  const auto cb = center(b, centering);

  DcorStats r;
  r.dcov2 = std::max(0.0, inner(ca, cb, n, centering));
  r.dvar2_a = std::max(0.0, inner(ca, ca, n, centering));
  r.dvar2_b = std::max(0.0, inner(cb, cb, n, centering));
  if (r.dvar2_a <= 0.0 || r.dvar2_b <= 0.0) {
    throw DomainError("distance correlation undefined: a matrix has zero distance variance");
  }
  r.rd = std::clamp(r.dcov2 / std::sqrt(r.dvar2_a * r.dvar2_b), 0.0, 1.0);
  r.sqrt_rd = std::sqrt(r.rd);
  return r;
}

double permuted_statistic(std::span<const double> a_centered, std::span<const double> b_centered,
                          std::size_t n, std::span<const std::size_t> perm, Centering centering) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double* arow = a_centered.data() + k * n;
    const double* brow = b_centered.data() + perm[k] * n;
    double row = 0.0;
    for (std::size_t l = 0; l < n; ++l) row += arow[l] * brow[perm[l]];
    s += row;
  }
  return s * scale(n, centering);
}

DcorResult perm_test(const DissimMatrix& a, const DissimMatrix& b, const PermTestOptions& options) {
  if (options.n_permutations < 1) throw DomainError("need at least one permutation");
  const auto stats = dcor(a, b, options.centering);
  const std::size_t n = a.size();
  const auto ca = center(a, options.centering);
  const auto cb = center(b, options.centering);

  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const double observed = permuted_statistic(ca, cb, n, identity, options.centering);
  // Permutations that tie the observed value in exact arithmetic can land a few
  // ulps below it in floating point; count those as ties.
  const double tie = 1e-12 * std::sqrt(stats.dvar2_a * stats.dvar2_b);

  // One flag per replicate keeps the tally independent of the chunking.
  std::vector<unsigned char> exceeds(options.n_permutations, 0);
  parallel_chunks(options.n_permutations, options.workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> perm(n);
    for (std::size_t r = begin; r < end; ++r) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      rng::Stream stream(options.seed, r);
      stream.shuffle(std::span<std::size_t>(perm));
      exceeds[r] = permuted_statistic(ca, cb, n, perm, options.centering) >= observed - tie;
    }
  });
  const auto count = static_cast<std::size_t>(std::count(exceeds.begin(), exceeds.end(), 1));

  DcorResult out;
  out.dcov2 = stats.dcov2;
  out.dvar2_a = stats.dvar2_a;
  out.dvar2_b = stats.dvar2_b;
  out.rd = stats.rd;
  out.sqrt_rd = stats.sqrt_rd;
  out.n_permutations = options.n_permutations;
  out.seed = options.seed;
  out.exceed_count = count;
  out.p_value = static_cast<double>(1 + count) / static_cast<double>(1 + options.n_permutations);
  return out;
}

std::vector<bool> bonferroni_gate(std::span<const double> p_values, double alpha,
                                  std::size_t family_size) {
  if (family_size < 1) throw DomainError("family size must be >= 1");
  const double threshold = alpha / static_cast<double>(family_size);
  std::vector<bool> reject;
  reject.reserve(p_values.size());
  for (double p : p_values) reject.push_back(p < threshold);
  return reject;
}

}  // namespace jnet
