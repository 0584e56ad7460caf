#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jnet {

using Count = std::int64_t;

/// Journals x entities membership. An entity is an editor, an author or a
/// citing article depending on how the incidence was collected.
struct BipartiteIncidence {
  std::vector<std::string> journal_labels;
  std::vector<std::string> entity_labels;
  /// membership[j] holds sorted, distinct entity indices of journal j.
  std::vector<std::vector<std::size_t>> membership;

  std::size_t journal_count() const noexcept { return journal_labels.size(); }
  std::size_t entity_count() const noexcept { return entity_labels.size(); }
};

/// Checks label uniqueness, index ranges and set semantics; empty means valid.
std::vector<std::string> validate(const BipartiteIncidence& inc);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Count weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected one-mode journal network with integer edge weights.
///
/// Builders in this library always store edges with `u < v`, sorted
/// lexicographically. `node_size` carries |N(i)| when the graph comes from a
/// projection (or a Pajek file with loop weights) so Jaccard can be recovered.
struct WeightedGraph {
  std::vector<std::string> node_labels;
  std::vector<Edge> edges;
  std::optional<std::vector<Count>> node_size;

  std::size_t node_count() const noexcept { return node_labels.size(); }
  Count total_weight() const noexcept;
  /// Number of incident edges per node (unweighted).
  std::vector<std::size_t> degrees() const;
  /// Sum of incident edge weights per node.
  std::vector<Count> strengths() const;
  /// Weight of edge {u,v}, 0 when absent. Linear in the edge count.
  Count weight(std::size_t u, std::size_t v) const noexcept;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// Lists every broken WeightedGraph invariant; empty iff the graph is valid.
std::vector<std::string> validate(const WeightedGraph& graph);

/// Sorts edges into canonical (u < v, lexicographic) order. Does not merge.
void canonicalize(WeightedGraph& graph);

/// Symmetric n x n dissimilarity matrix with zero diagonal, entries in [0,1].
struct DissimMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;  // row-major

  DissimMatrix() = default;
  DissimMatrix(std::vector<std::string> labels, std::vector<double> values);

  std::size_t size() const noexcept { return labels.size(); }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return values[i * labels.size() + j];
  }
  double& operator()(std::size_t i, std::size_t j) noexcept {
    return values[i * labels.size() + j];
  }
};

std::vector<std::string> validate(const DissimMatrix& m, double tol = 0.0);

/// Node -> community assignment with ids contiguous in 1..k.
class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless ids are exactly 1..k with each id used.
  explicit Partition(std::vector<int> assignment);

  /// Renumbers arbitrary ids to 1..k preserving their relative order.
  static Partition from_raw(std::span<const int> ids);

  std::size_t size() const noexcept { return assignment_.size(); }
  int community_count() const noexcept { return k_; }
  int operator[](std::size_t node) const noexcept { return assignment_[node]; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  /// Community sizes indexed 0..k-1 (community id minus one).
  std::vector<std::size_t> community_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> assignment_;
  int k_ = 0;
};

struct DcorResult {
  double dcov2 = 0.0;
  double dvar2_a = 0.0;
  double dvar2_b = 0.0;
  double rd = 0.0;
  double sqrt_rd = 0.0;
  double p_value = 1.0;
  std::size_t n_permutations = 0;
  std::uint64_t seed = 0;
  std::size_t exceed_count = 0;
};

struct ContingencyTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Count> counts;  // row-major
  std::vector<Count> row_margins;
  std::vector<Count> col_margins;
  Count total = 0;

  Count operator()(std::size_t r, std::size_t c) const noexcept {
    return counts[r * cols + c];
  }
  /// Builds a table from raw counts, computing margins and total.
  static ContingencyTable from_counts(std::size_t rows, std::size_t cols,
                                      std::vector<Count> counts);
  ContingencyTable transposed() const;
};

struct NetworkStats {
  double density = 0.0;
  double average_degree = 0.0;
  std::size_t isolated_count = 0;
};

struct CommunityStats {
  double modularity = 0.0;
  double resolution = 1.0;
  int n_communities = 0;
  int n_non_isolated_communities = 0;
  double ei_unweighted = 0.0;
  double ei_weighted = 0.0;
};

struct AssocReport {
  double chi2 = 0.0;
  long df = 0;
  double cramers_v = 0.0;
  double rajski_sym = 0.0;
  double rajski_left = 0.0;
  double rajski_right = 0.0;
  double ari = 0.0;
};

/// Label -> index lookup; throws AlignmentError on duplicates.
std::unordered_map<std::string_view, std::size_t> index_labels(
    std::span<const std::string> labels);

/// For each label in `target`, its index in `source`. Throws AlignmentError
/// when the two label sets differ.
std::vector<std::size_t> alignment(std::span<const std::string> source,
                                   std::span<const std::string> target);

/// Reorders nodes of `graph` to follow `labels` (same label set required).
WeightedGraph reorder(const WeightedGraph& graph, std::span<const std::string> labels);

}  // namespace jnet
