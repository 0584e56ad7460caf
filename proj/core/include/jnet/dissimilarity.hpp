#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "jnet/model.hpp"

namespace jnet {

/// Jaccard dissimilarity (|A∪B| - |A∩B|) / |A∪B| of two sorted, duplicate-free
/// index sets. Throws DomainError when both sets are empty.
double jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Jaccard from cardinalities alone: 1 - shared / (size_a + size_b - shared).
double jaccard_from_counts(Count size_a, Count size_b, Count shared);

/// Value assigned to a pair of journals whose entity sets are both empty.
struct EmptyPolicy {
  double value = 1.0;
};

DissimMatrix dissim_from_incidence(const BipartiteIncidence& inc, EmptyPolicy policy = {});

/// Recovers the same matrix from a one-mode graph carrying node sizes.
/// Throws DomainError when node sizes are missing or inconsistent with weights.
DissimMatrix dissim_from_graph(const WeightedGraph& graph, EmptyPolicy policy = {});

// Matrix CSV: the first row is an empty corner cell followed by labels, each
// following row is a label then its values at full round-trip precision.
std::string write_matrix_csv(const DissimMatrix& m);
DissimMatrix read_matrix_csv(std::istream& in, const std::string& source = "<stream>");
DissimMatrix parse_matrix_csv(const std::filesystem::path& path);

}  // namespace jnet
