#pragma once

#include <cstdint>

#include "jnet/model.hpp"

namespace jnet {

/// Density, average degree and isolate count of an unweighted view of the
/// graph. Throws DomainError for fewer than 2 nodes.
NetworkStats network_stats(const WeightedGraph& graph);

/// Weighted modularity with multiplicative resolution:
///   Q = sum_c [ w_c / W - gamma * (s_c / 2W)^2 ]
/// where W is the total edge weight, w_c the weight inside c and s_c the
/// summed strength of c. Throws DomainError when the graph has no edges.
double modularity(const WeightedGraph& graph, const Partition& partition, double resolution = 1.0);

/// (external - internal) / (external + internal), counting edges or summing
/// weights. -1 when every edge is internal. Throws when there are no edges.
double ei_index(const WeightedGraph& graph, const Partition& partition, bool weighted);

struct LouvainOptions {
  double resolution = 1.0;
  std::uint64_t seed = 0;
  unsigned restarts = 10;
  /// Restarts run concurrently on this many threads; 0 = hardware.
  unsigned workers = 1;
};

struct LouvainResult {
  Partition partition;
  CommunityStats stats;
};

/// Multi-level Louvain modularity maximization, best of `restarts` runs.
///
/// Each run visits nodes in an order shuffled by its own seeded stream and
/// moves a node only for a strictly positive gain; equal gains go to the
/// lowest community id. Communities are numbered by decreasing size (ties by
/// smallest member), so isolated nodes end up as the trailing singletons.
/// An edgeless graph yields all singletons and a DomainError for Q.
LouvainResult louvain(const WeightedGraph& graph, const LouvainOptions& options = {});

/// Number of communities holding at least one node of nonzero degree.
int non_isolated_communities(const WeightedGraph& graph, const Partition& partition);

}  // namespace jnet
