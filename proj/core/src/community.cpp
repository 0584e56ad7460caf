#include "jnet/community.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "jnet/error.hpp"
#include "jnet/parallel.hpp"
#include "jnet/rng.hpp"

namespace jnet {

namespace {

void check_cover(const WeightedGraph& graph, const Partition& partition) {
  if (partition.size() != graph.node_count()) {
    throw AlignmentError("partition length mismatch: " + std::to_string(partition.size()) +
                         " ids for " + std::to_string(graph.node_count()) + " nodes");
  }
}

// Graph at one Louvain level. Loops hold the weight already inside a node.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;  // no loops
  std::vector<double> loop;
  std::vector<double> degree;  // loops count twice
  double m2 = 0.0;

  std::size_t size() const noexcept { return adj.size(); }
};

LevelGraph from_graph(const WeightedGraph& g) {
  LevelGraph lg;
  const auto n = g.node_count();
  lg.adj.resize(n);
  lg.loop.assign(n, 0.0);
  lg.degree.assign(n, 0.0);
  for (const auto& e : g.edges) {
    const auto w = static_cast<double>(e.weight);
    lg.adj[e.u].emplace_back(e.v, w);
    lg.adj[e.v].emplace_back(e.u, w);
    lg.degree[e.u] += w;
    lg.degree[e.v] += w;
  }
  lg.m2 = std::accumulate(lg.degree.begin(), lg.degree.end(), 0.0);
  return lg;
}

/// Collapses each community of `comm` (ids 0..k-1) to one node.
LevelGraph aggregate(const LevelGraph& g, const std::vector<std::size_t>& comm, std::size_t k) {
  LevelGraph out;
  out.adj.resize(k);
  out.loop.assign(k, 0.0);
  out.degree.assign(k, 0.0);
  std::vector<double> acc(k, 0.0);
  std::vector<std::size_t> touched;
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < g.size(); ++i) members[comm[i]].push_back(i);

  for (std::size_t c = 0; c < k; ++c) {
    touched.clear();
    for (auto i : members[c]) {
      out.loop[c] += g.loop[i];
      out.degree[c] += g.degree[i];
      for (const auto& [j, w] : g.adj[i]) {
        const auto d = comm[j];
        if (d == c) {
          out.loop[c] += w / 2.0;  // each internal edge is seen from both ends
        } else {
          if (acc[d] == 0.0) touched.push_back(d);
          acc[d] += w;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto d : touched) {
      out.adj[c].emplace_back(d, acc[d]);
      acc[d] = 0.0;
    }
  }
  out.m2 = g.m2;
  return out;
}

/// Local moving phase. Returns true when any node changed community.
bool move_nodes(const LevelGraph& g, double gamma, rng::Stream& stream,
                std::vector<std::size_t>& comm) {
  const auto n = g.size();
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), std::size_t{0});
  std::vector<double> tot(g.degree);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  stream.shuffle(std::span<std::size_t>(order));

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> seen;
  constexpr double eps = 1e-12;
  bool any = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto i : order) {
      const auto own = comm[i];
      const double ki = g.degree[i];

      seen.clear();
      for (const auto& [j, w] : g.adj[i]) {
        const auto c = comm[j];
        if (link[c] == 0.0) seen.push_back(c);
        link[c] += w;
      }
      tot[own] -= ki;

      auto gain = [&](std::size_t c) { return link[c] - gamma * tot[c] * ki / g.m2; };
      std::size_t best = own;
      double best_gain = gain(own);
      std::sort(seen.begin(), seen.end());
      for (auto c : seen) {
        if (c == own) continue;
        const double gc = gain(c);
        if (gc > best_gain + eps) {
          best = c;
          best_gain = gc;
        } else if (best != own && gc >= best_gain - eps && c < best) {
          best = c;
        }
      }
      tot[best] += ki;
      for (auto c : seen) link[c] = 0.0;
      link[own] = 0.0;
      if (best != own) {
        comm[i] = best;
        moved = true;
        any = true;
      }
    }
  }
  return any;
}

/// Renumbers arbitrary community labels to 0..k-1 in first-seen order.
std::size_t compact(std::vector<std::size_t>& comm) {
  std::vector<std::size_t> map(comm.size(), SIZE_MAX);
  std::size_t k = 0;
  for (auto& c : comm) {
    if (map[c] == SIZE_MAX) map[c] = k++;
    c = map[c];
  }
  return k;
}

std::vector<std::size_t> run_once(const WeightedGraph& graph, double gamma, rng::Stream stream) {
  const auto n = graph.node_count();
  std::vector<std::size_t> node_comm(n);
  std::iota(node_comm.begin(), node_comm.end(), std::size_t{0});
  if (graph.edges.empty()) return node_comm;

  LevelGraph level = from_graph(graph);
  std::vector<std::size_t> comm;
  while (true) {
    if (!move_nodes(level, gamma, stream, comm)) break;
    const auto k = compact(comm);
    for (auto& c : node_comm) c = comm[c];
    if (k == level.size()) break;
    level = aggregate(level, comm, k);
  }
  return node_comm;
}

Partition canonical(const std::vector<std::size_t>& raw) {
  const auto n = raw.size();
  std::size_t k = 0;
  for (auto c : raw) k = std::max(k, c + 1);
  std::vector<std::size_t> size(k, 0);
  std::vector<std::size_t> first(k, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    ++size[raw[i]];
    first[raw[i]] = std::min(first[raw[i]], i);
  }
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < k; ++c) {
    if (size[c] > 0) order.push_back(c);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (size[a] != size[b]) return size[a] > size[b];
    return first[a] < first[b];
  });
  std::vector<int> id(k, 0);
  for (std::size_t r = 0; r < order.size(); ++r) id[order[r]] = static_cast<int>(r + 1);
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = id[raw[i]];
  return Partition(std::move(out));
}

}  // namespace

NetworkStats network_stats(const WeightedGraph& graph) {
  const auto n = graph.node_count();
  if (n < 2) throw DomainError("network statistics need at least 2 nodes");
  NetworkStats s;
  s.average_degree = 2.0 * static_cast<double>(graph.edges.size()) / static_cast<double>(n);
  s.density = s.average_degree / static_cast<double>(n - 1);
  const auto deg = graph.degrees();
  s.isolated_count = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 0));
  return s;
}

double modularity(const WeightedGraph& graph, const Partition& partition, double resolution) {
  check_cover(graph, partition);
  if (!(resolution > 0.0)) throw DomainError("resolution must be > 0");
  const double W = static_cast<double>(graph.total_weight());
  if (graph.edges.empty() || W <= 0.0) throw DomainError("modularity undefined: graph has no edges");

  const auto k = static_cast<std::size_t>(partition.community_count());
  std::vector<double> inside(k, 0.0);
  std::vector<double> strength(k, 0.0);
  for (const auto& e : graph.edges) {
    const auto cu = static_cast<std::size_t>(partition[e.u] - 1);
    const auto cv = static_cast<std::size_t>(partition[e.v] - 1);
    const auto w = static_cast<double>(e.weight);
    if (cu == cv) inside[cu] += w;
    strength[cu] += w;
    strength[cv] += w;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double frac = strength[c] / (2.0 * W);
    q += inside[c] / W - resolution * frac * frac;
  }
  return q;
}

double ei_index(const WeightedGraph& graph, const Partition& partition, bool weighted) {
  check_cover(graph, partition);
  if (graph.edges.empty()) throw DomainError("E-I index undefined: graph has no edges");
  double internal = 0.0;
  double external = 0.0;
  for (const auto& e : graph.edges) {
    const double w = weighted ? static_cast<double>(e.weight) : 1.0;
    (partition[e.u] == partition[e.v] ? internal : external) += w;
  }
  return (external - internal) / (external + internal);
}

int non_isolated_communities(const WeightedGraph& graph, const Partition& partition) {
  check_cover(graph, partition);
  const auto deg = graph.degrees();
  std::vector<bool> hit(static_cast<std::size_t>(partition.community_count()), false);
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] > 0) hit[static_cast<std::size_t>(partition[i] - 1)] = true;
  }
  return static_cast<int>(std::count(hit.begin(), hit.end(), true));
}

LouvainResult louvain(const WeightedGraph& graph, const LouvainOptions& options) {
  if (!(options.resolution > 0.0)) throw DomainError("resolution must be > 0");
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  if (auto problems = validate(graph); !problems.empty()) {
    throw DomainError("invalid graph: " + problems.front());
  }

  std::vector<std::vector<std::size_t>> runs(options.restarts);
  parallel_chunks(options.restarts, options.workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      runs[r] = run_once(graph, options.resolution, rng::Stream(options.seed, r));
    }
  });

  LouvainResult result;
  if (graph.edges.empty()) {
    result.partition = canonical(runs.front());
    // Q is undefined without edges; let the caller see that.
    modularity(graph, result.partition, options.resolution);
  }

  double best_q = 0.0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    auto p = canonical(runs[r]);
    const double q = modularity(graph, p, options.resolution);
    if (r == 0 || q > best_q) {
      best_q = q;
      result.partition = std::move(p);
    }
  }

  auto& s = result.stats;
  s.modularity = best_q;
  s.resolution = options.resolution;
  s.n_communities = result.partition.community_count();
  s.n_non_isolated_communities = non_isolated_communities(graph, result.partition);
  s.ei_unweighted = ei_index(graph, result.partition, false);
  s.ei_weighted = ei_index(graph, result.partition, true);
  return result;
}

}  // namespace jnet
