#include "jnet/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "jnet/error.hpp"

namespace jnet {

namespace {

template <typename Labels>
void check_unique(const Labels& labels, const char* what, std::vector<std::string>& out) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) out.push_back(std::string("duplicate ") + what + " label '" + l + "'");
  }
}

}  // namespace

std::vector<std::string> validate(const BipartiteIncidence& inc) {
  std::vector<std::string> out;
  check_unique(inc.journal_labels, "journal", out);
  check_unique(inc.entity_labels, "entity", out);
  if (inc.membership.size() != inc.journal_labels.size()) {
    out.push_back("membership has " + std::to_string(inc.membership.size()) +
                  " sets for " + std::to_string(inc.journal_labels.size()) + " journals");
  }
  for (std::size_t j = 0; j < inc.membership.size(); ++j) {
    const auto& set = inc.membership[j];
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (set[k] >= inc.entity_labels.size()) {
        out.push_back("journal " + std::to_string(j) + ": entity index " +
                      std::to_string(set[k]) + " out of range");
      }
      if (k > 0 && set[k] <= set[k - 1]) {
        out.push_back("journal " + std::to_string(j) + ": membership not sorted or has duplicates");
      }
    }
  }
  return out;
}

Count WeightedGraph::total_weight() const noexcept {
  Count w = 0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

std::vector<std::size_t> WeightedGraph::degrees() const {
  std::vector<std::size_t> deg(node_count(), 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<Count> WeightedGraph::strengths() const {
  std::vector<Count> s(node_count(), 0);
  for (const auto& e : edges) {
    s[e.u] += e.weight;
    s[e.v] += e.weight;
  }
  return s;
}

Count WeightedGraph::weight(std::size_t u, std::size_t v) const noexcept {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.weight;
  }
  return 0;
}

std::vector<std::string> validate(const WeightedGraph& graph) {
  std::vector<std::string> out;
  const std::size_t n = graph.node_count();
  check_unique(graph.node_labels, "node", out);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : graph.edges) {
    if (e.u >= n || e.v >= n) {
      out.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") references a node out of range");
      continue;
    }
    if (e.u == e.v) {
      out.push_back("self-loop at " + std::to_string(e.u));
      continue;
    }
    if (e.weight < 1) {
      out.push_back("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") has non-positive weight " + std::to_string(e.weight));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      out.push_back("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  if (graph.node_size) {
    if (graph.node_size->size() != n) {
      out.push_back("node_size has " + std::to_string(graph.node_size->size()) +
                    " entries for " + std::to_string(n) + " nodes");
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if ((*graph.node_size)[i] < 0) out.push_back("negative node_size at " + std::to_string(i));
      }
    }
  }
  return out;
}

void canonicalize(WeightedGraph& graph) {
  for (auto& e : graph.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
}

DissimMatrix::DissimMatrix(std::vector<std::string> l, std::vector<double> v)
    : labels(std::move(l)), values(std::move(v)) {
  if (values.size() != labels.size() * labels.size()) {
    throw DomainError("dissimilarity matrix: " + std::to_string(values.size()) +
                      " values for " + std::to_string(labels.size()) + " labels");
  }
}

std::vector<std::string> validate(const DissimMatrix& m, double tol) {
  std::vector<std::string> out;
  check_unique(m.labels, "matrix", out);
  const std::size_t n = m.size();
  if (m.values.size() != n * n) {
    out.push_back("value count does not match dimension");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) out.push_back("nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const double x = m(i, j);
      if (!(x >= -tol && x <= 1.0 + tol)) {
        out.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0,1]");
      }
      if (j > i && std::abs(x - m(j, i)) > tol) {
        out.push_back("asymmetric entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return out;
}

Partition::Partition(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  int k = 0;
  for (int c : assignment_) {
    if (c < 1) throw DomainError("partition: community id " + std::to_string(c) + " < 1");
    k = std::max(k, c);
  }
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (int c : assignment_) used[static_cast<std::size_t>(c - 1)] = true;
  for (int c = 0; c < k; ++c) {
    if (!used[static_cast<std::size_t>(c)]) {
      throw DomainError("partition: community id " + std::to_string(c + 1) + " is unused");
    }
  }
  k_ = k;
}

Partition Partition::from_raw(std::span<const int> ids) {
  std::map<int, int> renumber;
  for (int c : ids) renumber.emplace(c, 0);
  int next = 1;
  for (auto& [raw, id] : renumber) id = next++;
  std::vector<int> out;
  out.reserve(ids.size());
  for (int c : ids) out.push_back(renumber.at(c));
  return Partition(std::move(out));
}

std::vector<std::size_t> Partition::community_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (int c : assignment_) ++sizes[static_cast<std::size_t>(c - 1)];
  return sizes;
}

ContingencyTable ContingencyTable::from_counts(std::size_t rows, std::size_t cols,
                                               std::vector<Count> counts) {
  if (counts.size() != rows * cols) throw DomainError("contingency table: bad cell count");
  ContingencyTable t;
  t.rows = rows;
  t.cols = cols;
  t.counts = std::move(counts);
  t.row_margins.assign(rows, 0);
  t.col_margins.assign(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Count x = t.counts[r * cols + c];
      if (x < 0) throw DomainError("contingency table: negative count");
      t.row_margins[r] += x;
      t.col_margins[c] += x;
      t.total += x;
    }
  }
  return t;
}

ContingencyTable ContingencyTable::transposed() const {
  std::vector<Count> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[c * rows + r] = counts[r * cols + c];
  }
  return from_counts(cols, rows, std::move(out));
}

std::unordered_map<std::string_view, std::size_t> index_labels(
    std::span<const std::string> labels) {
  std::unordered_map<std::string_view, std::size_t> idx;
  idx.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], i).second) {
      throw AlignmentError("duplicate label '" + labels[i] + "'");
    }
  }
  return idx;
}

std::vector<std::size_t> alignment(std::span<const std::string> source,
                                   std::span<const std::string> target) {
  const auto idx = index_labels(source);
  std::vector<std::size_t> out;
  out.reserve(target.size());
  std::vector<std::string> missing;
  for (const auto& l : target) {
    auto it = idx.find(l);
    if (it == idx.end()) {
      missing.push_back(l);
    } else {
      out.push_back(it->second);
    }
  }
  if (!missing.empty() || source.size() != target.size()) {
    std::string msg = "journal sets differ (" + std::to_string(source.size()) + " vs " +
                      std::to_string(target.size()) + " journals)";
    if (!missing.empty()) msg += "; first missing: '" + missing.front() + "'";
    throw AlignmentError(msg);
  }
  return out;
}

WeightedGraph reorder(const WeightedGraph& graph, std::span<const std::string> labels) {
  const auto old_of_new = alignment(graph.node_labels, labels);
  std::vector<std::size_t> new_of_old(old_of_new.size());
  for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;

  WeightedGraph out;
  out.node_labels.assign(labels.begin(), labels.end());
  out.edges.reserve(graph.edges.size());
  for (const auto& e : graph.edges) out.edges.push_back({new_of_old[e.u], new_of_old[e.v], e.weight});
  if (graph.node_size) {
    std::vector<Count> sizes(old_of_new.size());
    for (std::size_t i = 0; i < old_of_new.size(); ++i) sizes[i] = (*graph.node_size)[old_of_new[i]];
    out.node_size = std::move(sizes);
  }
  canonicalize(out);
  return out;
}

}  // namespace jnet
