#include "jnet/dissimilarity.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>

#include "jnet/error.hpp"
#include "jnet/text.hpp"

namespace jnet {

double jaccard_from_counts(Count size_a, Count size_b, Count shared) {
  const Count uni = size_a + size_b - shared;
  if (uni <= 0) throw DomainError("Jaccard dissimilarity undefined for two empty sets");
  return static_cast<double>(uni - shared) / static_cast<double>(uni);
}

double jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return jaccard_from_counts(static_cast<Count>(a.size()), static_cast<Count>(b.size()),
                             static_cast<Count>(shared));
}

DissimMatrix dissim_from_incidence(const BipartiteIncidence& inc, EmptyPolicy policy) {
  if (auto problems = validate(inc); !problems.empty()) {
    throw DomainError("invalid incidence: " + problems.front());
  }
  const std::size_t n = inc.journal_count();
  DissimMatrix m(inc.journal_labels, std::vector<double>(n * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = inc.membership[i];
      const auto& b = inc.membership[j];
      const double d = (a.empty() && b.empty()) ? policy.value : jaccard(a, b);
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

DissimMatrix dissim_from_graph(const WeightedGraph& graph, EmptyPolicy policy) {
  if (!graph.node_size) throw DomainError("sizes required for Jaccard recovery");
  const auto& size = *graph.node_size;
  const std::size_t n = graph.node_count();
  if (size.size() != n) throw DomainError("node_size length does not match node count");

  std::vector<Count> shared(n * n, 0);
  for (const auto& e : graph.edges) {
    if (e.weight > std::min(size[e.u], size[e.v])) {
      throw DomainError("edge " + graph.node_labels[e.u] + " -- " + graph.node_labels[e.v] +
                        " has weight above a node size");
    }
    shared[e.u * n + e.v] = e.weight;
    shared[e.v * n + e.u] = e.weight;
  }
  DissimMatrix m(graph.node_labels, std::vector<double>(n * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = (size[i] == 0 && size[j] == 0)
                           ? policy.value
                           : jaccard_from_counts(size[i], size[j], shared[i * n + j]);
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

std::string write_matrix_csv(const DissimMatrix& m) {
  std::string out;
  for (const auto& l : m.labels) out += "," + text::csv_field(l);
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += text::csv_field(m.labels[i]);
    for (std::size_t j = 0; j < m.size(); ++j) out += "," + text::decimal(m(i, j));
    out += '\n';
  }
  return out;
}

DissimMatrix read_matrix_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> labels;
  std::vector<double> values;
  bool header = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto f = text::split_csv(line);
    if (!header) {
      if (f.size() < 2) throw ParseError(source, lineno, "header needs at least one label");
      labels.assign(std::next(f.begin()), f.end());
      values.reserve(labels.size() * labels.size());
      header = true;
      continue;
    }
    if (f.size() != labels.size() + 1) {
      throw ParseError(source, lineno, "expected " + std::to_string(labels.size() + 1) + " fields");
    }
    if (row >= labels.size()) throw ParseError(source, lineno, "more rows than labels");
    if (f[0] != labels[row]) {
      throw ParseError(source, lineno, "row label '" + f[0] + "' does not match column '" + labels[row] + "'");
    }
    for (std::size_t j = 1; j < f.size(); ++j) {
      double x = 0.0;
      const auto& s = f[j];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(source, lineno, "bad number '" + s + "'");
      }
      values.push_back(x);
    }
    ++row;
  }
  if (!header) throw ParseError(source, 0, "empty file");
  if (row != labels.size()) throw ParseError(source, 0, "fewer rows than labels");
  DissimMatrix m(std::move(labels), std::move(values));
  if (auto problems = validate(m, 1e-12); !problems.empty()) throw ParseError(source, 0, problems.front());
  return m;
}

DissimMatrix parse_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_matrix_csv(in, path.string());
}

}  // namespace jnet
