#include "jnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "jnet/error.hpp"
#include "jnet/text.hpp"

namespace jnet {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return in;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  s = text::trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

/// Accepts integers written as reals ("3", "3.0"); Pajek tools emit both.
bool parse_count(std::string_view s, Count& out) {
  if (parse_int(s, out)) return true;
  s = text::trim(s);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) return false;
  if (x != static_cast<double>(static_cast<Count>(x))) return false;
  out = static_cast<Count>(x);
  return true;
}

/// Whitespace tokenizer honouring double quotes (Pajek vertex labels).
std::vector<std::string> pajek_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '"') {
      const auto end = line.find('"', i + 1);
      const auto stop = end == std::string_view::npos ? line.size() : end;
      out.emplace_back(line.substr(i + 1, stop - i - 1));
      i = stop + 1;
    } else {
      const auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.emplace_back(line.substr(start, i - start));
    }
  }
  return out;
}

struct Interner {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t get(const std::string& label) {
    auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  }
};

}  // namespace

std::string_view to_string(NetworkKind kind) noexcept {
  switch (kind) {
    case NetworkKind::IE: return "IE";
    case NetworkKind::IA: return "IA";
    case NetworkKind::CC: return "CC";
  }
  return "?";
}

NetworkKind parse_network_kind(std::string_view text) {
  const auto l = lower(text::trim(text));
  if (l == "ie") return NetworkKind::IE;
  if (l == "ia") return NetworkKind::IA;
  if (l == "cc") return NetworkKind::CC;
  throw Error("unknown network kind '" + std::string(text) + "' (expected ie, ia or cc)");
}

BipartiteIncidence read_bipartite_csv(std::istream& in, const std::string& source) {
  Interner journals;
  Interner entities;
  std::vector<std::vector<std::size_t>> membership;

  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto fields = text::split_csv(line);
    if (fields.size() != 2) {
      throw ParseError(source, lineno,
                       "expected 2 fields (journal,entity), found " + std::to_string(fields.size()));
    }
    if (!header) {
      header = true;
      continue;
    }
    if (fields[0].empty() || fields[1].empty()) throw ParseError(source, lineno, "empty field");
    const auto j = journals.get(fields[0]);
    const auto e = entities.get(fields[1]);
    if (j == membership.size()) membership.emplace_back();
    membership[j].push_back(e);
  }
  if (!header) throw ParseError(source, 0, "empty file");

  for (auto& set : membership) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return {std::move(journals.labels), std::move(entities.labels), std::move(membership)};
}

BipartiteIncidence parse_bipartite_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_bipartite_csv(in, path.string());
}

WeightedGraph project_interlocking(const BipartiteIncidence& inc) {
  if (auto problems = validate(inc); !problems.empty()) {
    throw DomainError("invalid incidence: " + problems.front());
  }
  const std::size_t n = inc.journal_count();

  // Inverted index: entity -> journals, then count shared entities per pair.
  std::vector<std::vector<std::size_t>> journals_of(inc.entity_count());
  for (std::size_t j = 0; j < n; ++j) {
    for (auto e : inc.membership[j]) journals_of[e].push_back(j);
  }
  std::vector<Count> shared(n * n, 0);
  for (const auto& js : journals_of) {
    for (std::size_t a = 0; a < js.size(); ++a) {
      for (std::size_t b = a + 1; b < js.size(); ++b) ++shared[js[a] * n + js[b]];
    }
  }

  WeightedGraph g;
  g.node_labels = inc.journal_labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shared[i * n + j] > 0) g.edges.push_back({i, j, shared[i * n + j]});
    }
  }
  std::vector<Count> sizes(n);
  for (std::size_t j = 0; j < n; ++j) sizes[j] = static_cast<Count>(inc.membership[j].size());
  g.node_size = std::move(sizes);
  return g;
}

WeightedGraph project_cocitation(const BipartiteIncidence& inc) {
  return project_interlocking(inc);
}

WeightedGraph project(const BipartiteIncidence& inc, NetworkKind kind) {
  return kind == NetworkKind::CC ? project_cocitation(inc) : project_interlocking(inc);
}

WeightedGraph read_pajek_net(std::istream& in, const std::string& source) {
  enum class Section { None, Vertices, Edges };
  Section section = Section::None;
  std::size_t n = 0;
  bool have_vertices = false;
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, Count> edges;
  std::map<std::size_t, Count> loops;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '%') continue;

    if (t.front() == '*') {
      const auto toks = pajek_tokens(t);
      const auto head = lower(toks.front());
      if (head == "*vertices") {
        if (have_vertices) throw ParseError(source, lineno, "repeated *Vertices section");
        if (toks.size() < 2 || !parse_int(toks[1], n)) {
          throw ParseError(source, lineno, "*Vertices needs a vertex count");
        }
        have_vertices = true;
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
        section = Section::Vertices;
      } else if (head == "*edges") {
        if (!have_vertices) throw ParseError(source, lineno, "*Edges before *Vertices");
        section = Section::Edges;
      } else {
        throw ParseError(source, lineno, "unknown section header '" + toks.front() + "'");
      }
      continue;
    }

    const auto toks = pajek_tokens(t);
    if (section == Section::Vertices) {
      std::size_t idx = 0;
      if (!parse_int(toks[0], idx)) throw ParseError(source, lineno, "bad vertex index");
      if (idx < 1 || idx > n) {
        throw ParseError(source, lineno, "vertex index " + toks[0] + " out of range");
      }
      if (toks.size() >= 2) labels[idx - 1] = toks[1];
    } else if (section == Section::Edges) {
      if (toks.size() < 2) throw ParseError(source, lineno, "edge line needs two vertex indices");
      std::size_t u = 0;
      std::size_t v = 0;
      Count w = 1;
      if (!parse_int(toks[0], u) || !parse_int(toks[1], v)) {
        throw ParseError(source, lineno, "bad vertex index in edge");
      }
      for (auto idx : {u, v}) {
        if (idx < 1 || idx > n) {
          throw ParseError(source, lineno, "vertex index " + std::to_string(idx) + " out of range");
        }
      }
      if (toks.size() >= 3 && !parse_count(toks[2], w)) {
        throw ParseError(source, lineno, "edge weight '" + toks[2] + "' is not an integer count");
      }
      --u;
      --v;
      if (u == v) {
        if (w < 0) throw ParseError(source, lineno, "negative loop weight");
        auto [it, inserted] = loops.emplace(u, w);
        if (!inserted && it->second != w) throw ParseError(source, lineno, "conflicting loop weights");
        continue;
      }
      if (w < 1) throw ParseError(source, lineno, "edge weight must be >= 1");
      const auto key = std::minmax(u, v);
      auto [it, inserted] = edges.emplace(std::make_pair(key.first, key.second), w);
      if (!inserted && it->second != w) {
        throw ParseError(source, lineno,
                         "duplicate edge " + std::to_string(key.first + 1) + " " +
                             std::to_string(key.second + 1) + " with conflicting weight");
      }
    } else {
      throw ParseError(source, lineno, "data before *Vertices");
    }
  }
  if (!have_vertices) throw ParseError(source, 0, "missing *Vertices section");

  WeightedGraph g;
  g.node_labels = std::move(labels);
  for (const auto& [key, w] : edges) g.edges.push_back({key.first, key.second, w});
  if (!loops.empty()) {
    std::vector<Count> sizes(n, 0);
    for (const auto& [i, w] : loops) sizes[i] = w;
    g.node_size = std::move(sizes);
  }
  if (auto problems = validate(g); !problems.empty()) {
    throw ParseError(source, 0, problems.front());
  }
  return g;
}

WeightedGraph parse_pajek_net(const std::filesystem::path& path) {
  auto in = open(path);
  return read_pajek_net(in, path.string());
}

std::string write_pajek_net(const WeightedGraph& graph) {
  std::ostringstream out;
  const auto n = graph.node_count();
  out << "*Vertices " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) out << (i + 1) << " \"" << graph.node_labels[i] << "\"\n";
  out << "*Edges\n";
  std::vector<Edge> edges = graph.edges;
  if (graph.node_size) {
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, i, (*graph.node_size)[i]});
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const auto& e : edges) out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.weight << '\n';
  return out.str();
}

Partition read_pajek_clu(std::istream& in, std::size_t n, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<int> ids;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '%') continue;
    if (t.front() == '*') {
      const auto toks = pajek_tokens(t);
      std::size_t declared = 0;
      if (header || lower(toks.front()) != "*vertices" || toks.size() < 2 ||
          !parse_int(toks[1], declared)) {
        throw ParseError(source, lineno, "expected a single '*Vertices n' header");
      }
      if (declared != n) {
        throw ParseError(source, lineno,
                         "partition length mismatch: file declares " + std::to_string(declared) +
                             " vertices, expected " + std::to_string(n));
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError(source, lineno, "community id before '*Vertices' header");
    int id = 0;
    if (!parse_int(t, id)) throw ParseError(source, lineno, "bad community id '" + std::string(t) + "'");
    ids.push_back(id);
  }
  if (!header) throw ParseError(source, 0, "missing '*Vertices' header");
  if (ids.size() != n) {
    throw ParseError(source, 0,
                     "partition length mismatch: " + std::to_string(ids.size()) +
                         " ids for " + std::to_string(n) + " vertices");
  }
  return Partition::from_raw(ids);
}

Partition parse_pajek_clu(const std::filesystem::path& path, std::size_t n) {
  auto in = open(path);
  return read_pajek_clu(in, n, path.string());
}

std::string write_pajek_clu(const Partition& partition) {
  std::string out = "*Vertices " + std::to_string(partition.size()) + "\n";
  for (int c : partition.assignment()) {
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

WeightedGraph read_edge_list_csv(std::istream& in, const std::string& source) {
  Interner nodes;
  std::map<std::pair<std::size_t, std::size_t>, Count> edges;
  std::map<std::size_t, Count> loops;

  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto f = text::split_csv(line);
    if (f.size() != 3) {
      throw ParseError(source, lineno,
                       "expected 3 fields (source,target,weight), found " + std::to_string(f.size()));
    }
    if (!header) {
      header = true;
      continue;
    }
    if (f[0].empty()) throw ParseError(source, lineno, "empty source");
    const auto u = nodes.get(f[0]);
    if (f[1].empty()) {
      if (!f[2].empty()) throw ParseError(source, lineno, "weight given without a target");
      continue;
    }
    const auto v = nodes.get(f[1]);
    Count w = 0;
    if (!parse_count(f[2], w)) throw ParseError(source, lineno, "weight '" + f[2] + "' is not an integer count");
    if (u == v) {
      if (w < 0) throw ParseError(source, lineno, "negative node size");
      auto [it, inserted] = loops.emplace(u, w);
      if (!inserted && it->second != w) throw ParseError(source, lineno, "conflicting node sizes");
      continue;
    }
    if (w < 1) throw ParseError(source, lineno, "edge weight must be >= 1");
    const auto key = std::minmax(u, v);
    auto [it, inserted] = edges.emplace(std::make_pair(key.first, key.second), w);
    if (!inserted && it->second != w) throw ParseError(source, lineno, "duplicate edge with conflicting weight");
  }
  if (!header) throw ParseError(source, 0, "empty file");

  WeightedGraph g;
  g.node_labels = std::move(nodes.labels);
  for (const auto& [key, w] : edges) g.edges.push_back({key.first, key.second, w});
  if (!loops.empty()) {
    std::vector<Count> sizes(g.node_count(), 0);
    for (const auto& [i, w] : loops) sizes[i] = w;
    g.node_size = std::move(sizes);
  }
  return g;
}

WeightedGraph parse_edge_list_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list_csv(in, path.string());
}

std::string write_edge_list_csv(const WeightedGraph& graph) {
  std::string out = "source,target,weight\n";
  const auto n = graph.node_count();
  // Declaration rows first so that reading back preserves node order.
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = text::csv_field(graph.node_labels[i]);
    if (graph.node_size) {
      out += label + "," + label + "," + std::to_string((*graph.node_size)[i]) + "\n";
    } else {
      out += label + ",,\n";
    }
  }
  for (const auto& e : graph.edges) {
    out += text::csv_field(graph.node_labels[e.u]) + "," + text::csv_field(graph.node_labels[e.v]) +
           "," + std::to_string(e.weight) + "\n";
  }
  return out;
}

WeightedGraph load_one_mode(const std::filesystem::path& path) {
  if (lower(path.extension().string()) == ".net") return parse_pajek_net(path);
  return parse_edge_list_csv(path);
}

}  // namespace jnet
