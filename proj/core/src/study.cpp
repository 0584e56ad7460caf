#include "jnet/study.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "jnet/association.hpp"
#include "jnet/text.hpp"
#include "jnet/version.hpp"

namespace jnet {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr std::array<NetworkKind, 3> kAllKinds{NetworkKind::IE, NetworkKind::IA, NetworkKind::CC};
constexpr std::array<std::pair<NetworkKind, NetworkKind>, 3> kDcorPairs{
    {{NetworkKind::CC, NetworkKind::IE}, {NetworkKind::CC, NetworkKind::IA}, {NetworkKind::IE, NetworkKind::IA}}};
constexpr std::array<std::pair<NetworkKind, NetworkKind>, 3> kAssocPairs{
    {{NetworkKind::IE, NetworkKind::CC}, {NetworkKind::IE, NetworkKind::IA}, {NetworkKind::CC, NetworkKind::IA}}};

std::size_t slot(NetworkKind k) { return static_cast<std::size_t>(k); }

std::string lower_kind(NetworkKind k) {
  std::string s(to_string(k));
  for (auto& c : s) c = static_cast<char>(c - 'A' + 'a');
  return s;
}

std::string pair_name(NetworkKind a, NetworkKind b) {
  return std::string(to_string(a)) + "-" + std::string(to_string(b));
}

template <typename T>
T parse_number(const std::string& value, const std::string& key, const std::string& source,
               std::size_t line) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(source, line, "bad value '" + value + "' for " + key);
  }
  return out;
}

/// Strips a trailing comment and unquotes a value.
std::string config_value(std::string_view raw, const std::string& source, std::size_t line) {
  raw = text::trim(raw);
  if (!raw.empty() && (raw.front() == '"' || raw.front() == '\'')) {
    const char q = raw.front();
    const auto end = raw.find(q, 1);
    if (end == std::string_view::npos) throw ParseError(source, line, "unterminated string");
    const auto rest = text::trim(raw.substr(end + 1));
    if (!rest.empty() && rest.front() != '#') throw ParseError(source, line, "text after string value");
    return std::string(raw.substr(1, end - 1));
  }
  const auto hash = raw.find('#');
  return std::string(text::trim(raw.substr(0, hash)));
}

void check_stage(const std::string& stage, auto&& body) {
  try {
    body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

ordered_json dcor_json(const DcorResult& r) {
  ordered_json j;
  j["dcov2"] = r.dcov2;
  j["dvar2_a"] = r.dvar2_a;
  j["dvar2_b"] = r.dvar2_b;
  j["rd"] = r.rd;
  j["sqrt_rd"] = r.sqrt_rd;
  j["p_value"] = r.p_value;
  j["exceed_count"] = r.exceed_count;
  j["n_permutations"] = r.n_permutations;
  j["seed"] = r.seed;
  return j;
}

}  // namespace

std::string_view library_version() noexcept { return JNET_VERSION; }

void validate(const StudyConfig& c) {
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw Error("alpha must lie in (0,1)");
  if (c.n_permutations < 1) throw Error("dcor.permutations must be >= 1");
  if (c.family_size < 1) throw Error("dcor.family_size must be >= 1");
  for (auto k : kAllKinds) {
    const auto& n = c.network(k);
    const auto name = lower_kind(k);
    if (n.input.empty()) throw Error(name + ".input is required");
    if (!(n.resolution > 0.0)) throw Error(name + ".resolution must be > 0");
    if (n.restarts < 1) throw Error(name + ".restarts must be >= 1");
  }
}

StudyConfig read_study_config(std::istream& in, const fs::path& base_dir, const std::string& source) {
  StudyConfig c;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, lineno, "expected 'key = value'");
    const std::string key(text::trim(t.substr(0, eq)));
    const std::string value = config_value(t.substr(eq + 1), source, lineno);
    if (!seen.insert(key).second) throw ParseError(source, lineno, "duplicate key '" + key + "'");

    auto num = [&]<typename T>(T& target) { target = parse_number<T>(value, key, source, lineno); };

    if (key == "field") {
      c.field = value;
    } else if (key == "dcor.permutations") {
      num(c.n_permutations);
    } else if (key == "dcor.seed") {
      num(c.dcor_seed);
    } else if (key == "dcor.alpha") {
      num(c.alpha);
    } else if (key == "dcor.family_size") {
      num(c.family_size);
    } else if (key == "dcor.centering") {
      c.centering = parse_centering(value);
    } else if (key == "empty_policy") {
      num(c.empty_policy.value);
    } else {
      const auto dot = key.find('.');
      if (dot == std::string::npos) throw ParseError(source, lineno, "unknown key '" + key + "'");
      NetworkKind kind{};
      try {
        kind = parse_network_kind(key.substr(0, dot));
      } catch (const Error&) {
        throw ParseError(source, lineno, "unknown key '" + key + "'");
      }
      auto& net = c.network(kind);
      const auto sub = key.substr(dot + 1);
      if (sub == "input") {
        fs::path p(value);
        net.input = p.is_absolute() ? p : base_dir / p;
      } else if (sub == "kind") {
        if (value == "bipartite") {
          net.kind = InputKind::Bipartite;
        } else if (value == "one-mode") {
          net.kind = InputKind::OneMode;
        } else {
          throw ParseError(source, lineno, "kind must be 'bipartite' or 'one-mode'");
        }
      } else if (sub == "resolution") {
        num(net.resolution);
      } else if (sub == "seed") {
        num(net.seed);
      } else if (sub == "restarts") {
        num(net.restarts);
      } else {
        throw ParseError(source, lineno, "unknown key '" + key + "'");
      }
    }
  }
  try {
    validate(c);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
  return c;
}

StudyConfig parse_study_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_study_config(in, path.parent_path(), path.string());
}

DissimMatrix reorder(const DissimMatrix& m, std::span<const std::string> labels) {
  const auto old_of_new = alignment(m.labels, labels);
  const auto n = labels.size();
  DissimMatrix out(std::vector<std::string>(labels.begin(), labels.end()),
                   std::vector<double>(n * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(old_of_new[i], old_of_new[j]);
  }
  return out;
}

StudyResult run_study(const StudyConfig& config, unsigned workers) {
  check_stage("config", [&] { validate(config); });
  StudyResult r;
  r.config = config;

  for (auto k : kAllKinds) {
    auto& net = r.networks[slot(k)];
    net.kind = k;
    const auto& in = config.network(k);
    check_stage("load " + std::string(to_string(k)), [&] {
      if (in.kind == InputKind::Bipartite) {
        const auto inc = parse_bipartite_csv(in.input);
        if (inc.journal_count() < 2) throw DomainError("need ≥2 journals");
        net.graph = project(inc, k);
        net.dissim = dissim_from_incidence(inc, config.empty_policy);
      } else {
        net.graph = load_one_mode(in.input);
        if (net.graph.node_count() < 2) throw DomainError("need ≥2 journals");
        net.dissim = dissim_from_graph(net.graph, config.empty_policy);
      }
    });
  }

  check_stage("align", [&] {
    const auto labels = r.networks[slot(NetworkKind::IE)].graph.node_labels;
    for (auto k : {NetworkKind::IA, NetworkKind::CC}) {
      auto& net = r.networks[slot(k)];
      try {
        net.graph = reorder(net.graph, labels);
        net.dissim = reorder(net.dissim, labels);
      } catch (const AlignmentError& e) {
        throw AlignmentError("IE vs " + std::string(to_string(k)) + ": " + e.what());
      }
    }
  });

  for (auto k : kAllKinds) {
    auto& net = r.networks[slot(k)];
    const auto& in = config.network(k);
    check_stage("communities " + std::string(to_string(k)), [&] {
      net.stats = network_stats(net.graph);
      auto lv = louvain(net.graph, {in.resolution, in.seed, in.restarts, workers});
      net.partition = std::move(lv.partition);
      net.communities = lv.stats;
    });
  }

  check_stage("dcor", [&] {
    std::vector<double> ps;
    for (auto [a, b] : kDcorPairs) {
      PermTestOptions opt;
      opt.n_permutations = config.n_permutations;
      opt.seed = config.dcor_seed;
      opt.workers = workers;
      opt.centering = config.centering;
      DcorRow row{a, b, perm_test(r.network(a).dissim, r.network(b).dissim, opt), false};
      ps.push_back(row.result.p_value);
      r.dcor.push_back(row);
    }
    const auto reject = bonferroni_gate(ps, config.alpha, config.family_size);
    for (std::size_t i = 0; i < reject.size(); ++i) r.dcor[i].reject = reject[i];
  });

  check_stage("association", [&] {
    for (auto [a, b] : kAssocPairs) {
      r.assoc.push_back({a, b, associate(r.network(a).partition, r.network(b).partition)});
    }
  });
  return r;
}

std::string table1_csv(const StudyResult& r) {
  std::string out =
      "field,pair,sqrt_rd,p_value,rd,dcov2,dvar2_a,dvar2_b,n_permutations,seed,threshold,reject\n";
  const double threshold = r.config.alpha / static_cast<double>(r.config.family_size);
  for (const auto& row : r.dcor) {
    const auto& d = row.result;
    out += text::csv_field(r.config.field) + "," + pair_name(row.a, row.b) + "," +
           text::decimal(d.sqrt_rd) + "," + text::decimal(d.p_value) + "," + text::decimal(d.rd) +
           "," + text::decimal(d.dcov2) + "," + text::decimal(d.dvar2_a) + "," +
           text::decimal(d.dvar2_b) + "," + std::to_string(d.n_permutations) + "," +
           std::to_string(d.seed) + "," + text::decimal(threshold) + "," +
           (row.reject ? "true" : "false") + "\n";
  }
  return out;
}

std::string table2_csv(const StudyResult& r) {
  std::string out =
      "field,network,journals,density,average_degree,isolated_journals,resolution,modularity,"
      "n_communities,n_non_isolated_communities,ei_unweighted,ei_weighted\n";
  for (auto k : {NetworkKind::IE, NetworkKind::CC, NetworkKind::IA}) {
    const auto& n = r.network(k);
    const auto& c = n.communities;
    out += text::csv_field(r.config.field) + "," + std::string(to_string(k)) + "," +
           std::to_string(n.graph.node_count()) + "," + text::decimal(n.stats.density) + "," +
           text::decimal(n.stats.average_degree) + "," + std::to_string(n.stats.isolated_count) +
           "," + text::decimal(c.resolution) + "," + text::decimal(c.modularity) + "," +
           std::to_string(c.n_communities) + "," + std::to_string(c.n_non_isolated_communities) +
           "," + text::decimal(c.ei_unweighted) + "," + text::decimal(c.ei_weighted) + "\n";
  }
  return out;
}

std::string table3_csv(const StudyResult& r) {
  std::string out =
      "field,pair,chi2,df,cramers_v,rajski,rajski_right,rajski_left,adjusted_rand\n";
  for (const auto& row : r.assoc) {
    const auto& a = row.report;
    out += text::csv_field(r.config.field) + "," + pair_name(row.a, row.b) + "," +
           text::decimal(a.chi2) + "," + std::to_string(a.df) + "," + text::decimal(a.cramers_v) +
           "," + text::decimal(a.rajski_sym) + "," + text::decimal(a.rajski_right) + "," +
           text::decimal(a.rajski_left) + "," + text::decimal(a.ari) + "\n";
  }
  return out;
}

std::string provenance_json(const StudyResult& r) {
  const auto& c = r.config;
  ordered_json j;
  j["software"] = {{"name", "jnet"}, {"version", std::string(library_version())}};
  j["field"] = c.field;
  ordered_json nets = ordered_json::object();
  for (auto k : kAllKinds) {
    const auto& in = c.network(k);
    const auto& n = r.network(k);
    nets[std::string(to_string(k))] = {
        {"input", in.input.filename().string()},
        {"kind", in.kind == InputKind::Bipartite ? "bipartite" : "one-mode"},
        {"journals", n.graph.node_count()},
        {"edges", n.graph.edges.size()},
        {"louvain", {{"resolution", in.resolution}, {"seed", in.seed}, {"restarts", in.restarts}}},
    };
  }
  j["networks"] = nets;
  j["dissimilarity"] = {{"measure", "jaccard"}, {"empty_pair_value", c.empty_policy.value}};
  j["dcor"] = {{"centering", std::string(to_string(c.centering))},
               {"n_permutations", c.n_permutations},
               {"seed", c.dcor_seed},
               {"alpha", c.alpha},
               {"family_size", c.family_size},
               {"threshold", c.alpha / static_cast<double>(c.family_size)},
               {"pairs", {"CC-IE", "CC-IA", "IE-IA"}}};
  j["association"] = {{"pairs", {"IE-CC", "IE-IA", "CC-IA"}},
                      {"rajski_left", "I/H(second)"},
                      {"rajski_right", "I/H(first)"}};
  return j.dump(2) + "\n";
}

void write_study(const StudyResult& r, const fs::path& out_dir) {
  const auto parent = out_dir.has_parent_path() ? out_dir.parent_path() : fs::path(".");
  const auto tmp = parent / ("." + out_dir.filename().string() + ".partial");
  fs::remove_all(tmp);
  fs::create_directories(tmp / "networks");

  std::map<fs::path, std::string> files;
  files["table1_dcor.csv"] = table1_csv(r);
  files["table2_networks.csv"] = table2_csv(r);
  files["table3_association.csv"] = table3_csv(r);
  files["provenance.json"] = provenance_json(r);
  for (auto k : kAllKinds) {
    const auto& n = r.network(k);
    const std::string base = "networks/" + std::string(to_string(k));
    files[base + ".net"] = write_pajek_net(n.graph);
    files[base + ".edges.csv"] = write_edge_list_csv(n.graph);
    files[base + ".clu"] = write_pajek_clu(n.partition);
    files[base + ".dissim.csv"] = write_matrix_csv(n.dissim);
  }
  try {
    for (const auto& [rel, content] : files) {
      std::ofstream out(tmp / rel, std::ios::binary);
      out << content;
      if (!out) throw Error("cannot write '" + (tmp / rel).string() + "'");
    }
    fs::create_directories(out_dir / "networks");
    for (const auto& [rel, content] : files) fs::rename(tmp / rel, out_dir / rel);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(tmp, ec);
    throw;
  }
  fs::remove_all(tmp);
}

std::string to_json(const DcorResult& r) { return dcor_json(r).dump(); }

std::string to_json(const NetworkStats& s) {
  ordered_json j;
  j["density"] = s.density;
  j["average_degree"] = s.average_degree;
  j["isolated_count"] = s.isolated_count;
  return j.dump();
}

std::string to_json(const CommunityStats& s) {
  ordered_json j;
  j["modularity"] = s.modularity;
  j["resolution"] = s.resolution;
  j["n_communities"] = s.n_communities;
  j["n_non_isolated_communities"] = s.n_non_isolated_communities;
  j["ei_unweighted"] = s.ei_unweighted;
  j["ei_weighted"] = s.ei_weighted;
  return j.dump();
}

std::string to_json(const AssocReport& r) {
  ordered_json j;
  j["chi2"] = r.chi2;
  j["df"] = r.df;
  j["cramers_v"] = r.cramers_v;
  j["rajski_sym"] = r.rajski_sym;
  j["rajski_left"] = r.rajski_left;
  j["rajski_right"] = r.rajski_right;
  j["ari"] = r.ari;
  return j.dump();
}

}  // namespace jnet
