// jnet: build journal networks from affiliation data and compare them.
//
// Exit codes: 0 success, 1 computation or I/O error, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "jnet/association.hpp"
#include "jnet/community.hpp"
#include "jnet/dcor.hpp"
#include "jnet/dissimilarity.hpp"
#include "jnet/ingest.hpp"
#include "jnet/study.hpp"
#include "jnet/text.hpp"

namespace {

constexpr int kComputeError = 1;
constexpr int kUsageError = 2;

/// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned workers_from_env() {
  if (const char* env = std::getenv("JNET_WORKERS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("JNET_WORKERS must be a non-negative integer");
    }
  }
  return 0;
}

jnet::NetworkKind kind_arg(const std::string& mode) {
  try {
    return jnet::parse_network_kind(mode);
  } catch (const jnet::Error& e) {
    throw UsageError(e.what());
  }
}

jnet::WeightedGraph load_graph_input(const std::string& path, const std::string& mode) {
  if (mode.empty()) return jnet::load_one_mode(path);
  const auto kind = kind_arg(mode);
  const auto inc = jnet::parse_bipartite_csv(path);
  if (inc.journal_count() < 2) throw jnet::DomainError("need ≥2 journals");
  return jnet::project(inc, kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Journal network construction and cross-network similarity"};
  app.set_version_flag("--version", std::string(jnet::library_version()));
  app.require_subcommand(1);

  std::optional<unsigned> workers_flag;
  app.add_option("--workers", workers_flag, "Worker threads (default: $JNET_WORKERS or all cores)");

  // project
  std::string project_mode, project_input, project_output;
  auto* project = app.add_subcommand("project", "Project a journal,entity CSV to a one-mode Pajek network");
  project->add_option("--mode", project_mode, "ie, ia or cc")->required();
  project->add_option("--input", project_input, "Bipartite CSV (journal,entity)")->required();
  project->add_option("--output", project_output, "Pajek .net to write")->required();

  // dissim
  std::string dissim_mode, dissim_input, dissim_output;
  double empty_value = 1.0;
  auto* dissim = app.add_subcommand("dissim", "Jaccard dissimilarity matrix as CSV");
  dissim->add_option("--input", dissim_input, "Bipartite CSV, or one-mode .net/edge list with node sizes")->required();
  dissim->add_option("--mode", dissim_mode, "ie, ia or cc when --input is bipartite");
  dissim->add_option("--output", dissim_output, "Matrix CSV to write")->required();
  dissim->add_option("--empty-value", empty_value, "Dissimilarity of two empty sets")->capture_default_str();

  // dcor
  std::string dcor_a, dcor_b, centering = "classical";
  std::size_t permutations = 99999;
  std::uint64_t dcor_seed = 1;
  auto* dcor = app.add_subcommand("dcor", "Generalized distance correlation with permutation test");
  dcor->add_option("--a", dcor_a, "First matrix CSV")->required();
  dcor->add_option("--b", dcor_b, "Second matrix CSV")->required();
  dcor->add_option("--permutations", permutations, "Permutation replicates")->capture_default_str();
  dcor->add_option("--seed", dcor_seed, "RNG seed")->capture_default_str();
  dcor->add_option("--centering", centering, "classical or unbiased")
      ->check(CLI::IsMember({"classical", "unbiased"}))
      ->capture_default_str();

  // communities
  std::string comm_input, comm_output;
  jnet::LouvainOptions louvain_opt;
  auto* communities = app.add_subcommand("communities", "Louvain communities of a one-mode network");
  communities->add_option("--input", comm_input, "Pajek .net or edge-list CSV")->required();
  communities->add_option("--resolution", louvain_opt.resolution, "Resolution parameter")->capture_default_str();
  communities->add_option("--seed", louvain_opt.seed, "RNG seed")->capture_default_str();
  communities->add_option("--restarts", louvain_opt.restarts, "Independent runs, best Q kept")->capture_default_str();
  communities->add_option("--output", comm_output, "Pajek .clu to write")->required();

  // assoc
  std::string assoc_a, assoc_b;
  std::size_t assoc_n = 0;
  auto* assoc = app.add_subcommand("assoc", "Association indices between two partitions");
  assoc->add_option("--a", assoc_a, "First .clu")->required();
  assoc->add_option("--b", assoc_b, "Second .clu")->required();
  assoc->add_option("--n", assoc_n, "Number of journals")->required();

  // report
  std::string report_config, report_out;
  auto* report = app.add_subcommand("report", "Full pipeline for one field");
  report->add_option("--config", report_config, "Study config (key = value)")->required();
  report->add_option("--out", report_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    const unsigned workers = workers_flag ? *workers_flag : workers_from_env();

    if (*project) {
      const auto kind = kind_arg(project_mode);
      const auto inc = jnet::parse_bipartite_csv(project_input);
      if (inc.journal_count() < 2) throw jnet::DomainError("need ≥2 journals");
      const auto graph = jnet::project(inc, kind);
      const auto stats = jnet::network_stats(graph);
      jnet::text::write_file_atomic(project_output, jnet::write_pajek_net(graph));
      std::cout << jnet::to_json(stats) << '\n';
    } else if (*dissim) {
      jnet::DissimMatrix m;
      if (dissim_mode.empty()) {
        m = jnet::dissim_from_graph(jnet::load_one_mode(dissim_input), {empty_value});
      } else {
        kind_arg(dissim_mode);
        m = jnet::dissim_from_incidence(jnet::parse_bipartite_csv(dissim_input), {empty_value});
      }
      jnet::text::write_file_atomic(dissim_output, jnet::write_matrix_csv(m));
    } else if (*dcor) {
      const auto a = jnet::parse_matrix_csv(dcor_a);
      const auto b = jnet::parse_matrix_csv(dcor_b);
      jnet::PermTestOptions opt;
      opt.n_permutations = permutations;
      opt.seed = dcor_seed;
      opt.workers = workers;
      opt.centering = jnet::parse_centering(centering);
      std::cout << jnet::to_json(jnet::perm_test(a, b, opt)) << '\n';
    } else if (*communities) {
      const auto graph = load_graph_input(comm_input, "");
      louvain_opt.workers = workers;
      const auto result = jnet::louvain(graph, louvain_opt);
      jnet::text::write_file_atomic(comm_output, jnet::write_pajek_clu(result.partition));
      std::cout << jnet::to_json(result.stats) << '\n';
    } else if (*assoc) {
      const auto a = jnet::parse_pajek_clu(assoc_a, assoc_n);
      const auto b = jnet::parse_pajek_clu(assoc_b, assoc_n);
      std::cout << jnet::to_json(jnet::associate(a, b)) << '\n';
    } else if (*report) {
      const auto config = jnet::parse_study_config(report_config);
      const auto result = jnet::run_study(config, workers);
      jnet::write_study(result, report_out);
      std::cout << jnet::table1_csv(result) << jnet::table2_csv(result) << jnet::table3_csv(result);
    }
  } catch (const UsageError& e) {
    std::cerr << "jnet: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "jnet: " << e.what() << '\n';
    return kComputeError;
  }
  return 0;
}
