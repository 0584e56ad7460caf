#pragma once

// Full pipeline for one field: three journal networks (IE, IA, CC), their
// pairwise distance correlations, communities and community associations.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "jnet/community.hpp"
#include "jnet/dcor.hpp"
#include "jnet/dissimilarity.hpp"
#include "jnet/error.hpp"
#include "jnet/ingest.hpp"
#include "jnet/model.hpp"

namespace jnet {

enum class InputKind { Bipartite, OneMode };

struct NetworkInput {
  std::filesystem::path input;
  InputKind kind = InputKind::Bipartite;
  double resolution = 1.0;
  std::uint64_t seed = 1;
  unsigned restarts = 10;
};

struct StudyConfig {
  std::string field = "field";
  std::array<NetworkInput, 3> networks;  // indexed by NetworkKind
  std::size_t n_permutations = 99999;
  std::uint64_t dcor_seed = 1;
  double alpha = 0.01;
  std::size_t family_size = 3;
  Centering centering = Centering::Classical;
  EmptyPolicy empty_policy;

  NetworkInput& network(NetworkKind k) { return networks[static_cast<std::size_t>(k)]; }
  const NetworkInput& network(NetworkKind k) const {
    return networks[static_cast<std::size_t>(k)];
  }
};

/// Throws Error naming the first broken constraint.
void validate(const StudyConfig& config);

/// Flat `key = value` file (a TOML subset): `#` comments, quoted or bare
/// values, dotted keys such as `ie.input` or `dcor.permutations`. Relative
/// input paths are resolved against the config file's directory.
StudyConfig parse_study_config(const std::filesystem::path& path);
StudyConfig read_study_config(std::istream& in, const std::filesystem::path& base_dir,
                              const std::string& source = "<stream>");

struct NetworkReport {
  NetworkKind kind = NetworkKind::IE;
  WeightedGraph graph;
  DissimMatrix dissim;
  NetworkStats stats;
  Partition partition;
  CommunityStats communities;
};

struct DcorRow {
  NetworkKind a = NetworkKind::CC;
  NetworkKind b = NetworkKind::IE;
  DcorResult result;
  bool reject = false;
};

struct AssocRow {
  NetworkKind a = NetworkKind::IE;
  NetworkKind b = NetworkKind::CC;
  AssocReport report;
};

struct StudyResult {
  StudyConfig config;
  std::array<NetworkReport, 3> networks;  // indexed by NetworkKind, aligned labels
  std::vector<DcorRow> dcor;              // CC-IE, CC-IA, IE-IA
  std::vector<AssocRow> assoc;            // IE-CC, IE-IA, CC-IA

  const NetworkReport& network(NetworkKind k) const {
    return networks[static_cast<std::size_t>(k)];
  }
};

/// Failure inside one pipeline stage; `stage()` names it.
class StageError : public Error {
public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

/// Runs every stage. `workers` (0 = hardware) never changes the numbers.
StudyResult run_study(const StudyConfig& config, unsigned workers = 1);

// Table writers; column order is fixed.
std::string table1_csv(const StudyResult& r);
std::string table2_csv(const StudyResult& r);
std::string table3_csv(const StudyResult& r);
std::string provenance_json(const StudyResult& r);

/// Writes tables, provenance and per-network exports into a temporary
/// sibling directory and moves them into `out_dir` only once all succeeded.
void write_study(const StudyResult& r, const std::filesystem::path& out_dir);

/// Reorders a matrix to follow `labels` (same label set required).
DissimMatrix reorder(const DissimMatrix& m, std::span<const std::string> labels);

// One-record JSON renderings used by the CLI.
std::string to_json(const DcorResult& r);
std::string to_json(const NetworkStats& s);
std::string to_json(const CommunityStats& s);
std::string to_json(const AssocReport& r);

std::string_view library_version() noexcept;

}  // namespace jnet
