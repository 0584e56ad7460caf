#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jnet/model.hpp"

namespace jnet {

/// Network family. IE and IA are interlocking networks (editors, authors);
/// CC is co-citation (entities are citing articles).
enum class NetworkKind { IE, IA, CC };

std::string_view to_string(NetworkKind kind) noexcept;
/// Accepts "ie", "ia", "cc" in any case.
NetworkKind parse_network_kind(std::string_view text);

/// Reads a two-column `journal,entity` CSV with one header line. Journals
/// and entities are numbered in first-appearance order; repeated rows
/// collapse to one membership.
BipartiteIncidence parse_bipartite_csv(const std::filesystem::path& path);
BipartiteIncidence read_bipartite_csv(std::istream& in, const std::string& source = "<stream>");

/// One-mode projection: w(i,j) = |N(i) ∩ N(j)|, node_size(i) = |N(i)|.
WeightedGraph project_interlocking(const BipartiteIncidence& inc);

/// Co-citation projection: w(i,j) = number of articles citing both i and j.
/// Same arithmetic as project_interlocking with articles as entities.
WeightedGraph project_cocitation(const BipartiteIncidence& inc);

/// Dispatches on kind (CC -> co-citation, otherwise interlocking).
WeightedGraph project(const BipartiteIncidence& inc, NetworkKind kind);

// Pajek .net: `*Vertices n`, vertex lines `i "label"`, then `*Edges` with
// `i j [w]` (1-based). A loop `i i w` carries node_size(i) = w; nodes with
// no loop get size 0 once any loop is present.
WeightedGraph parse_pajek_net(const std::filesystem::path& path);
WeightedGraph read_pajek_net(std::istream& in, const std::string& source = "<stream>");
std::string write_pajek_net(const WeightedGraph& graph);

// Pajek .clu: `*Vertices n` followed by one community id per line.
Partition parse_pajek_clu(const std::filesystem::path& path, std::size_t n);
Partition read_pajek_clu(std::istream& in, std::size_t n, const std::string& source = "<stream>");
std::string write_pajek_clu(const Partition& partition);

// Labeled edge list with header `source,target,weight`. A row whose target
// equals its source carries node_size; a row with empty target and weight
// declares an isolated node.
WeightedGraph parse_edge_list_csv(const std::filesystem::path& path);
WeightedGraph read_edge_list_csv(std::istream& in, const std::string& source = "<stream>");
std::string write_edge_list_csv(const WeightedGraph& graph);

/// Reads a graph from a one-mode file, choosing the format by extension
/// (`.net` -> Pajek, anything else -> edge-list CSV).
WeightedGraph load_one_mode(const std::filesystem::path& path);

}  // namespace jnet
