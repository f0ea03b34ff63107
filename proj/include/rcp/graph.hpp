#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace rcp {

// Dense node index. External labels live in the graph's label map.
using NodeId = std::uint32_t;

// Sorted ascending, duplicate-free.
using NodeSet = std::vector<NodeId>;

using Edge = std::pair<NodeId, NodeId>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class LoadMode { kUndirected, kMutualOnly };

struct LoadOptions {
  LoadMode mode = LoadMode::kUndirected;
  bool retain_isolated = false;
  // Labels from a node-list sidecar; these are always retained.
  std::vector<std::string> node_labels;
};

struct LoadReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t unreciprocated_dropped = 0;  // mutual-only mode
  std::size_t isolated_dropped = 0;

  nlohmann::ordered_json to_json() const;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, symmetric, and free of self-loops
/// and duplicates. All queries are const and safe to share across threads.
class SocialGraph {
 public:
  SocialGraph() = default;

  /// Builds a graph on `node_count` nodes. Self-loops and duplicate or
  /// reversed-duplicate pairs are discarded. Missing labels default to the
  /// decimal index.
  static SocialGraph from_edges(std::size_t node_count, std::span<const Edge> edges,
                                std::vector<std::string> labels = {});

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  // Position of v's adjacency slice inside the flat target array; used to
  // index per-edge-slot tables such as tie strengths.
  std::size_t slot_begin(NodeId v) const { return offsets_[v]; }
  std::size_t slot_count() const { return targets_.size(); }

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  std::vector<Edge> edges() const;  // each undirected edge once, u < v

  bool contains(NodeId v) const { return v < node_count(); }

  friend bool operator==(const SocialGraph& a, const SocialGraph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Parses an edge list: two whitespace- or comma-separated labels per line,
/// '#' comment lines and blank lines skipped. Nodes are indexed in order of
/// first appearance.
SocialGraph load_edge_list(std::istream& in, const LoadOptions& options = {},
                           LoadReport* report = nullptr);
SocialGraph load_edge_list_file(const std::filesystem::path& path,
                                const LoadOptions& options = {},
                                LoadReport* report = nullptr);

// node_label<TAB>group_label rows; '#' comments skipped.
std::vector<std::pair<std::string, std::string>> load_attributes(std::istream& in);
std::vector<std::pair<std::string, std::string>> load_attributes_file(
    const std::filesystem::path& path);

/// Number of common neighbors |F(i) ∩ F(j)|. Throws std::invalid_argument if
/// i == j or either node is out of range.
std::size_t tie_strength(const SocialGraph& g, NodeId i, NodeId j);

std::size_t count_common(std::span<const NodeId> a, std::span<const NodeId> b);

/// Tie strength of every adjacency slot, aligned with the graph's flat target
/// array: entry slot_begin(u) + k belongs to edge (u, neighbors(u)[k]).
std::vector<std::uint32_t> edge_strengths(const SocialGraph& g);

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  double avg_degree = 0.0;
  double clustering_coefficient = 0.0;  // mean local clustering, degree < 2 counts 0
};

GraphStats graph_stats(const SocialGraph& g);

// Local clustering coefficient per node.
std::vector<double> local_clustering(const SocialGraph& g);

/// True if the subgraph of g induced by `nodes` is connected. The empty set
/// is not connected.
bool is_connected_set(const SocialGraph& g, std::span<const NodeId> nodes);

NodeSet closed_neighborhood(const SocialGraph& g, NodeId v);

std::vector<std::string> labels_of(const SocialGraph& g, std::span<const NodeId> nodes);

}  // namespace rcp
