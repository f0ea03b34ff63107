#include "rcp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

namespace rcp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : fmt::format("line {}: {}", line, what)),
      line_(line) {}

nlohmann::ordered_json LoadReport::to_json() const {
  return {{"nodes", nodes},
          {"edges", edges},
          {"dropped_self_loops", self_loops_dropped},
          {"collapsed_duplicates", duplicates_collapsed},
          {"dropped_unreciprocated", unreciprocated_dropped},
          {"dropped_isolated", isolated_dropped}};
}

SocialGraph SocialGraph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                                    std::vector<std::string> labels) {
  SocialGraph g;
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument(fmt::format("edge ({}, {}) out of range", u, v));
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  // Sort and dedup each slice, then compact.
  std::vector<std::size_t> compact_offsets(node_count + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    compact_offsets[v] = write;
    for (auto it = first; it != last; ++it) g.targets_[write++] = *it;
  }
  compact_offsets[node_count] = write;
  g.targets_.resize(write);
  g.targets_.shrink_to_fit();
  g.offsets_ = std::move(compact_offsets);

  labels.resize(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    if (labels[v].empty()) labels[v] = std::to_string(v);
  }
  g.labels_ = std::move(labels);
  g.index_.reserve(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    if (!g.index_.emplace(g.labels_[v], static_cast<NodeId>(v)).second) {
      throw std::invalid_argument(fmt::format("duplicate node label '{}'", g.labels_[v]));
    }
  }
  return g;
}

bool SocialGraph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> SocialGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> SocialGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t pack(NodeId u, NodeId v) { return (std::uint64_t{u} << 32) | v; }

}  // namespace

SocialGraph load_edge_list(std::istream& in, const LoadOptions& options, LoadReport* report) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  LoadReport rep;
  std::unordered_set<std::uint64_t> seen;  // undirected: normalized; mutual: directed
  std::vector<Edge> raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t data_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (view[first] == '#') continue;
    auto tokens = split_tokens(view);
    if (tokens.size() != 2) {
      throw ParseError(line_no, fmt::format("expected 2 tokens, found {}", tokens.size()));
    }
    ++data_lines;
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    if (u == v) {
      ++rep.self_loops_dropped;
      continue;
    }
    if (options.mode == LoadMode::kUndirected) {
      if (!seen.insert(pack(std::min(u, v), std::max(u, v))).second) {
        ++rep.duplicates_collapsed;
        continue;
      }
      raw.emplace_back(u, v);
    } else {
      if (!seen.insert(pack(u, v)).second) {
        ++rep.duplicates_collapsed;
        continue;
      }
      raw.emplace_back(u, v);
    }
  }
  if (data_lines == 0) throw ParseError(0, "empty input: no edge lines");

  std::vector<Edge> kept;
  if (options.mode == LoadMode::kMutualOnly) {
    for (const auto& [u, v] : raw) {
      bool reciprocated = seen.count(pack(v, u)) > 0;
      if (!reciprocated) {
        ++rep.unreciprocated_dropped;
      } else if (u < v) {
        kept.emplace_back(u, v);
      }
    }
  } else {
    kept = std::move(raw);
  }

  for (const auto& name : options.node_labels) intern(name);

  // Drop nodes without edges unless asked to keep them.
  std::vector<char> keep(labels.size(), options.retain_isolated ? 1 : 0);
  for (const auto& [u, v] : kept) keep[u] = keep[v] = 1;
  for (const auto& name : options.node_labels) keep[index.at(name)] = 1;

  std::vector<NodeId> remap(labels.size(), 0);
  std::vector<std::string> final_labels;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (keep[v]) {
      remap[v] = static_cast<NodeId>(final_labels.size());
      final_labels.push_back(std::move(labels[v]));
    } else {
      ++rep.isolated_dropped;
    }
  }
  for (auto& [u, v] : kept) {
    u = remap[u];
    v = remap[v];
  }
  std::size_t n = final_labels.size();
  SocialGraph g = SocialGraph::from_edges(n, kept, std::move(final_labels));
  rep.nodes = g.node_count();
  rep.edges = g.edge_count();
  if (report != nullptr) *report = rep;
  return g;
}

SocialGraph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options,
                                LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  return load_edge_list(in, options, report);
}

std::vector<std::pair<std::string, std::string>> load_attributes(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError(line_no, "expected node_label<TAB>group_label");
    }
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> load_attributes_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  return load_attributes(in);
}

std::size_t count_common(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t tie_strength(const SocialGraph& g, NodeId i, NodeId j) {
  if (!g.contains(i) || !g.contains(j)) throw std::invalid_argument("node out of range");
  if (i == j) throw std::invalid_argument("tie strength needs two distinct nodes");
  return count_common(g.neighbors(i), g.neighbors(j));
}

std::vector<std::uint32_t> edge_strengths(const SocialGraph& g) {
  // Triangle enumeration with a marker array: each edge (u, v), u < v, is
  // counted once and mirrored into v's slot.
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> strength(g.slot_count(), 0);
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (NodeId w : nu) mark[w] = u;
    for (std::size_t k = 0; k < nu.size(); ++k) {
      NodeId v = nu[k];
      if (v < u) continue;
      std::uint32_t c = 0;
      for (NodeId w : g.neighbors(v)) c += (mark[w] == u);
      strength[g.slot_begin(u) + k] = c;
      auto nv = g.neighbors(v);
      auto pos = std::lower_bound(nv.begin(), nv.end(), u) - nv.begin();
      strength[g.slot_begin(v) + static_cast<std::size_t>(pos)] = c;
    }
  }
  return strength;
}

std::vector<double> local_clustering(const SocialGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> cc(n, 0.0);
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    if (nu.size() < 2) continue;
    for (NodeId w : nu) mark[w] = u;
    std::size_t links = 0;  // each neighbor-neighbor link counted twice
    for (NodeId v : nu) {
      for (NodeId w : g.neighbors(v)) links += (mark[w] == u);
    }
    double d = static_cast<double>(nu.size());
    cc[u] = static_cast<double>(links) / (d * (d - 1.0));
  }
  return cc;
}

GraphStats graph_stats(const SocialGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("graph has no nodes");
  GraphStats s;
  s.node_count = g.node_count();
  s.link_count = g.edge_count();
  s.avg_degree = 2.0 * static_cast<double>(s.link_count) / static_cast<double>(s.node_count);
  auto cc = local_clustering(g);
  s.clustering_coefficient =
      std::accumulate(cc.begin(), cc.end(), 0.0) / static_cast<double>(s.node_count);
  return s;
}

bool is_connected_set(const SocialGraph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) return false;
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> seen(sorted.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t at = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(sorted[at])) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it == sorted.end() || *it != w) continue;
      auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (seen[idx]) continue;
      seen[idx] = 1;
      ++reached;
      stack.push_back(idx);
    }
  }
  return reached == sorted.size();
}

NodeSet closed_neighborhood(const SocialGraph& g, NodeId v) {
  auto nb = g.neighbors(v);
  NodeSet out(nb.begin(), nb.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::string> labels_of(const SocialGraph& g, std::span<const NodeId> nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(g.label(v));
  return out;
}

}  // namespace rcp
