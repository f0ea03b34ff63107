#include "rcp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace rcp {

nlohmann::ordered_json ClusteredGraphConfig::to_json() const {
  return {{"nodes", nodes},
          {"communities", communities},
          {"mixing", mixing},
          {"clique_min", clique_min},
          {"clique_max", clique_max},
          {"memberships", memberships},
          {"rewire", rewire},
          {"background_degree", background_degree}};
}

ClusteredGraphConfig ClusteredGraphConfig::from_json(const nlohmann::json& j) {
  ClusteredGraphConfig c;
  c.nodes = j.value("nodes", c.nodes);
  c.communities = j.value("communities", c.communities);
  c.mixing = j.value("mixing", c.mixing);
  c.clique_min = j.value("clique_min", c.clique_min);
  c.clique_max = j.value("clique_max", c.clique_max);
  c.memberships = j.value("memberships", c.memberships);
  c.rewire = j.value("rewire", c.rewire);
  c.background_degree = j.value("background_degree", c.background_degree);
  return c;
}

namespace {

void validate(const ClusteredGraphConfig& c) {
  if (c.communities == 0 || c.communities > std::max<std::size_t>(c.nodes, 1)) {
    throw std::invalid_argument("communities must be between 1 and the node count");
  }
  if (c.clique_min < 2 || c.clique_max < c.clique_min) {
    throw std::invalid_argument("clique sizes need 2 <= clique_min <= clique_max");
  }
  if (c.mixing < 0.0 || c.mixing > 1.0 || c.rewire < 0.0 || c.rewire > 1.0) {
    throw std::invalid_argument("mixing and rewire must lie in [0, 1]");
  }
  if (c.memberships < 0.0 || c.background_degree < 0.0) {
    throw std::invalid_argument("memberships and background degree must be non-negative");
  }
}

}  // namespace

std::vector<Edge> clustered_edges(const ClusteredGraphConfig& config, std::mt19937_64& rng,
                                  NodeId offset) {
  validate(config);
  const std::size_t n = config.nodes;
  std::vector<Edge> edges;
  if (n < 2) return edges;

  auto community_begin = [&](std::size_t c) { return c * n / config.communities; };
  std::uniform_int_distribution<std::uint32_t> size_dist(config.clique_min, config.clique_max);
  std::uniform_int_distribution<std::size_t> any_node(0, n - 1);
  std::uniform_int_distribution<std::size_t> any_community(0, config.communities - 1);
  std::bernoulli_distribution outside(config.mixing);
  std::bernoulli_distribution rewire(config.rewire);

  const double mean_size = 0.5 * (config.clique_min + config.clique_max);
  const auto cliques =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * config.memberships / mean_size));

  std::vector<NodeId> members;
  for (std::size_t c = 0; c < cliques; ++c) {
    const std::size_t home = any_community(rng);
    const std::size_t lo = community_begin(home);
    const std::size_t hi = community_begin(home + 1);
    std::uniform_int_distribution<std::size_t> in_home(lo, hi - 1);
    const std::size_t size = std::min<std::size_t>(size_dist(rng), n);
    members.clear();
    std::size_t attempts = 0;
    while (members.size() < size && attempts < 20 * size) {
      ++attempts;
      auto v = static_cast<NodeId>(outside(rng) ? any_node(rng) : in_home(rng));
      if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        NodeId u = members[a];
        NodeId v = members[b];
        if (rewire(rng)) {
          auto w = static_cast<NodeId>(any_node(rng));
          if (w == u) continue;
          v = w;
        }
        edges.emplace_back(offset + u, offset + v);
      }
    }
  }

  const auto background = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * config.background_degree / 2.0));
  for (std::size_t e = 0; e < background; ++e) {
    auto u = static_cast<NodeId>(any_node(rng));
    auto v = static_cast<NodeId>(any_node(rng));
    if (u != v) edges.emplace_back(offset + u, offset + v);
  }
  return edges;
}

ClusteredGraph generate_clustered_graph(const ClusteredGraphConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = clustered_edges(config, rng);
  ClusteredGraph out;
  out.graph = SocialGraph::from_edges(config.nodes, edges);
  out.community.resize(config.nodes);
  for (std::size_t v = 0; v < config.nodes; ++v) {
    out.community[v] = static_cast<std::uint32_t>(v * config.communities / config.nodes);
  }
  return out;
}

std::vector<Edge> random_edges(std::size_t nodes, double density, std::mt19937_64& rng,
                               NodeId offset) {
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      if (keep(rng)) edges.emplace_back(offset + u, offset + v);
    }
  }
  return edges;
}

SocialGraph erdos_renyi(std::size_t nodes, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return SocialGraph::from_edges(nodes, random_edges(nodes, density, rng));
}

void write_edge_list(std::ostream& out, const SocialGraph& g) {
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace rcp
