#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rcp/graph.hpp"

namespace rcp {

/// Overlapping planted cliques with rewiring and a sparse random background.
/// Nodes are split into contiguous, equally sized communities; each clique
/// has a home community and draws a member from outside it with probability
/// `mixing`.
struct ClusteredGraphConfig {
  std::size_t nodes = 1000;
  std::size_t communities = 1;
  double mixing = 0.0;
  std::uint32_t clique_min = 4;
  std::uint32_t clique_max = 10;
  double memberships = 2.0;  // mean number of cliques per node
  double rewire = 0.05;
  double background_degree = 1.0;

  nlohmann::ordered_json to_json() const;
  static ClusteredGraphConfig from_json(const nlohmann::json& j);
};

struct ClusteredGraph {
  SocialGraph graph;
  std::vector<std::uint32_t> community;
};

ClusteredGraph generate_clustered_graph(const ClusteredGraphConfig& config, std::uint64_t seed);

// Edge list over nodes [offset, offset + config.nodes). Pairs may repeat.
std::vector<Edge> clustered_edges(const ClusteredGraphConfig& config, std::mt19937_64& rng,
                                  NodeId offset = 0);

std::vector<Edge> random_edges(std::size_t nodes, double density, std::mt19937_64& rng,
                               NodeId offset = 0);

SocialGraph erdos_renyi(std::size_t nodes, double density, std::uint64_t seed);

void write_edge_list(std::ostream& out, const SocialGraph& g);

}  // namespace rcp
