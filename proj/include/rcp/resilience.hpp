#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rcp/generators.hpp"
#include "rcp/graph.hpp"
#include "rcp/percolation.hpp"
#include "rcp/policy.hpp"

namespace rcp {

enum class Citizen : std::uint8_t { kGood, kBad };

/// Planted good/bad-citizen graph recipe.
///
/// Good-good structure comes from the clustered generator ("clique_overlap")
/// or a uniform random graph ("erdos_renyi"); bad-bad structure is a dense
/// random graph. Each good-good tie independently brings the good endpoint
/// one extra bad friend with probability r * cross_scale, after which repair
/// passes delete cross ties that break the behavior assumptions.
struct PlantedConfig {
  std::size_t n_good = 1950;
  std::size_t n_bad = 50;
  BehaviorParams params{0.05, 3, 4};
  std::string good_model = "clique_overlap";
  ClusteredGraphConfig clustered{};  // node count taken from n_good
  double er_degree = 10.0;
  double bad_density = 0.3;
  double cross_scale = 0.8;

  nlohmann::ordered_json to_json() const;
  static PlantedConfig from_json(const nlohmann::json& j);
};

struct RepairStats {
  std::size_t cross_sampled = 0;
  std::size_t a2_removed = 0;
  std::size_t a3_removed = 0;

  std::size_t cross_kept() const { return cross_sampled - a2_removed - a3_removed; }
};

struct PlantedGraph {
  SocialGraph graph;
  std::vector<Citizen> labels;
  BehaviorParams params;
  std::uint64_t seed = 0;
  RepairStats repair;

  bool is_bad(NodeId v) const { return labels[v] == Citizen::kBad; }
  std::vector<NodeId> good_nodes() const;
  std::size_t bad_count() const;
};

PlantedGraph generate_planted_graph(const PlantedConfig& config, std::uint64_t seed);

/// Wraps an existing labeled graph, e.g. one assembled by hand for a test.
PlantedGraph make_planted_graph(SocialGraph graph, std::vector<Citizen> labels,
                                BehaviorParams params, std::uint64_t seed = 0);

struct AssumptionReport {
  bool a1_ok = true;
  bool a2_ok = true;
  bool a3_ok = true;
  double mean_bad_fraction = 0.0;  // over good nodes with degree > 0
  std::vector<std::pair<NodeId, double>> worst_a1;         // highest bad fractions
  std::vector<std::pair<Edge, std::size_t>> a2_offenders;  // (good, bad), common friends
  std::vector<std::pair<NodeId, std::size_t>> a3_offenders;  // bad node, good component size

  bool all_ok() const { return a1_ok && a2_ok && a3_ok; }
  nlohmann::ordered_json to_json(const SocialGraph& g) const;
};

AssumptionReport verify_assumptions(const PlantedGraph& pg);

struct PurityReport {
  bool guaranteed = false;  // policy aligned with the behavior parameters
  std::vector<NodeId> centers;
  std::vector<std::size_t> bad_counts;

  std::size_t total_bad() const;
  std::vector<NodeId> offending_centers() const;
};

PurityReport measure_backbone_purity(const PlantedGraph& pg, const RcpPolicy& p);

/// r · Σ|F(m)| / Σ(|F(m)| + 1) over the backbone members.
double analytic_bound(const SocialGraph& g, std::span<const NodeId> backbone, double r);

struct ResilienceReport {
  bool guaranteed = false;
  double r = 0.0;
  RcpPolicy policy{1, 1};
  std::vector<NodeId> centers;
  std::vector<std::size_t> backbone_bad;
  std::vector<double> domain_bad_fraction;
  std::vector<double> bound;
  double mean = 0.0;
  double standard_error = 0.0;
  double max_bound = 0.0;

  std::size_t purity_violations() const;
  nlohmann::ordered_json to_json(const SocialGraph& g, bool per_center) const;
};

ResilienceReport measure_domain_resilience(const PlantedGraph& pg, const RcpPolicy& p);

/// Plain friend-of-friend expansion to a fixed hop count, for contrast.
struct BaselineReport {
  std::size_t hops = 2;
  double mean_bad_fraction = 0.0;
  std::size_t centers_with_bad = 0;
  std::size_t max_bad = 0;

  nlohmann::ordered_json to_json() const;
};

BaselineReport friend_of_friend_baseline(const PlantedGraph& pg, std::size_t hops);

struct AttackSpec {
  std::size_t bots = 0;
  double bot_density = 1.0;
  std::size_t cross_budget = 0;
  std::string strategy = "uniform";  // or "hubs": targets drawn by degree
  std::uint64_t seed = 1;
  std::size_t baseline_hops = 2;

  static AttackSpec from_json(const nlohmann::json& j);
};

struct AttackOutcome {
  PlantedGraph attacked;
  ResilienceReport before;
  ResilienceReport after;
  BaselineReport baseline_before;
  BaselineReport baseline_after;
  std::size_t cross_attempted = 0;
  std::size_t cross_accepted = 0;

  nlohmann::ordered_json to_json() const;
};

/// Adds bots and bot-bot ties freely, then tries cross ties to good nodes,
/// rejecting any that would break a behavior assumption.
AttackOutcome mass_infiltration_attack(const PlantedGraph& pg, const AttackSpec& spec,
                                       const RcpPolicy& p);

/// Negative control: ties one bad node to a good node together with x of
/// that good node's friends, producing a strong good-bad tie.
PlantedGraph inject_strong_bad_tie(const PlantedGraph& pg, std::uint64_t seed);

}  // namespace rcp
