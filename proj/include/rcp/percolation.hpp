#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rcp/graph.hpp"
#include "rcp/policy.hpp"

namespace rcp {

struct Backbone {
  NodeId center = 0;
  NodeSet members;
};

struct Domain {
  NodeId center = 0;
  NodeSet members;
  Backbone backbone;
};

enum class Rule { kA, kB };

// One admission during backbone growth.
struct ExpansionStep {
  std::size_t step = 0;
  Rule rule = Rule::kA;
  NodeId admitted = 0;
  NodeSet witness;  // Rule A: the key node; Rule B: the sentinel component

  nlohmann::ordered_json to_json(const SocialGraph& g) const;
};

using TraceSink = std::function<void(const ExpansionStep&)>;

// Backbones for a batch of centers; centers[i] owns backbones[index[i]].
struct BackboneBatch {
  std::vector<NodeSet> backbones;
  std::vector<std::uint32_t> index;

  const NodeSet& of(std::size_t i) const { return backbones[index[i]]; }
};

/// Grows the largest policy-compliant backbone around one center.
///
/// The result is the least set S containing the center that is closed under
///   Rule A: m joins if some l in S is adjacent to m with tie strength >= beta;
///   Rule B: m joins if S ∩ F(m) induces a connected piece of size >= alpha.
/// Both rules are monotone in S, so the order of admissions does not change
/// the result. Candidates are examined in ascending index order unless a
/// shuffle seed is given, in which case a seeded random order is used.
///
/// A composer precomputes all tie strengths once and can then be reused for
/// many centers; it holds a reference to the graph.
class BackboneComposer {
 public:
  BackboneComposer(const SocialGraph& g, const RcpPolicy& p);

  Backbone compose(NodeId center, const TraceSink& trace = {},
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt) const;

  // Endpoints of a strong tie admit each other, and a backbone containing j
  // contains j's whole backbone, so both share one backbone. One closure is
  // run per strong-tie component that holds a requested center.
  BackboneBatch compose_all(std::span<const NodeId> centers) const;

  const SocialGraph& graph() const { return *g_; }
  const RcpPolicy& policy() const { return policy_; }

 private:
  const SocialGraph* g_;
  RcpPolicy policy_;
  std::vector<std::uint32_t> strengths_;
};

Backbone compose_backbone(const SocialGraph& g, const RcpPolicy& p, NodeId center,
                          const TraceSink& trace = {});

/// Union of the closed neighborhoods of all backbone members.
Domain compose_complete_domain(const SocialGraph& g, const Backbone& b);

struct BruteForceLimits {
  std::size_t max_nodes = 12;
};

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive reference for backbone growth: repeatedly enumerates every
/// sentinel subset R of the current backbone and every candidate subset Q of
/// the remaining nodes, asks check_expansion_feasibility, and absorbs every
/// feasible Q until nothing changes. Exponential; refuses graphs above the
/// node cap.
NodeSet brute_force_largest_backbone(const SocialGraph& g, const RcpPolicy& p, NodeId center,
                                     const BruteForceLimits& caps = {});

}  // namespace rcp
