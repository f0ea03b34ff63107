#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rcp/graph.hpp"

namespace rcp {

/// Percolation strength parameters: alpha is the minimum connected sentinel
/// count for common-friend admission, beta the minimum mutual-friend count
/// for strong-tie admission. Both must be at least 1.
class RcpPolicy {
 public:
  RcpPolicy(std::uint32_t alpha, std::uint32_t beta);

  std::uint32_t alpha() const { return alpha_; }
  std::uint32_t beta() const { return beta_; }

  // alpha >= beta + 1, mirroring y >= x + 1 for the behavior parameters.
  bool resilience_aligned() const { return alpha_ >= beta_ + 1; }

  friend bool operator==(const RcpPolicy&, const RcpPolicy&) = default;

 private:
  std::uint32_t alpha_;
  std::uint32_t beta_;
};

/// Good-citizen behavior parameters: r bounds the chance that a good node's
/// friend is bad, x is the mutual-friend count that certifies a friend as
/// good, y the connected-group size that certifies a common friend as good.
struct BehaviorParams {
  double r;
  std::uint32_t x;
  std::uint32_t y;

  // Throws std::invalid_argument unless 0 < r < 1, x >= 1, y >= x + 1.
  static BehaviorParams make(double r, std::uint32_t x, std::uint32_t y);
};

bool validate_policy_alignment(const RcpPolicy& p, const BehaviorParams& b);

struct ExpansionDuplet {
  NodeSet sentinels;   // R, drawn from the current backbone
  NodeSet candidates;  // Q, outside the current backbone
  std::optional<NodeId> key_node;  // restricts the P1 key node when set
};

enum class Branch { kNone, kA, kB };

enum class Violation {
  kExpansionSetDisconnected,
  kSentinelsEmpty,
  kSentinelsDisconnected,
  kNoKeyNode,
  kNoKeyNodeInSentinels,
  kSentinelsTooMany,          // branch A: |R| >= alpha
  kCandidateNotAdjacentToKey, // branch A
  kCandidateWeakTie,          // branch A: |F(l) ∩ F(q)| < beta
  kSentinelsTooFew,           // branch B: |R| < alpha
  kCandidateNotKeyNode,       // branch B
  kKeyNodeMismatch,           // the requested key node does not qualify
};

std::string_view to_string(Violation v);
std::string_view to_string(Branch b);

struct FeasibilityVerdict {
  bool feasible = false;
  Branch branch = Branch::kNone;
  std::vector<Violation> violations;  // empty when feasible

  nlohmann::ordered_json to_json() const;
};

/// Every l in s such that s \ {l} is inside F(l). Throws on empty s.
NodeSet find_key_nodes(const SocialGraph& g, std::span<const NodeId> s);

/// Decides one proposed expansion (R, Q) of `current_backbone`.
///
/// Branch A: a key node l of R ∪ Q lies in R, 1 <= |R| < alpha, R is
/// connected, and every candidate is adjacent to l with at least beta mutual
/// friends. Branch B: |R| >= alpha, R is connected, and every candidate is a
/// key node of R ∪ Q. The two branches are never mixed.
///
/// Throws std::invalid_argument if Q is empty, R is not inside the backbone,
/// or Q meets the backbone.
FeasibilityVerdict check_expansion_feasibility(const SocialGraph& g, const RcpPolicy& p,
                                               const ExpansionDuplet& d,
                                               std::span<const NodeId> current_backbone);

}  // namespace rcp
