#include "rcp/policy.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace rcp {

RcpPolicy::RcpPolicy(std::uint32_t alpha, std::uint32_t beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument(
        fmt::format("policy needs alpha >= 1 and beta >= 1 (got alpha={}, beta={})", alpha, beta));
  }
}

BehaviorParams BehaviorParams::make(double r, std::uint32_t x, std::uint32_t y) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0, 1)");
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  if (y < x + 1) throw std::invalid_argument("y must be >= x + 1");
  return BehaviorParams{r, x, y};
}

bool validate_policy_alignment(const RcpPolicy& p, const BehaviorParams& b) {
  return p.alpha() >= b.y && p.beta() >= b.x;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kExpansionSetDisconnected: return "expansion_set_disconnected";
    case Violation::kSentinelsEmpty: return "sentinels_empty";
    case Violation::kSentinelsDisconnected: return "sentinels_disconnected";
    case Violation::kNoKeyNode: return "no_key_node";
    case Violation::kNoKeyNodeInSentinels: return "no_key_node_in_sentinels";
    case Violation::kSentinelsTooMany: return "sentinels_not_below_alpha";
    case Violation::kCandidateNotAdjacentToKey: return "candidate_not_adjacent_to_key";
    case Violation::kCandidateWeakTie: return "candidate_below_beta";
    case Violation::kSentinelsTooFew: return "sentinels_below_alpha";
    case Violation::kCandidateNotKeyNode: return "candidate_not_key_node";
    case Violation::kKeyNodeMismatch: return "key_node_mismatch";
  }
  return "unknown";
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::kA: return "A";
    case Branch::kB: return "B";
    case Branch::kNone: return "none";
  }
  return "none";
}

nlohmann::ordered_json FeasibilityVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["feasible"] = feasible;
  j["branch"] = to_string(branch);
  auto list = nlohmann::ordered_json::array();
  for (auto v : violations) list.push_back(to_string(v));
  j["violations"] = std::move(list);
  return j;
}

namespace {

bool is_key_node(const SocialGraph& g, NodeId l, std::span<const NodeId> set) {
  auto nb = g.neighbors(l);
  for (NodeId v : set) {
    if (v != l && !std::binary_search(nb.begin(), nb.end(), v)) return false;
  }
  return true;
}

bool sorted_contains(std::span<const NodeId> set, NodeId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

NodeSet normalized(std::span<const NodeId> s) {
  NodeSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

NodeSet find_key_nodes(const SocialGraph& g, std::span<const NodeId> s) {
  if (s.empty()) throw std::invalid_argument("key node search needs a nonempty set");
  NodeSet set = normalized(s);
  NodeSet keys;
  for (NodeId l : set) {
    if (!g.contains(l)) throw std::invalid_argument("node out of range");
    if (is_key_node(g, l, set)) keys.push_back(l);
  }
  return keys;
}

FeasibilityVerdict check_expansion_feasibility(const SocialGraph& g, const RcpPolicy& p,
                                               const ExpansionDuplet& d,
                                               std::span<const NodeId> current_backbone) {
  const NodeSet backbone = normalized(current_backbone);
  const NodeSet R = normalized(d.sentinels);
  const NodeSet Q = normalized(d.candidates);
  if (Q.empty()) throw std::invalid_argument("candidate set must be nonempty");
  for (NodeId v : R) {
    if (!g.contains(v)) throw std::invalid_argument("sentinel out of range");
    if (!sorted_contains(backbone, v)) {
      throw std::invalid_argument(fmt::format("sentinel {} is not in the backbone", g.label(v)));
    }
  }
  for (NodeId v : Q) {
    if (!g.contains(v)) throw std::invalid_argument("candidate out of range");
    if (sorted_contains(backbone, v)) {
      throw std::invalid_argument(fmt::format("candidate {} is already in the backbone", g.label(v)));
    }
  }
  if (d.key_node && !g.contains(*d.key_node)) throw std::invalid_argument("key node out of range");

  NodeSet expansion;
  std::set_union(R.begin(), R.end(), Q.begin(), Q.end(), std::back_inserter(expansion));

  FeasibilityVerdict verdict;
  auto fail = [&](Violation v) {
    if (std::find(verdict.violations.begin(), verdict.violations.end(), v) ==
        verdict.violations.end()) {
      verdict.violations.push_back(v);
    }
  };

  // P1: a key node exists and the expansion set is connected.
  NodeSet keys;
  for (NodeId l : expansion) {
    if (is_key_node(g, l, expansion)) keys.push_back(l);
  }
  if (d.key_node) {
    if (!sorted_contains(keys, *d.key_node)) {
      fail(Violation::kKeyNodeMismatch);
      keys.clear();
    } else {
      keys = {*d.key_node};
    }
  }
  bool p1 = !keys.empty();
  if (keys.empty() && !d.key_node) fail(Violation::kNoKeyNode);
  if (!is_connected_set(g, expansion)) {
    p1 = false;
    fail(Violation::kExpansionSetDisconnected);
  }

  bool r_connected = !R.empty() && is_connected_set(g, R);
  if (R.empty()) {
    fail(Violation::kSentinelsEmpty);
  } else if (!r_connected) {
    fail(Violation::kSentinelsDisconnected);
  }

  // Branch A: key node in R, 1 <= |R| < alpha, every q a beta-strong friend of l.
  bool branch_a = false;
  {
    bool size_ok = !R.empty() && R.size() < p.alpha();
    if (!R.empty() && !size_ok) fail(Violation::kSentinelsTooMany);
    bool any_key_in_r = false;
    bool any_strong_key = false;
    for (NodeId l : keys) {
      if (!sorted_contains(R, l)) continue;
      any_key_in_r = true;
      bool all_strong = true;
      for (NodeId q : Q) {
        if (!g.has_edge(l, q)) {
          fail(Violation::kCandidateNotAdjacentToKey);
          all_strong = false;
          break;
        }
        if (count_common(g.neighbors(l), g.neighbors(q)) < p.beta()) {
          all_strong = false;
          break;
        }
      }
      if (all_strong) {
        any_strong_key = true;
        break;
      }
    }
    if (p1 && !any_key_in_r) fail(Violation::kNoKeyNodeInSentinels);
    if (any_key_in_r && !any_strong_key) fail(Violation::kCandidateWeakTie);
    branch_a = p1 && r_connected && size_ok && any_strong_key;
  }

  // Branch B: |R| >= alpha, every candidate is a key node of R ∪ Q.
  bool branch_b = false;
  {
    bool size_ok = R.size() >= p.alpha();
    if (!size_ok) fail(Violation::kSentinelsTooFew);
    bool all_keys = true;
    for (NodeId q : Q) {
      if (!is_key_node(g, q, expansion)) {
        all_keys = false;
        break;
      }
    }
    if (!all_keys) fail(Violation::kCandidateNotKeyNode);
    bool key_in_q = !d.key_node || sorted_contains(Q, *d.key_node);
    if (d.key_node && !key_in_q) fail(Violation::kKeyNodeMismatch);
    branch_b = p1 && r_connected && size_ok && all_keys && key_in_q;
  }

  if (branch_a || branch_b) {
    verdict.feasible = true;
    verdict.branch = branch_a ? Branch::kA : Branch::kB;
    verdict.violations.clear();
  }
  return verdict;
}

}  // namespace rcp
