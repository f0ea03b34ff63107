#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rcp/percolation.hpp"
#include "rcp/policy.hpp"

using namespace rcp;
using fixtures::id;
using fixtures::ids;

TEST(RcpPolicy, RejectsZeroParameters) {
  EXPECT_THROW(RcpPolicy(0, 3), std::invalid_argument);
  EXPECT_THROW(RcpPolicy(4, 0), std::invalid_argument);
  EXPECT_TRUE(RcpPolicy(4, 3).resilience_aligned());
  EXPECT_FALSE(RcpPolicy(3, 3).resilience_aligned());
}

TEST(BehaviorParams, Validation) {
  EXPECT_NO_THROW(BehaviorParams::make(0.05, 3, 4));
  EXPECT_THROW(BehaviorParams::make(0.0, 3, 4), std::invalid_argument);
  EXPECT_THROW(BehaviorParams::make(1.0, 3, 4), std::invalid_argument);
  EXPECT_THROW(BehaviorParams::make(0.05, 0, 4), std::invalid_argument);
  EXPECT_THROW(BehaviorParams::make(0.05, 3, 3), std::invalid_argument);
}

TEST(PolicyAlignment, Examples) {
  EXPECT_TRUE(validate_policy_alignment(RcpPolicy(4, 3), BehaviorParams::make(0.05, 3, 4)));
  EXPECT_FALSE(validate_policy_alignment(RcpPolicy(3, 3), BehaviorParams::make(0.05, 3, 4)));
  EXPECT_TRUE(validate_policy_alignment(RcpPolicy(5, 3), BehaviorParams::make(0.05, 2, 3)));
  EXPECT_FALSE(validate_policy_alignment(RcpPolicy(5, 2), BehaviorParams::make(0.05, 3, 4)));
}

TEST(KeyNodes, Examples) {
  SocialGraph k3 = fixtures::complete(3);
  EXPECT_EQ(find_key_nodes(k3, NodeSet{0, 1, 2}), (NodeSet{0, 1, 2}));
  SocialGraph path = fixtures::from_text("a b\nb c\n");
  EXPECT_EQ(find_key_nodes(path, ids(path, {"a", "b", "c"})), ids(path, {"b"}));
  SocialGraph ladder = fixtures::ladder();
  EXPECT_EQ(find_key_nodes(ladder, ids(ladder, {"p1", "p2", "p3", "p4", "m"})),
            ids(ladder, {"m"}));
  EXPECT_THROW(find_key_nodes(k3, NodeSet{}), std::invalid_argument);
}

TEST(Feasibility, LadderBranchB) {
  SocialGraph g = fixtures::ladder();
  NodeSet backbone = ids(g, {"p1", "p2", "p3", "p4"});
  ExpansionDuplet d{backbone, ids(g, {"m"}), std::nullopt};
  auto v = check_expansion_feasibility(g, RcpPolicy(4, 3), d, backbone);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.branch, Branch::kB);
  EXPECT_TRUE(v.violations.empty());
  for (const char* p : {"p1", "p2", "p3", "p4"}) {
    EXPECT_LE(tie_strength(g, id(g, "m"), id(g, p)), 2u);
  }
}

TEST(Feasibility, BranchAWithThreeCommonFriends) {
  SocialGraph g = fixtures::from_text(
      "l q\nl c1\nl c2\nl c3\nq c1\nq c2\nq c3\n");
  NodeSet backbone = ids(g, {"l"});
  ExpansionDuplet d{backbone, ids(g, {"q"}), std::nullopt};
  auto v = check_expansion_feasibility(g, RcpPolicy(4, 3), d, backbone);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.branch, Branch::kA);
}

TEST(Feasibility, WeakSingleTieIsRejected) {
  SocialGraph g = fixtures::from_text("l q\n");
  NodeSet backbone = ids(g, {"l"});
  ExpansionDuplet d{backbone, ids(g, {"q"}), std::nullopt};
  auto v = check_expansion_feasibility(g, RcpPolicy(4, 3), d, backbone);
  EXPECT_FALSE(v.feasible);
  EXPECT_EQ(v.branch, Branch::kNone);
  auto has = [&](Violation x) {
    return std::find(v.violations.begin(), v.violations.end(), x) != v.violations.end();
  };
  EXPECT_TRUE(has(Violation::kCandidateWeakTie));
  EXPECT_TRUE(has(Violation::kSentinelsTooFew));
  auto j = v.to_json();
  EXPECT_EQ(j["feasible"], false);
  EXPECT_EQ(j["branch"], "none");
}

TEST(Feasibility, CrossPairingIsRejected) {
  // Key node in R with |R| < alpha, and q is a key node of R ∪ Q, but the tie
  // is weak: neither paired branch holds.
  SocialGraph g = fixtures::from_text("a b\nb q\na q\n");
  NodeSet backbone = ids(g, {"a", "b"});
  ExpansionDuplet d{backbone, ids(g, {"q"}), std::nullopt};
  auto v = check_expansion_feasibility(g, RcpPolicy(4, 3), d, backbone);
  EXPECT_FALSE(v.feasible);
}

TEST(Feasibility, PreconditionBreaches) {
  SocialGraph g = fixtures::ladder();
  NodeSet backbone = ids(g, {"p1"});
  EXPECT_THROW(check_expansion_feasibility(g, RcpPolicy(4, 3), {backbone, {}, std::nullopt},
                                           backbone),
               std::invalid_argument);
  EXPECT_THROW(check_expansion_feasibility(g, RcpPolicy(4, 3),
                                           {ids(g, {"p2"}), ids(g, {"m"}), std::nullopt}, backbone),
               std::invalid_argument);
  EXPECT_THROW(check_expansion_feasibility(g, RcpPolicy(4, 3),
                                           {backbone, ids(g, {"p1"}), std::nullopt}, backbone),
               std::invalid_argument);
}

TEST(Feasibility, ExplicitKeyNode) {
  SocialGraph g = fixtures::complete(5);
  NodeSet backbone{0};
  ExpansionDuplet ok{backbone, {1}, NodeId{0}};
  EXPECT_TRUE(check_expansion_feasibility(g, RcpPolicy(4, 3), ok, backbone).feasible);
  SocialGraph path = fixtures::from_text("a b\nb c\n");
  NodeSet pb = ids(path, {"a", "b"});
  ExpansionDuplet wrong{pb, ids(path, {"c"}), id(path, "a")};
  auto v = check_expansion_feasibility(path, RcpPolicy(1, 1), wrong, pb);
  EXPECT_FALSE(v.feasible);
}

namespace {

// Feasibility spelled out from the two paired branches, on std::set adjacency.
bool feasible_by_definition(const SocialGraph& g, const RcpPolicy& p, const NodeSet& R,
                            const NodeSet& Q) {
  auto adj = oracle::adjacency(g);
  std::set<NodeId> rs(R.begin(), R.end());
  std::set<NodeId> u(R.begin(), R.end());
  u.insert(Q.begin(), Q.end());
  auto key_of = [&](NodeId l, const std::set<NodeId>& s) {
    for (NodeId v : s) {
      if (v != l && !adj[l].count(v)) return false;
    }
    return true;
  };
  auto connected = [&](const std::set<NodeId>& s) {
    auto sizes = oracle::component_sizes(adj, s);
    return sizes.size() == 1;
  };
  if (R.empty() || !connected(rs) || !connected(u)) return false;
  if (R.size() < p.alpha()) {
    for (NodeId l : R) {
      if (!key_of(l, u)) continue;
      bool all = true;
      for (NodeId q : Q) {
        if (!adj[l].count(q) || oracle::strength(adj, l, q) < p.beta()) all = false;
      }
      if (all) return true;
    }
    return false;
  }
  for (NodeId q : Q) {
    if (!key_of(q, u)) return false;
  }
  return true;
}

std::vector<NodeSet> subsets_of(const NodeSet& s, std::size_t max_size) {
  std::vector<NodeSet> out;
  const std::size_t n = s.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
    NodeSet sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(s[i]);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

TEST(FeasibilityProperties, AgreesWithDefinitionOnRandomDuplets) {
  fixtures::RandomGraphs gen(21);
  std::size_t checked = 0;
  std::size_t feasible = 0;
  for (int t = 0; t < 60; ++t) {
    SocialGraph g = gen.next(4, 9);
    for (std::uint32_t alpha : {2u, 3u}) {
      for (std::uint32_t beta : {1u, 2u}) {
        RcpPolicy p(alpha, beta);
        NodeSet backbone{0};
        for (NodeId w : g.neighbors(0)) {
          if (backbone.size() < 4) backbone.push_back(w);
        }
        std::sort(backbone.begin(), backbone.end());
        NodeSet outside;
        for (NodeId v = 0; v < g.node_count(); ++v) {
          if (!std::binary_search(backbone.begin(), backbone.end(), v)) outside.push_back(v);
        }
        if (outside.empty()) continue;
        for (const auto& R : subsets_of(backbone, 4)) {
          for (const auto& Q : subsets_of(outside, 2)) {
            bool got = check_expansion_feasibility(g, p, {R, Q, std::nullopt}, backbone).feasible;
            ASSERT_EQ(got, feasible_by_definition(g, p, R, Q));
            ++checked;
            feasible += got;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
  EXPECT_GT(feasible, 0u);
}

TEST(FeasibilityProperties, MonotoneInBeta) {
  fixtures::RandomGraphs gen(8);
  for (int t = 0; t < 40; ++t) {
    SocialGraph g = gen.next(5, 9);
    NodeSet small{0};
    NodeSet rest;
    for (NodeId v = 1; v < g.node_count(); ++v) rest.push_back(v);
    for (const auto& R : subsets_of(NodeSet{0}, 1)) {
      for (const auto& Q : subsets_of(rest, 2)) {
        for (std::uint32_t a = 1; a <= 3; ++a) {
          for (std::uint32_t b = 1; b <= 3; ++b) {
            bool base =
                check_expansion_feasibility(g, RcpPolicy(a, b), {R, Q, std::nullopt}, small).feasible;
            bool higher = check_expansion_feasibility(g, RcpPolicy(a, b + 1), {R, Q, std::nullopt},
                                                      small).feasible;
            EXPECT_LE(higher, base);
          }
        }
      }
    }
  }
}

TEST(FeasibilityProperties, AlphaCanMoveADupletAcrossBranches) {
  // R = {a, b}, Q = {q}: q is a strong friend of a but not adjacent to b.
  // With alpha = 2 only branch B applies and fails; with alpha = 3 branch A
  // admits q. Raising alpha alone can therefore make a fixed duplet feasible,
  // while whole backbones still shrink (see the percolation tests).
  SocialGraph g = fixtures::from_text("a b\na q\na w1\na w2\nq w1\nq w2\n");
  NodeSet backbone = ids(g, {"a", "b"});
  ExpansionDuplet d{backbone, ids(g, {"q"}), std::nullopt};
  EXPECT_FALSE(check_expansion_feasibility(g, RcpPolicy(2, 2), d, backbone).feasible);
  auto v = check_expansion_feasibility(g, RcpPolicy(3, 2), d, backbone);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.branch, Branch::kA);
}

TEST(FeasibilityProperties, SupersetBackboneKeepsVerdict) {
  fixtures::RandomGraphs gen(13);
  for (int t = 0; t < 40; ++t) {
    SocialGraph g = gen.next(5, 9);
    RcpPolicy p(2, 1);
    NodeSet R{0};
    for (NodeId q = 1; q < g.node_count(); ++q) {
      NodeSet small{0};
      NodeSet big{0};
      for (NodeId v = 1; v < g.node_count(); ++v) {
        if (v != q && v % 2 == 0) big.push_back(v);
      }
      auto a = check_expansion_feasibility(g, p, {R, {q}, std::nullopt}, small);
      auto b = check_expansion_feasibility(g, p, {R, {q}, std::nullopt}, big);
      EXPECT_EQ(a.feasible, b.feasible);
      EXPECT_EQ(a.branch, b.branch);
    }
  }
}

TEST(FeasibilityProperties, BranchAInvariantUnderEnlargingR) {
  // l with strong friend q, plus extra backbone nodes adjacent to l and q.
  SocialGraph g = fixtures::complete(6);
  RcpPolicy p(5, 3);
  NodeSet backbone{0, 1, 2, 3};
  for (std::size_t k = 1; k <= 4; ++k) {
    NodeSet R(backbone.begin(), backbone.begin() + static_cast<std::ptrdiff_t>(k));
    auto v = check_expansion_feasibility(g, p, {R, {5}, NodeId{0}}, backbone);
    EXPECT_TRUE(v.feasible) << "|R| = " << k;
    EXPECT_EQ(v.branch, Branch::kA);
  }
}
