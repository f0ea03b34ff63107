#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rcp/analysis.hpp"
#include "rcp/generators.hpp"
#include "rcp/percolation.hpp"
#include "rcp/resilience.hpp"
#include "rcp/supercore.hpp"

using namespace rcp;

TEST(Properties, ConfluenceUnderShuffledWorklists) {
  fixtures::RandomGraphs gen(101);
  for (int t = 0; t < 25; ++t) {
    SocialGraph g = gen.next(2, 60);
    for (RcpPolicy p : {RcpPolicy(2, 1), RcpPolicy(4, 3)}) {
      BackboneComposer composer(g, p);
      for (NodeId c = 0; c < g.node_count(); ++c) {
        NodeSet ordered = composer.compose(c).members;
        for (std::uint64_t s = 1; s <= 4; ++s) {
          ASSERT_EQ(composer.compose(c, {}, s * 7919 + c).members, ordered);
        }
      }
    }
  }
}

TEST(Properties, CenterMembershipAndConnectivity) {
  fixtures::RandomGraphs gen(103);
  for (int t = 0; t < 30; ++t) {
    SocialGraph g = gen.next(1, 50);
    BackboneComposer composer(g, RcpPolicy(3, 2));
    for (NodeId c = 0; c < g.node_count(); ++c) {
      NodeSet b = composer.compose(c).members;
      ASSERT_TRUE(std::binary_search(b.begin(), b.end(), c));
      ASSERT_TRUE(is_connected_set(g, b));
    }
  }
}

TEST(Properties, MutualContainment) {
  fixtures::RandomGraphs gen(107);
  for (int t = 0; t < 30; ++t) {
    SocialGraph g = gen.next(2, 50);
    RcpPolicy p(3, 2);
    BackboneComposer composer(g, p);
    std::vector<NodeSet> all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = composer.compose(v).members;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      for (NodeId j : all[i]) ASSERT_TRUE(oracle::subset(all[j], all[i]));
    }
  }
}

TEST(Properties, NestedPoliciesNeverEnlargeBackbones) {
  fixtures::RandomGraphs gen(109);
  for (int t = 0; t < 30; ++t) {
    SocialGraph g = gen.next(2, 40);
    for (std::uint32_t a = 1; a <= 4; ++a) {
      for (std::uint32_t b = 1; b <= 3; ++b) {
        BackboneComposer loose(g, RcpPolicy(a, b));
        BackboneComposer tighter_a(g, RcpPolicy(a + 1, b));
        BackboneComposer tighter_b(g, RcpPolicy(a, b + 1));
        for (NodeId c = 0; c < g.node_count(); ++c) {
          NodeSet base = loose.compose(c).members;
          ASSERT_TRUE(oracle::subset(tighter_a.compose(c).members, base));
          ASSERT_TRUE(oracle::subset(tighter_b.compose(c).members, base));
        }
      }
    }
  }
}

TEST(Properties, SupercoresPartitionAndCondenseAcyclically) {
  fixtures::RandomGraphs gen(113);
  for (int t = 0; t < 40; ++t) {
    SocialGraph g = gen.next(1, 60);
    SupercorePipeline pipe(g, RcpPolicy(3, 2));
    std::vector<int> seen(g.node_count(), 0);
    for (const auto& core : pipe.dag.supercores) {
      for (NodeId v : core) ++seen[v];
    }
    for (int c : seen) ASSERT_EQ(c, 1);
    ASSERT_TRUE(is_acyclic(pipe.dag));
  }
}

TEST(Properties, PipelineIsSoundAgainstDirectComposition) {
  fixtures::RandomGraphs gen(127);
  for (int t = 0; t < 40; ++t) {
    SocialGraph g = gen.next(2, 60);
    for (RcpPolicy p : {RcpPolicy(2, 1), RcpPolicy(4, 3)}) {
      SupercorePipeline pipe(g, p);
      BackboneComposer composer(g, p);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        ASSERT_TRUE(oracle::subset(pipe.backbone_of(v), composer.compose(v).members));
      }
    }
  }
}

TEST(Properties, TieStrengthSymmetric) {
  fixtures::RandomGraphs gen(131);
  for (int t = 0; t < 20; ++t) {
    SocialGraph g = gen.next(2, 40);
    for (NodeId i = 0; i < g.node_count(); ++i) {
      for (NodeId j = i + 1; j < g.node_count(); ++j) {
        ASSERT_EQ(tie_strength(g, i, j), tie_strength(g, j, i));
      }
    }
  }
}

TEST(Properties, PipelineDeterministic) {
  fixtures::RandomGraphs gen(137);
  for (int t = 0; t < 10; ++t) {
    SocialGraph g = gen.next(5, 60);
    SupercorePipeline a(g, RcpPolicy(3, 2));
    SupercorePipeline b(g, RcpPolicy(3, 2));
    ASSERT_EQ(a.to_json(true), b.to_json(true));
  }
}

TEST(Properties, BotEdgesNeverChangeGoodBackbones) {
  PlantedConfig cfg;
  cfg.n_good = 300;
  cfg.n_bad = 15;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto pg = generate_planted_graph(cfg, seed);
    AttackSpec spec;
    spec.bots = 150;
    spec.bot_density = 0.4;
    spec.seed = seed;
    auto out = mass_infiltration_attack(pg, spec, RcpPolicy(4, 3));
    BackboneComposer before(pg.graph, RcpPolicy(4, 3));
    BackboneComposer after(out.attacked.graph, RcpPolicy(4, 3));
    for (NodeId c : pg.good_nodes()) {
      ASSERT_EQ(before.compose(c).members, after.compose(c).members);
    }
  }
}

TEST(Properties, AnalyticBoundBelowR) {
  fixtures::RandomGraphs gen(139);
  std::mt19937_64 rng(139);
  for (int t = 0; t < 30; ++t) {
    SocialGraph g = gen.next(1, 40);
    double r = std::uniform_real_distribution<double>(0.001, 0.999)(rng);
    BackboneComposer composer(g, RcpPolicy(3, 2));
    for (NodeId c = 0; c < g.node_count(); ++c) {
      ASSERT_LT(analytic_bound(g, composer.compose(c).members, r), r);
    }
  }
}

TEST(Properties, SweepDegreeMonotoneOnClusteredGraph) {
  ClusteredGraphConfig cfg;
  cfg.nodes = 5000;
  auto g = generate_clustered_graph(cfg, 21).graph;
  auto r = sweep_domains(g, BetaRange::parse("3:5"), 100);
  for (std::size_t k = 0; k < r.rows.size() / r.buckets.size(); ++k) {
    double prev = 0.0;
    for (std::size_t b = 0; b < r.buckets.size(); ++b) {
      if (r.rows[k * r.buckets.size() + b].nodes == 0) continue;
      double f = r.fraction(k, b);
      EXPECT_GE(f, prev) << "beta index " << k << " bucket " << r.buckets[b].name();
      prev = f;
    }
  }
}
