#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rcp/analysis.hpp"
#include "rcp/generators.hpp"

using namespace rcp;

TEST(BetaRange, Parse) {
  EXPECT_EQ(BetaRange::parse("3:5").values(), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(BetaRange::parse("4").values(), (std::vector<std::size_t>{4}));
  EXPECT_THROW(BetaRange::parse("5:3"), std::invalid_argument);
  EXPECT_THROW(BetaRange::parse("0:2"), std::invalid_argument);
  EXPECT_THROW(BetaRange::parse("a:b"), std::invalid_argument);
  EXPECT_THROW(BetaRange::parse("-1:2"), std::invalid_argument);
  EXPECT_THROW(BetaRange::parse(""), std::invalid_argument);
}

TEST(DegreeBuckets, PowersOfTwo) {
  auto b0 = power_of_two_buckets(0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0[0].name(), "[0,1)");
  auto b5 = power_of_two_buckets(5);
  ASSERT_EQ(b5.size(), 4u);
  EXPECT_EQ(b5.back().lo, 4u);
  EXPECT_EQ(b5.back().hi, 8u);
  EXPECT_TRUE(b5.back().contains(5));
  auto b8 = power_of_two_buckets(8);
  EXPECT_TRUE(b8.back().contains(8));
}

TEST(DegreeBuckets, FromCutPoints) {
  auto b = buckets_from_edges({2, 10});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_TRUE(b[0].contains(1));
  EXPECT_TRUE(b[2].contains(1000000));
  EXPECT_EQ(b[2].name(), "[10,inf)");
  EXPECT_THROW(buckets_from_edges({5, 5}), std::invalid_argument);
  EXPECT_THROW(buckets_from_edges({0}), std::invalid_argument);
}

TEST(Sweep, LargeCliqueQualifiesEverywhere) {
  SocialGraph g = fixtures::complete(200);
  auto r = sweep_domains(g, BetaRange::parse("3:5"), 100);
  ASSERT_EQ(r.rows.size(), 3 * r.buckets.size());
  for (const auto& row : r.rows) {
    if (row.nodes > 0) EXPECT_DOUBLE_EQ(row.fraction(), 1.0);
    EXPECT_EQ(row.alpha, row.beta + 1);
  }
  auto csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta,alpha,degree_lo,degree_hi,nodes,qualifying,fraction");
  EXPECT_NE(csv.find("3,4,128,256,200,200,1.000000"), std::string::npos);
  EXPECT_EQ(r.to_json()["rows"].size(), r.rows.size());
}

TEST(Sweep, EdgelessGraph) {
  std::vector<Edge> none;
  SocialGraph empty = SocialGraph::from_edges(5, none);
  auto r = sweep_domains(empty, BetaRange::parse("1:3"), 2);
  for (const auto& row : r.rows) EXPECT_EQ(row.fraction(), 0.0);
  EXPECT_EQ(r.buckets.size(), 1u);
}

TEST(Sweep, FixedAlphaAndCustomBuckets) {
  SocialGraph g = fixtures::ladder();
  auto r = sweep_domains(g, BetaRange::parse("3"), 14, 4, buckets_from_edges({4}));
  ASSERT_EQ(r.rows.size(), 2u);
  // p1..p4 reach the 14-node domain; m has degree 4 but a 5-node domain.
  EXPECT_EQ(r.rows[1].nodes, 5u);
  EXPECT_EQ(r.rows[1].qualifying, 4u);
  EXPECT_EQ(r.rows[0].qualifying, 0u);
}

TEST(Sweep, NonIncreasingInBetaOnClusteredGraph) {
  ClusteredGraphConfig cfg;
  cfg.nodes = 3000;
  cfg.memberships = 3.0;
  auto g = generate_clustered_graph(cfg, 4).graph;
  auto r = sweep_domains(g, BetaRange::parse("2:6"), 50);
  const std::size_t nb = r.buckets.size();
  std::size_t positive = 0;
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t k = 1; k < 5; ++k) {
      EXPECT_LE(r.fraction(k, b), r.fraction(k - 1, b)) << "bucket " << b << " beta index " << k;
    }
    positive += r.fraction(0, b) > 0.0;
  }
  EXPECT_GT(positive, 0u);
}

TEST(Puls, SingleGroupClique) {
  SocialGraph g = fixtures::complete(10);
  std::vector<std::pair<std::string, std::string>> attrs;
  for (NodeId v = 0; v < 10; ++v) attrs.emplace_back(g.label(v), "all");
  auto t = compute_puls(g, attrs, BetaRange::parse("3"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_DOUBLE_EQ(t.rows[0].puls(), 1.0);
  EXPECT_EQ(t.largest_size.front().second, 10u);
}

TEST(Puls, GroupOutsideLargestSupercore) {
  // K6 holds the largest supercore; a separate triangle is group "two".
  std::string text;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) text += "a" + std::to_string(i) + " a" + std::to_string(j) + "\n";
  }
  text += "t0 t1\nt1 t2\nt2 t0\n";
  SocialGraph g = fixtures::from_text(text);
  std::vector<std::pair<std::string, std::string>> attrs;
  for (int i = 0; i < 6; ++i) attrs.emplace_back("a" + std::to_string(i), "one");
  for (int i = 0; i < 3; ++i) attrs.emplace_back("t" + std::to_string(i), "two");
  attrs.emplace_back("ghost", "two");
  auto t = compute_puls(g, attrs, BetaRange::parse("3:4"));
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows[0].group, "one");
  EXPECT_EQ(t.rows[0].beta, 3u);
  EXPECT_DOUBLE_EQ(t.rows[0].puls(), 1.0);
  EXPECT_EQ(t.rows[2].group, "two");
  EXPECT_DOUBLE_EQ(t.rows[2].puls(), 0.0);
  EXPECT_EQ(t.rows[2].group_size, 3u);
  EXPECT_EQ(t.unknown_labels, std::vector<std::string>{"ghost"});
  EXPECT_NE(t.to_csv().find("two,3,4,3,0,0.000000"), std::string::npos);
}

TEST(Puls, NoKnownLabelsIsAnError) {
  SocialGraph g = fixtures::complete(4);
  EXPECT_THROW(compute_puls(g, {{"zz", "g"}}, BetaRange::parse("3")), std::invalid_argument);
}

TEST(Puls, BalancedCommunitiesSpreadEvenly) {
  ClusteredGraphConfig cfg;
  cfg.nodes = 4000;
  cfg.communities = 2;
  cfg.mixing = 0.3;
  cfg.memberships = 3.0;
  auto cg = generate_clustered_graph(cfg, 12);
  std::vector<std::pair<std::string, std::string>> attrs;
  for (NodeId v = 0; v < cfg.nodes; ++v) {
    attrs.emplace_back(cg.graph.label(v), cg.community[v] == 0 ? "east" : "west");
  }
  auto t = compute_puls(cg.graph, attrs, BetaRange::parse("3"));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_GT(t.rows[0].puls(), 0.1);
  EXPECT_LE(std::abs(t.rows[0].puls() - t.rows[1].puls()), 0.15);
}

TEST(Formatting, SixDecimals) {
  EXPECT_EQ(fixed6(1.0 / 3.0), "0.333333");
  EXPECT_EQ(fixed6(0.0), "0.000000");
  EXPECT_DOUBLE_EQ(round6(0.1234567), 0.123457);
}
