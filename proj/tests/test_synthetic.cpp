#include <gtest/gtest.h>

#include <set>

#include "etlink/graph.hpp"
#include "etlink/synthetic.hpp"

using namespace etlink;

TEST(PreferentialAttachment, ShapeAndDeterminism) {
  PreferentialAttachmentOptions o;
  o.nodes = 200;
  o.edges_per_node = 4;
  o.seed = 9;
  const auto a = preferential_attachment(o);
  const auto b = preferential_attachment(o);
  ASSERT_EQ(a.size(), 4u * 5 / 2 + (200u - 5) * 4);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].src, b[k].src);
    EXPECT_EQ(a[k].timestamp, b[k].timestamp);
  }
  const Graph g = Graph::build(a, false, false);
  EXPECT_EQ(g.n(), 200u);
  EXPECT_EQ(g.m(), a.size());  // no duplicate edges
  EXPECT_EQ(g.self_loop_count(), 0u);
  EXPECT_EQ(connectivity(g), Connectivity::Connected);
  std::set<std::int64_t> times;
  for (const auto& r : a) times.insert(*r.timestamp);
  EXPECT_EQ(times.size(), a.size());

  o.seed = 10;
  const auto c = preferential_attachment(o);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) differs |= a[k].src != c[k].src || a[k].dst != c[k].dst;
  EXPECT_TRUE(differs);
}

TEST(PreferentialAttachment, GrowthOrder) {
  PreferentialAttachmentOptions o;
  o.nodes = 20;
  o.edges_per_node = 2;
  o.order = TimestampOrder::Growth;
  const auto a = preferential_attachment(o);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(*a[k].timestamp, std::int64_t(k));
  EXPECT_EQ(a.back().dst, "19");
}

TEST(PreferentialAttachment, Validation) {
  PreferentialAttachmentOptions o;
  o.edges_per_node = 0;
  EXPECT_THROW(preferential_attachment(o), std::invalid_argument);
  o.edges_per_node = 5;
  o.nodes = 5;
  EXPECT_THROW(preferential_attachment(o), std::invalid_argument);
}

TEST(RandomStrongDigraph, IsStronglyConnected) {
  const auto r = random_strong_digraph(30, 0.05, 3);
  const Graph g = Graph::build(r, true, false);
  EXPECT_EQ(g.n(), 30u);
  EXPECT_EQ(connectivity(g), Connectivity::StronglyConnected);
  EXPECT_THROW(random_strong_digraph(1, 0.5, 1), std::invalid_argument);
}
