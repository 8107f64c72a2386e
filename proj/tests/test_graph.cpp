#include <gtest/gtest.h>

#include "etlink/graph.hpp"
#include "oracles.hpp"

using namespace etlink;

namespace {

EdgeRecord rec(std::string s, std::string d, std::optional<double> w = std::nullopt,
               std::optional<std::int64_t> t = std::nullopt) {
  return {std::move(s), std::move(d), w, t};
}

std::vector<std::string> labels_of(const Graph& g, std::span<const NodeId> ids) {
  std::vector<std::string> out;
  for (NodeId v : ids) out.push_back(g.label(v));
  return out;
}

}  // namespace

TEST(LabelOrder, IntegersFirstThenLexicographic) {
  EXPECT_TRUE(label_less("2", "10"));
  EXPECT_FALSE(label_less("10", "2"));
  EXPECT_TRUE(label_less("-3", "1"));
  EXPECT_TRUE(label_less("999", "a"));
  EXPECT_TRUE(label_less("B", "a"));
  EXPECT_TRUE(label_less("1a", "a"));  // not an integer, compared as text
  EXPECT_FALSE(label_less("x", "x"));
  // Same value, different spelling: still a strict order.
  EXPECT_TRUE(label_less("007", "7") != label_less("7", "007"));
}

TEST(Graph, FirstAppearanceNumbering) {
  const std::vector<EdgeRecord> r{rec("b", "a"), rec("c", "b")};
  const Graph g = Graph::build(r, true, false);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(g.label_rank()[0], 1u);
  EXPECT_EQ(g.label_rank()[1], 0u);
  EXPECT_EQ(*g.find("c"), 2u);
  EXPECT_FALSE(g.find("zz"));
}

TEST(Graph, LabelOrderNumbering) {
  const std::vector<EdgeRecord> r{rec("10", "x"), rec("2", "10")};
  const Graph g = Graph::build(r, true, false, NodeNumbering::LabelOrder);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"2", "10", "x"}));
  EXPECT_TRUE(g.has_edge(*g.find("10"), *g.find("x")));
}

TEST(Graph, DuplicatesKeepFirstWeightAndEarliestTimestamp) {
  const std::vector<EdgeRecord> r{rec("a", "b", 2.0, 9), rec("a", "b", 5.0, 3), rec("b", "a", 1.0, 1)};
  const Graph d = Graph::build(r, true, true);
  ASSERT_EQ(d.m(), 2u);
  EXPECT_EQ(d.edges()[0].weight, 2.0);
  EXPECT_EQ(*d.edges()[0].timestamp, 3);

  const Graph u = Graph::build(r, false, true);
  ASSERT_EQ(u.m(), 1u);
  EXPECT_EQ(u.edges()[0].weight, 2.0);
  EXPECT_EQ(*u.edges()[0].timestamp, 1);
  EXPECT_LE(u.edges()[0].src, u.edges()[0].dst);
}

TEST(Graph, UndirectedAdjacencyIsSymmetric) {
  const Graph g = Graph::from_pairs({{2, 1}, {2, 3}}, false);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.out_degree(1), 2u);
  EXPECT_EQ(g.in_neighbors(1).size(), 2u);
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, WeightErrors) {
  const std::vector<EdgeRecord> missing{rec("a", "b")};
  EXPECT_THROW(Graph::build(missing, true, true), std::invalid_argument);
  const std::vector<EdgeRecord> zero{rec("a", "b", 0.0)};
  EXPECT_THROW(Graph::build(zero, true, true), std::invalid_argument);
  // Unweighted graphs ignore the column entirely.
  EXPECT_NO_THROW(Graph::build(zero, true, false));
  const std::vector<EdgeRecord> empty_label{rec("", "b")};
  EXPECT_THROW(Graph::build(empty_label, true, false), std::invalid_argument);
}

TEST(Graph, SelfLoopsAndWeights) {
  const std::vector<EdgeRecord> r{rec("a", "a", 3.0), rec("a", "b", 0.5)};
  const Graph g = Graph::build(r, true, true);
  EXPECT_EQ(g.self_loop_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 0));
  const auto w = g.out_weights(0);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], 3.0);
  EXPECT_EQ(w[1], 0.5);
}

TEST(Graph, DistinctIds) {
  const Graph a = Graph::from_pairs({{1, 2}}, true);
  const Graph b = Graph::from_pairs({{1, 2}}, true);
  EXPECT_NE(a.id(), b.id());
}

TEST(Graph, FromEdgesValidates) {
  const Edge bad[] = {{0, 5, 1.0, std::nullopt}};
  EXPECT_THROW(Graph::from_edges({"a", "b"}, bad, true, false), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges({"a", "a"}, {}, true, false), std::invalid_argument);
  const Graph iso = Graph::from_edges({"a", "b", "c"}, {}, false, false);
  EXPECT_EQ(iso.n(), 3u);
  EXPECT_EQ(connectivity(iso), Connectivity::Disconnected);
}

TEST(Connectivity, Classification) {
  EXPECT_EQ(connectivity(oracle::example_graph()), Connectivity::StronglyConnected);
  EXPECT_EQ(connectivity(Graph::from_pairs({{1, 2}, {2, 3}}, true)), Connectivity::WeaklyConnected);
  EXPECT_EQ(connectivity(Graph::from_pairs({{1, 2}, {3, 4}}, true)), Connectivity::Disconnected);
  EXPECT_EQ(connectivity(Graph::from_pairs({{1, 2}, {2, 3}}, false)), Connectivity::Connected);
  EXPECT_EQ(connectivity(Graph::from_pairs({{1, 2}, {3, 4}}, false)), Connectivity::Disconnected);
  EXPECT_EQ(to_string(Connectivity::StronglyConnected), "strongly-connected");
}

TEST(Connectivity, StrongComponents) {
  // {1,2,3} cycle, 3 -> 4, {4,5} cycle, 6 isolated via 5 -> 6.
  const Graph g = Graph::from_pairs({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 4}, {5, 6}}, true);
  auto comps = connected_components(g);
  std::vector<std::vector<std::string>> named;
  for (const auto& c : comps) named.push_back(labels_of(g, c));
  std::sort(named.begin(), named.end());
  EXPECT_EQ(named, (std::vector<std::vector<std::string>>{{"1", "2", "3"}, {"4", "5"}, {"6"}}));

  const Graph big = largest_component(g);
  EXPECT_EQ(big.labels(), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(big.m(), 3u);
  EXPECT_EQ(connectivity(big), Connectivity::StronglyConnected);
}

TEST(Connectivity, LargestComponentTieGoesToSmallestLabel) {
  const Graph g = Graph::from_pairs({{7, 8}, {3, 4}}, false);
  EXPECT_EQ(largest_component(g).labels(), (std::vector<std::string>{"3", "4"}));
}

TEST(Graph, InducedSubgraphFollowsNodeOrder) {
  const Graph g = oracle::example_graph();
  const NodeId keep[] = {3, 0};
  const Graph s = g.induced(keep);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"4", "1"}));
  EXPECT_TRUE(s.has_edge(0, 1));  // 4 -> 1
  EXPECT_TRUE(s.has_edge(1, 0));  // 1 -> 4
  EXPECT_EQ(s.m(), 2u);
}

TEST(Distances, ExampleGraph) {
  const Graph g = oracle::example_graph();
  const DistanceMatrix d = bfs_distances(g);
  EXPECT_EQ(d(2, 1), 2);  // 3 -> 4 -> 2
  EXPECT_EQ(d(0, 0), 0);
  EXPECT_EQ(d(1, 0), 3);  // 2 -> 3 -> 4 -> 1
  EXPECT_EQ(d.diameter(), 3);
  const auto ref = oracle::hop_distances(oracle::example_a());
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = 0; j < 4; ++j) {
      EXPECT_EQ(d(i, j), ref[i][j]);
      EXPECT_EQ(d.from(i)[j], d(i, j));
      EXPECT_EQ(d.to(j)[i], d(i, j));
    }
}

TEST(Distances, UnreachableSentinel) {
  const Graph g = Graph::from_pairs({{1, 2}}, true);
  const DistanceMatrix d = bfs_distances(g);
  EXPECT_FALSE(d.reachable(1, 0));
  EXPECT_EQ(d(1, 0), DistanceMatrix::kUnreachable);
  EXPECT_EQ(d.diameter(), 1);
}

TEST(Distances, NeighborhoodWithin) {
  const Graph g = oracle::example_graph();
  EXPECT_EQ(neighborhood_within(g, 1, 1), (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(neighborhood_within(g, 1, 2), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(neighborhood_within(g, 1, 3), (std::vector<NodeId>{0, 1, 2, 3}));
  EXPECT_THROW(neighborhood_within(g, 1, 0), std::invalid_argument);
}
