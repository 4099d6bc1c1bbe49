#include <random>

#include <gtest/gtest.h>

#include "kcon/graph.hpp"
#include "oracles.hpp"

using namespace kcon;

TEST(Graph, FromEdgeListTriangle) {
  auto g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(g.is_complete());
}

TEST(Graph, EdgelessAndDuplicates) {
  EXPECT_EQ(Graph::from_edge_list(4, {}).m(), 0u);
  auto g = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.m(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, RejectsBadEdges) {
  try {
    Graph::from_edge_list(3, {{0, 3}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0,3)"), std::string::npos);
  }
  try {
    Graph::from_edge_list(3, {{2, 2}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(2,2)"), std::string::npos);
  }
  EXPECT_THROW(Graph::from_edge_list(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST(Graph, Induced) {
  auto k3 = induced(complete_graph(4), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(k3.graph, complete_graph(3));

  auto path = induced(cycle_graph(5), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(path.graph.m(), 2u);
  EXPECT_TRUE(path.graph.adjacent(0, 1));
  EXPECT_TRUE(path.graph.adjacent(1, 2));
  EXPECT_FALSE(path.graph.adjacent(0, 2));

  auto empty = induced(cycle_graph(5), VertexSet(5));
  EXPECT_EQ(empty.graph.n(), 0u);
}

TEST(Graph, InducedRelabelsAscending) {
  auto sub = induced(cycle_graph(6), VertexSet(6, {5, 0, 3, 4}));
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{0, 3, 4, 5}));
  // C6 edges inside {0,3,4,5}: 3-4, 4-5, 5-0.
  EXPECT_EQ(sub.graph.m(), 3u);
  EXPECT_TRUE(sub.graph.adjacent(0, 3));
  EXPECT_EQ(sub.lift(VertexSet(4, {0, 1}), 6), VertexSet(6, {0, 3}));
}

TEST(Graph, Components) {
  auto two = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], VertexSet(6, {0, 1, 2}));
  EXPECT_EQ(comps[1], VertexSet(6, {3, 4, 5}));

  EXPECT_EQ(components(cycle_graph(5)).size(), 1u);

  auto singles = components(Graph::from_edge_list(3, {}));
  ASSERT_EQ(singles.size(), 3u);
  for (const auto& c : singles) EXPECT_EQ(c.size(), 1u);
}

TEST(Graph, ComponentsOrderedBySizeThenMinVertex) {
  auto g = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {3, 4}});
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], VertexSet(6, {5}));
  EXPECT_EQ(comps[1], VertexSet(6, {3, 4}));
  EXPECT_EQ(comps[2], VertexSet(6, {0, 1, 2}));
}

TEST(Graph, CompleteAndCycle) {
  EXPECT_EQ(complete_graph(5).m(), 10u);
  EXPECT_EQ(cycle_graph(6).m(), 6u);
  EXPECT_EQ(complete_graph(0).n(), 0u);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Graph, WithAndWithoutEdgeAreValues) {
  auto g = cycle_graph(4);
  auto h = g.with_edge(0, 2);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_EQ(h.m(), 5u);
  EXPECT_EQ(h.without_edge(2, 0), g);
}

TEST(GraphProperty, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 40;
    auto g = oracle::random_graph(n, 0.3, rng);
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      degree_sum += g.degree(u);
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_EQ(degree_sum, 2 * g.m());

    // Induced on the full set is the identity.
    auto full = induced(g, g.all_vertices());
    EXPECT_EQ(full.graph, g);

    // Components partition V, are internally connected, and have no edges between them.
    auto comps = components(g);
    VertexSet cover(n);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_FALSE(cover.intersects(comps[i]));
      cover |= comps[i];
      EXPECT_TRUE(is_connected(induced(g, comps[i]).graph));
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        comps[i].for_each([&](Vertex v) { EXPECT_FALSE(g.neighbors(v).intersects(comps[j])); });
    }
    EXPECT_EQ(cover, g.all_vertices());
  }
}

TEST(VertexSet, MultiwordOperations) {
  VertexSet a(200, {0, 63, 64, 199});
  VertexSet b(200, {63, 150});
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>{63});
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_EQ(a.next(65), 199u);
  EXPECT_EQ(VertexSet::full(200).size(), 200u);
  EXPECT_EQ(a.complement().size(), 196u);
  EXPECT_TRUE(lex_less(VertexSet(10, {0, 5}), VertexSet(10, {1, 2})));
  EXPECT_THROW(a.insert(200), std::out_of_range);
}
