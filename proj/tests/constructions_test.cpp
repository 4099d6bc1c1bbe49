#include <gtest/gtest.h>

#include "kcon/bounds.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/constructions.hpp"

using namespace kcon;

TEST(MaderParams, Normalization) {
  auto p = MaderParams::make(6, 2);
  EXPECT_EQ(p.q, 2u);
  EXPECT_EQ(p.r, 2u);
  auto p7 = MaderParams::make(7, 3);
  EXPECT_EQ(p7.q, 2u);
  EXPECT_EQ(p7.r, 1u);
  auto tight = MaderParams::make(3, 2);
  EXPECT_EQ(tight.q, 1u);
  EXPECT_EQ(tight.r, 1u);
  EXPECT_THROW(MaderParams::make(5, 1), std::invalid_argument);
  EXPECT_THROW(MaderParams::make(3, 3), std::invalid_argument);
}

TEST(MaderGraph, SixTwo) {
  auto g = mader_graph(6, 2);
  ASSERT_EQ(g.parts.size(), 3u);
  EXPECT_EQ(g.parts[0], VertexSet(6, {0, 1}));
  EXPECT_EQ(g.parts[1], VertexSet(6, {2, 3}));
  EXPECT_EQ(g.parts[2], VertexSet(6, {4, 5}));
  // 2*4 join edges + one edge inside each of V1, V2.
  EXPECT_EQ(g.graph.m(), 10u);
  EXPECT_FALSE(g.graph.adjacent(0, 1));
  EXPECT_FALSE(g.graph.adjacent(2, 4));
}

TEST(MaderGraph, EdgeCountsByHand) {
  // (7,3): 3*4 join + K3 + K1; (5,2): 2*3 join + K2 + K1.
  EXPECT_EQ(mader_graph(7, 3).graph.m(), 15u);
  EXPECT_EQ(mader_graph(5, 2).graph.m(), 7u);
  EXPECT_EQ(mader_edge_count(6, 2), 10u);
  EXPECT_EQ(mader_edge_count(7, 3), 15u);
  EXPECT_EQ(mader_edge_count(5, 2), 7u);
}

TEST(MaderGraph, AgainstConjectureBound) {
  auto bound = [](long long n, long long k) { return threshold(BoundKind::MaderConjecture, n, k).value; };
  EXPECT_EQ(bound(6, 2), Rational(10));
  EXPECT_EQ(bound(7, 3), Rational(16));
  EXPECT_EQ(bound(5, 2), Rational(15, 2));
  EXPECT_LT(Rational(15), bound(7, 3));
  EXPECT_LT(Rational(7), bound(5, 2));
}

TEST(MaderGraph, StructureOverGrid) {
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t n = k + 1; n <= 40; ++n) {
      auto mg = mader_graph(n, k);
      ASSERT_EQ(mg.graph.m(), mader_edge_count(n, k));
      const Rational count(static_cast<long long>(mg.graph.m()));
      const auto bound = threshold(BoundKind::MaderConjecture, static_cast<long long>(n), static_cast<long long>(k)).value;
      ASSERT_LE(count, bound);
      ASSERT_EQ(count == bound, n % k == 0) << n << "," << k;
      // V0 independent, other parts cliques, full join to V0.
      const auto& v0 = mg.parts[0];
      v0.for_each([&](Vertex z) { ASSERT_FALSE(mg.graph.neighbors(z).intersects(v0)); });
      for (std::size_t i = 1; i < mg.parts.size(); ++i)
        mg.parts[i].for_each([&](Vertex v) {
          ASSERT_TRUE(v0.subset_of(mg.graph.neighbors(v)));
          ASSERT_EQ(mg.graph.degree(v), k + mg.parts[i].size() - 1);
        });
    }
}

TEST(MaderGraph, NoKPlus1ConnectedSubgraphAndV0Separates) {
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t n = k + 1; n <= 14; ++n) {
      auto mg = mader_graph(n, k);
      ASSERT_FALSE(has_k_plus_1_connected_subgraph(mg.graph, k).found) << n << "," << k;
      if (mg.params.q >= 2) {
        auto rest = induced(mg.graph, mg.parts[0].complement());
        auto comps = components(rest.graph);
        ASSERT_EQ(comps.size(), mg.params.q);
        for (const auto& c : comps) ASSERT_LE(c.size(), k);
        CutCertificate cert{mg.parts[0], mg.parts[1], mg.parts[0].complement() - mg.parts[1]};
        ASSERT_TRUE(is_valid_certificate(mg.graph, cert));
      }
    }
}
