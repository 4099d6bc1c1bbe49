#include <random>

#include <gtest/gtest.h>

#include "kcon/polynomial.hpp"

using namespace kcon;
using namespace kcon::vars;
using R = Rational;
namespace {
using kcon::vars::gamma;

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE(poly_equal((alpha - 1).pow(2), alpha * alpha - 2 * alpha + 1));
  EXPECT_TRUE((alpha - alpha).is_zero());
  EXPECT_EQ((3 * alpha * beta + 1).total_degree(), 2u);
  EXPECT_EQ((alpha * alpha * sigma).degree(Var::alpha), 2u);
  EXPECT_EQ((2 * gamma * gamma - 11 * gamma + 15).to_string(), "2*gamma^2 - 11*gamma + 15");
}

TEST(Polynomial, Eval) {
  const auto g = 2 * gamma * gamma - 11 * gamma + 15;
  EXPECT_EQ(poly_eval(g, {{Var::gamma, R(5, 2)}}), R(0));
  const auto g1 = 6 * alpha * alpha - 7 * alpha + 1;
  EXPECT_EQ(poly_eval(g1, {{Var::alpha, R(1, 2)}}), R(-1));
  const auto phi1 = R(1, 36) * (24 * alpha * alpha + 54 * alpha * sigma - 84 * alpha + 72 * sigma * sigma - 108 * sigma + 67);
  EXPECT_EQ(poly_eval(phi1, {{Var::alpha, 1}, {Var::sigma, R(5, 18)}}), R(-11, 162));
  EXPECT_THROW(poly_eval(phi1, {{Var::alpha, 1}}), std::invalid_argument);
}

TEST(Polynomial, SubstituteAndDerivative) {
  const auto p = alpha * alpha + beta;
  EXPECT_TRUE(poly_equal(p.substitute(Var::beta, alpha), alpha * alpha + alpha));
  EXPECT_TRUE(poly_equal(p.substitute(Var::alpha, beta + 1), beta * beta + 3 * beta + 1));
  EXPECT_TRUE(poly_equal((3 * alpha * alpha * sigma).derivative(Var::alpha), 6 * alpha * sigma));
}

TEST(SeparatelyConvex, Examples) {
  const auto phi1 = R(1, 36) * (24 * alpha * alpha + 54 * alpha * sigma - 84 * alpha + 72 * sigma * sigma - 108 * sigma + 67);
  EXPECT_TRUE(separately_convex(phi1, {Var::alpha, Var::sigma}));
  EXPECT_TRUE(separately_convex(2 * gamma * gamma - 11 * gamma + 15, {Var::gamma}));
  EXPECT_FALSE(separately_convex(-(alpha * alpha), {Var::alpha}));
  EXPECT_THROW(separately_convex(alpha.pow(3), {Var::alpha}), std::invalid_argument);
}

TEST(BoxVertexMax, Examples) {
  const auto phi1 = R(1, 36) * (24 * alpha * alpha + 54 * alpha * sigma - 84 * alpha + 72 * sigma * sigma - 108 * sigma + 67);
  auto values = box_vertex_values(phi1, {{Var::alpha, 1, R(3, 2)}, {Var::sigma, R(5, 18), R(1, 3)}});
  ASSERT_EQ(values.size(), 4u);
  EXPECT_EQ(values[0].second, R(-11, 162));
  EXPECT_EQ(values[1].second, R(-1, 12));
  EXPECT_EQ(values[2].second, R(-125, 648));
  EXPECT_EQ(values[3].second, R(-1, 6));
  auto best = box_vertex_max(phi1, {{Var::alpha, 1, R(3, 2)}, {Var::sigma, R(5, 18), R(1, 3)}});
  EXPECT_EQ(best.value, R(-11, 162));
  EXPECT_EQ(*best.vertex.get(Var::sigma), R(5, 18));

  auto g = box_vertex_max(2 * gamma * gamma - 11 * gamma + 15, {{Var::gamma, R(5, 2), 3}});
  EXPECT_EQ(g.value, R(0));
  EXPECT_EQ(*g.vertex.get(Var::gamma), R(5, 2));  // tie resolves to the first vertex

  auto a = box_vertex_max(alpha, {{Var::alpha, 0, 1}});
  EXPECT_EQ(a.value, R(1));
  EXPECT_EQ(*a.vertex.get(Var::alpha), R(1));
}

TEST(BoxVertexMax, AgreesWithGridOnConvexQuadratics) {
  // Separate convexity makes the vertex maximum dominate every grid point of the box.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> pos(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = pos(rng) * alpha * alpha + coef(rng) * alpha * sigma + pos(rng) * sigma * sigma + coef(rng) * alpha +
                   coef(rng) * sigma + coef(rng);
    const std::vector<Interval> box{{Var::alpha, R(-1, 2), R(3, 2)}, {Var::sigma, 0, R(1, 3)}};
    const auto best = box_vertex_max(p, box);
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        Point pt{{Var::alpha, R(-1, 2) + R(i, 4)}, {Var::sigma, R(j, 24)}};
        ASSERT_LE(p.eval(pt), best.value);
      }
  }
}

TEST(MonotoneDecreasing, Examples) {
  const auto aissmall = 6 * alpha * alpha + 2 * beta * beta - 7 * alpha - 7 * beta + 6;
  EXPECT_TRUE(monotone_decreasing_on(aissmall, Var::beta, 1, R(7, 4)));
  const auto case21 = R(1, 36) * (18 * alpha * alpha + 54 * alpha * sigma - 63 * alpha + 6 * beta * beta - 21 * beta +
                                  72 * sigma * sigma - 108 * sigma + 67);
  EXPECT_TRUE(monotone_decreasing_on(case21, Var::beta, 1, R(3, 2)));
  EXPECT_FALSE(monotone_decreasing_on(beta * beta, Var::beta, 0, 1));
  EXPECT_FALSE(monotone_decreasing_on(aissmall, Var::beta, 1, 2));
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(6 * alpha * alpha - 15 * alpha + 10), R(-15));
  EXPECT_LT(discriminant_sign(6 * alpha * alpha - 15 * alpha + 10), 0);
  EXPECT_GT(discriminant_sign(alpha * alpha - 1), 0);
  EXPECT_EQ(discriminant_sign(alpha * alpha), 0);
  EXPECT_THROW(discriminant_sign(alpha + 1), std::invalid_argument);
  EXPECT_THROW(discriminant_sign(alpha * beta), std::invalid_argument);
}

TEST(PolynomialProperty, RingLawsAtRandomPoints) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  auto random_poly = [&] {
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
      Polynomial mono = R(small(rng), den(rng));
      for (auto v : {vars::alpha, vars::beta, vars::sigma})
        if (small(rng) > 5) mono = mono * v;
      p += mono;
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly();
    const auto q = random_poly();
    const Point pt{{Var::alpha, R(small(rng), den(rng))}, {Var::beta, R(small(rng), den(rng))}, {Var::sigma, R(small(rng), den(rng))}};
    ASSERT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
    ASSERT_EQ((p - q).eval(pt), p.eval(pt) - q.eval(pt));
    ASSERT_EQ(p.substitute(Var::beta, q).eval(pt), p.eval(Point{{Var::alpha, *pt.get(Var::alpha)}, {Var::beta, q.eval(pt)}, {Var::sigma, *pt.get(Var::sigma)}}));
  }
}
}  // namespace
