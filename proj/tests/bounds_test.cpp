#include <gtest/gtest.h>

#include "kcon/bounds.hpp"

using namespace kcon;

TEST(Rational, ReducedAndExact) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("38/3").to_decimal(), "12.666667");
  EXPECT_EQ(Rational::parse("-1/3").to_decimal(2), "-0.33");
  EXPECT_EQ(Rational::parse("-7/2").floor(), BigInt(-4));
  EXPECT_EQ(Rational(10).to_string(), "10");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_EQ(binomial(28, 24), Rational(20475));
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold(BoundKind::NewThm, 6, 2).value, Rational(38, 3));
  EXPECT_EQ(threshold(BoundKind::MatulaLemma, 5, 2).value, Rational(22, 3));
  auto conj = threshold(BoundKind::MaderConjecture, 6, 2);
  EXPECT_EQ(conj.value, Rational(10));
  EXPECT_EQ(conj.reading, Reading::AttainableMaximum);
  EXPECT_EQ(threshold(BoundKind::YusterThm, 9, 4).value, Rational(193, 120) * 4 * 5);
}

TEST(Threshold, DomainsReportedNotEnforced) {
  auto t = threshold(BoundKind::NewThm, 4, 2);
  EXPECT_EQ(t.domain, DomainStatus::Outside);
  EXPECT_EQ(threshold(BoundKind::NewThm, 5, 2).domain, DomainStatus::Inside);
  EXPECT_EQ(threshold(BoundKind::YusterThm, 8, 4).domain, DomainStatus::Outside);
  EXPECT_EQ(threshold(BoundKind::YusterThm, 9, 4).domain, DomainStatus::Inside);
  EXPECT_EQ(threshold(BoundKind::MaderConjecture, 9, 4).domain, DomainStatus::Unspecified);
  EXPECT_THROW(threshold(BoundKind::NewThm, 6, 1), std::invalid_argument);
  EXPECT_THROW(threshold(BoundKind::NewThm, 2, 2), std::invalid_argument);
}

TEST(MinForcing, Examples) {
  EXPECT_EQ(min_forcing_edge_count(BoundKind::NewThm, 6, 2), 13);
  EXPECT_EQ(min_forcing_edge_count(BoundKind::MatulaLemma, 5, 2), 8);
  // 19/12 * 2 * 3 = 19/2
  EXPECT_EQ(threshold(BoundKind::NewThm, 5, 2).value, Rational(19, 2));
  EXPECT_EQ(min_forcing_edge_count(BoundKind::NewThm, 5, 2), 10);
  // Integer threshold: C(6,2) - (16-1)/3 = 10.
  EXPECT_EQ(min_forcing_edge_count(BoundKind::MatulaLemma, 6, 2), 11);
  EXPECT_THROW(min_forcing_edge_count(BoundKind::MaderConjecture, 6, 2), std::invalid_argument);
}

TEST(Normalized, Examples) {
  EXPECT_EQ(normalized(3, BoundKind::NewNormalized), Rational(19, 6));
  EXPECT_EQ(normalized(Rational(5, 2), BoundKind::MatulaNormalized), Rational(19, 8));
  EXPECT_EQ(normalized(2, BoundKind::ConjectureNormalized), Rational(3, 2));
  EXPECT_THROW(normalized(1, BoundKind::NewNormalized), std::domain_error);
  EXPECT_THROW(normalized(3, BoundKind::MatulaLemma), std::invalid_argument);
}

TEST(BoundsProperty, ScaleIdentityOrderingAndForcingGap) {
  for (long long k = 2; k <= 10; ++k)
    for (long long n = k + 1; n <= 40; ++n) {
      const Rational gamma{BigInt(n), BigInt(k)};
      const auto t_new = threshold(BoundKind::NewThm, n, k).value;
      ASSERT_EQ(t_new, Rational(k * k) * normalized(gamma, BoundKind::NewNormalized));
      ASSERT_EQ(threshold(BoundKind::MatulaNormalized, n, k).value,
                Rational(k * k) * normalized(gamma, BoundKind::MatulaNormalized));
      if (2 * n >= 5 * k) {
        ASSERT_LE(threshold(BoundKind::MaderConjecture, n, k).value, t_new);
        ASSERT_LE(t_new, threshold(BoundKind::YusterThm, n, k).value);
      }
      for (auto kind : kAllBoundKinds) {
        if (!is_forcing(kind)) continue;
        const auto b = threshold(kind, n, k).value;
        const Rational m(min_forcing_edge_count(kind, n, k));
        ASSERT_GT(m, b);
        ASSERT_GE(b, m - 1);
      }
    }
}

TEST(BoundKind, Parsing) {
  EXPECT_EQ(parse_bound_kind("new"), BoundKind::NewThm);
  EXPECT_EQ(parse_bound_kind("NewThm"), BoundKind::NewThm);
  EXPECT_EQ(parse_bound_kind("MatulaLemma"), BoundKind::MatulaLemma);
  EXPECT_EQ(parse_bound_kind("matula-normalized"), BoundKind::MatulaNormalized);
  EXPECT_FALSE(parse_bound_kind("nope"));
  for (auto kind : kAllBoundKinds) EXPECT_EQ(parse_bound_kind(to_string(kind)), kind);
}
