#include <gtest/gtest.h>

#include <cmath>

#include "hcd/asymptotics.hpp"
#include "hcd/series.hpp"

namespace {

TEST(EvalM, Examples) {
  for (int d = 1; d <= 3; ++d) {
    const auto m = hcd::eval_M(d, 0.0, 6);
    EXPECT_EQ(m.value, 0.0);
    EXPECT_EQ(m.tail, 0.0);
    const auto m1 = hcd::eval_M_prime(d, 0.0, 6);
    EXPECT_EQ(m1.value, 1.0);
    EXPECT_EQ(m1.tail, 0.0);
  }
  const auto m = hcd::eval_M(2, 0.25, 5);
  EXPECT_LE(m.tail, 2.0 * 32.0 * std::pow(0.25, 32) * (1 + 1e-12));
  EXPECT_LT(m.tail, 4e-18);
  EXPECT_THROW(hcd::eval_M(2, 0.6, 6), std::domain_error);
  EXPECT_THROW(hcd::eval_M_prime(2, 0.3, 6), std::domain_error);
  EXPECT_THROW(hcd::eval_M(1, -0.1, 6), std::domain_error);
}

TEST(EvalM, TailsCoverLongerSums) {
  // Raising k moves each value by less than the tail bound claimed at k.
  for (int d = 1; d <= 4; ++d) {
    const double x = d == 1 ? 0.3 : 1.0 / (2.0 * d);
    for (int k = 3; k <= 8; ++k) {
      const auto a = hcd::eval_M(d, x, k), b = hcd::eval_M(d, x, k + 2);
      EXPECT_LE(std::abs(a.value - b.value), a.tail + 1e-15) << d << " " << k;
      const auto a1 = hcd::eval_M_prime(d, x, k), b1 = hcd::eval_M_prime(d, x, k + 2);
      EXPECT_LE(std::abs(a1.value - b1.value), a1.tail + 1e-14) << d << " " << k;
      const auto a2 = hcd::eval_M_second(d, x, k), b2 = hcd::eval_M_second(d, x, k + 2);
      EXPECT_LE(std::abs(a2.value - b2.value), a2.tail + 1e-13) << d << " " << k;
    }
  }
}

TEST(EvalM, BracketSigns) {
  const int d = 2;
  const double a = 4.0 * d + 5.0;
  const double k1 = a / (a * (2.0 * d + 1.0) + 1.0);
  const double k2 = (d - 1.0) / d * k1 + 1.0 / (d * (2.0 * d + 1.0));
  EXPECT_GT(hcd::eval_M_prime(d, k1, 5).value, 0.0);
  EXPECT_LT(hcd::eval_M_prime(d, k2, 5).value, 0.0);
}

TEST(Saddle, GrowthConstants) {
  EXPECT_NEAR(hcd::find_saddle(1).growth_rate, 5.487452, 1e-5);
  EXPECT_NEAR(hcd::find_saddle(2).growth_rate - 9.5, 0.004290, 1e-5);
  EXPECT_NEAR(hcd::find_saddle(3).growth_rate - 13.5, 0.007080, 1e-5);
  EXPECT_NEAR(hcd::find_saddle(30).growth_rate - 121.5, 0.001910, 1e-5);
  const auto r1 = hcd::find_saddle(1);
  const auto m = hcd::eval_M(1, r1.s, r1.truncation_order);
  EXPECT_NEAR(m.value, 1.0 / 5.487452, 1e-6);
}

TEST(Saddle, Invariants) {
  double previous = 0.0;
  for (int d = 1; d <= 30; ++d) {
    const double tol = 1e-12;
    const auto r = hcd::find_saddle(d, tol);
    EXPECT_GT(r.s, 0.0);
    EXPECT_LT(r.M2_at_s, 0.0) << d;
    EXPECT_GT(r.growth_rate, previous) << d;
    EXPECT_LT(r.tail_bound_used, tol / 10);
    EXPECT_LE(std::abs(r.M1_at_s), tol);
    const double delta = 10 * tol;
    EXPECT_GT(hcd::eval_M_prime(d, r.s - delta, r.truncation_order).value, 0.0) << d;
    EXPECT_LT(hcd::eval_M_prime(d, r.s + delta, r.truncation_order).value, 0.0) << d;
    previous = r.growth_rate;
  }
}

TEST(Saddle, GrowthBounds) {
  for (int d = 2; d <= 30; ++d) EXPECT_TRUE(hcd::check_growth_bounds(d)) << d;
  EXPECT_THROW(hcd::check_growth_bounds(1), std::invalid_argument);
  EXPECT_LT(hcd::find_saddle(1).growth_rate, 5.5);
}

TEST(Saddle, MatchesExactRatio) {
  for (int d = 1; d <= 3; ++d) {
    const auto s = hcd::decomposition_counts(d, 151);
    const double ratio = std::exp(hcd::log_of(s[151]) - hcd::log_of(s[150]));
    EXPECT_NEAR(ratio / hcd::find_saddle(d).growth_rate, 1.0, 0.01) << d;
  }
}

TEST(Estimate, Examples) {
  const auto r = hcd::find_saddle(1);
  const double e10 = hcd::asymptotic_estimate(r, 10);
  EXPECT_GT(e10, 65757.0 / 2);
  EXPECT_LT(e10, 65757.0 * 2);
  for (int n = 1; n <= 50; ++n) EXPECT_GT(hcd::asymptotic_estimate(r, n), 0.0);
  EXPECT_NEAR(std::log(hcd::asymptotic_estimate(r, 30)), hcd::log_asymptotic_estimate(r, 30), 1e-9);
  // Large n stays finite in log space.
  EXPECT_TRUE(std::isfinite(hcd::log_asymptotic_estimate(hcd::find_saddle(30), 1000)));
}

TEST(Estimate, ErrorShrinks) {
  for (int d = 1; d <= 2; ++d) {
    const auto s = hcd::decomposition_counts(d, 400);
    const auto r = hcd::find_saddle(d);
    auto err = [&](std::size_t n) {
      return std::abs(std::expm1(hcd::log_of(s[n]) - hcd::log_asymptotic_estimate(r, double(n))));
    };
    EXPECT_LT(err(400), err(100)) << d;
    EXPECT_LT(err(200), err(100)) << d;
  }
}

}  // namespace
