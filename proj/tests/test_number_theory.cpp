#include <gtest/gtest.h>

#include <vector>

#include "hcd/number_theory.hpp"

namespace {

using hcd::ArithSeq;

// Trial-division Moebius, independent of the sieve.
int naive_mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// d-fold self-convolution by direct double loop.
ArithSeq naive_mobius_d(int d, std::int64_t N) {
  ArithSeq mu(N + 1, 0);
  for (std::int64_t n = 1; n <= N; ++n) mu[n] = naive_mobius(n);
  ArithSeq acc(N + 1, 0);
  acc[1] = 1;
  for (int k = 0; k < d; ++k) {
    ArithSeq next(N + 1, 0);
    for (std::int64_t i = 1; i <= N; ++i) {
      for (std::int64_t j = 1; i * j <= N; ++j) next[i * j] += acc[i] * mu[j];
    }
    acc = next;
  }
  return acc;
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(hcd::factorize(1).empty());
  const auto f12 = hcd::factorize(12);
  ASSERT_EQ(f12.size(), 2u);
  EXPECT_EQ(f12[0].prime, 2);
  EXPECT_EQ(f12[0].multiplicity, 2);
  EXPECT_EQ(f12[1].prime, 3);
  EXPECT_EQ(f12[1].multiplicity, 1);
  const auto f40 = hcd::factorize(40);
  ASSERT_EQ(f40.size(), 2u);
  EXPECT_EQ(f40[0].prime, 2);
  EXPECT_EQ(f40[0].multiplicity, 3);
  EXPECT_EQ(f40[1].prime, 5);
}

TEST(Factorize, ReassemblesAboveSieve) {
  for (std::int64_t n : {std::int64_t{1} << 21, std::int64_t{3000017}, std::int64_t{999999000001}}) {
    std::int64_t prod = 1;
    for (const auto& [p, m] : hcd::factorize(n)) {
      EXPECT_TRUE(hcd::is_prime(p));
      for (int i = 0; i < m; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
  EXPECT_THROW(hcd::factorize(0), std::invalid_argument);
}

TEST(Divisors, SortedAndComplete) {
  EXPECT_EQ(hcd::divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(hcd::divisors(1), (std::vector<std::int64_t>{1}));
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::vector<std::int64_t> naive;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (n % k == 0) naive.push_back(k);
    }
    EXPECT_EQ(hcd::divisors(n), naive) << n;
  }
}

TEST(Mobius, Examples) {
  EXPECT_EQ(hcd::mobius(1), 1);
  EXPECT_EQ(hcd::mobius(6), 1);
  EXPECT_EQ(hcd::mobius(12), 0);
  EXPECT_EQ(hcd::mobius_d(2, 6), 4);
  EXPECT_EQ(hcd::mobius_d(3, 8), -1);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(hcd::mobius_d(d, 1), 1);
  EXPECT_THROW(hcd::mobius_d(0, 5), std::invalid_argument);
}

TEST(Mobius, MatchesTrialDivision) {
  for (std::int64_t n = 1; n <= 10000; ++n) ASSERT_EQ(hcd::mobius(n), naive_mobius(n)) << n;
}

TEST(Mobius, SumsToDelta) {
  // sum over divisors of mu is 1 at n = 1 and 0 elsewhere.
  for (std::int64_t n = 1; n <= 10000; ++n) {
    int s = 0;
    for (auto q : hcd::divisors(n)) s += hcd::mobius(q);
    ASSERT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(MobiusD, ClosedFormMatchesConvolution) {
  for (int d = 1; d <= 5; ++d) {
    const auto closed = hcd::mobius_d_table(d, 2000);
    const auto conv = hcd::mobius_d_by_convolution(d, 2000);
    const auto naive = naive_mobius_d(d, 2000);
    for (std::int64_t n = 1; n <= 2000; ++n) {
      ASSERT_EQ(closed[n], conv[n]) << d << " " << n;
      ASSERT_EQ(closed[n], naive[n]) << d << " " << n;
    }
  }
}

TEST(MobiusD, Multiplicative) {
  for (int d = 1; d <= 4; ++d) {
    for (std::int64_t a = 1; a <= 60; ++a) {
      for (std::int64_t b = 1; b <= 60; ++b) {
        if (std::gcd(a, b) != 1) continue;
        ASSERT_EQ(hcd::mobius_d(d, a * b), hcd::mobius_d(d, a) * hcd::mobius_d(d, b));
      }
    }
  }
}

TEST(MobiusD, BoundedByPowerOfD) {
  // n has at most floor(log2 n) prime factors, each contributing at most d.
  for (int d = 1; d <= 5; ++d) {
    for (std::int64_t n = 1; n <= 4096; ++n) {
      std::int64_t bound = 1;
      for (std::int64_t m = n; m > 1; m /= 2) bound *= d;
      ASSERT_LE(std::abs(hcd::mobius_d(d, n)), bound);
    }
  }
}

TEST(Dirichlet, Identities) {
  constexpr std::int64_t N = 15;
  ArithSeq one(N + 1, 1), delta(N + 1, 0), a(N + 1, 0);
  delta[1] = 1;
  for (std::int64_t n = 1; n <= N; ++n) a[n] = n * n - 3;
  const auto mu = hcd::mobius_table(N);
  const auto conv = hcd::dirichlet_convolve(mu, one);
  for (std::int64_t n = 1; n <= N; ++n) EXPECT_EQ(conv[n], delta[n]);
  const auto same = hcd::dirichlet_convolve(delta, a);
  for (std::int64_t n = 1; n <= N; ++n) EXPECT_EQ(same[n], a[n]);
  const std::vector<std::int64_t> mu2 = {1, -2, -2, 1, -2, 4, -2, 0, 1, 4, -2, -2, -2, 4, 4};
  const auto sq = hcd::dirichlet_convolve(mu, mu);
  for (std::int64_t n = 1; n <= N; ++n) EXPECT_EQ(sq[n], mu2[n - 1]);
  EXPECT_THROW(hcd::dirichlet_convolve(mu, ArithSeq(4, 0)), std::invalid_argument);
}

TEST(Binomial, EdgeCases) {
  EXPECT_EQ(hcd::binomial(5, 2), 10);
  EXPECT_EQ(hcd::binomial(2, 3), 0);
  EXPECT_EQ(hcd::binomial(7, 0), 1);
}

}  // namespace
