#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcd {

/// Prime factorization as (prime, multiplicity) pairs, primes ascending.
/// The empty list is the factorization of 1.
struct PrimePower {
  std::int64_t prime;
  int multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
using Factorization = std::vector<PrimePower>;

namespace detail {

inline constexpr std::int64_t kSieveLimit = 1 << 20;

// Smallest-prime-factor table, built once on first use.
inline const std::vector<std::int32_t>& spf_table() {
  static const std::vector<std::int32_t> table = [] {
    std::vector<std::int32_t> spf(kSieveLimit + 1, 0);
    for (std::int64_t i = 2; i <= kSieveLimit; ++i) {
      if (spf[i] != 0) continue;
      for (std::int64_t j = i; j <= kSieveLimit; j += i) {
        if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
      }
    }
    return spf;
  }();
  return table;
}

}  // namespace detail

inline Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  auto push = [&out](std::int64_t p) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().multiplicity;
    } else {
      out.push_back({p, 1});
    }
  };
  if (n <= detail::kSieveLimit) {
    const auto& spf = detail::spf_table();
    while (n > 1) {
      const std::int64_t p = spf[n];
      push(p);
      n /= p;
    }
    return out;
  }
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().multiplicity == 1;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

/// All positive divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, m] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= m; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact binomial coefficient; zero when k > n or k < 0.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.multiplicity > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// d-fold Dirichlet self-convolution of the Moebius function, evaluated by
/// the closed form prod (-1)^m C(d, m) over the prime powers p^m || n.
inline std::int64_t mobius_d(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("mobius_d: d must be >= 1");
  if (n < 1) throw std::invalid_argument("mobius_d: n must be >= 1");
  std::int64_t r = 1;
  for (const auto& [p, m] : factorize(n)) {
    const std::int64_t c = binomial(d, m);
    if (c == 0) return 0;
    r *= (m % 2 == 0) ? c : -c;
  }
  return r;
}

/// Arithmetic functions are stored densely with index 0 unused: a sequence
/// on 1..N is a vector of size N+1 whose element [0] is ignored.
using ArithSeq = std::vector<std::int64_t>;

inline ArithSeq dirichlet_convolve(std::span<const std::int64_t> a,
                                   std::span<const std::int64_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dirichlet_convolve: length mismatch");
  }
  const std::size_t n = a.size();
  ArithSeq out(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; i * j < n; ++j) out[i * j] += a[i] * b[j];
  }
  return out;
}

/// mu(1..N) as a dense sequence (index 0 unused).
inline ArithSeq mobius_table(std::int64_t N) {
  ArithSeq out(N + 1, 0);
  for (std::int64_t n = 1; n <= N; ++n) out[n] = mobius(n);
  return out;
}

/// mu_d(1..N) via the closed form.
inline ArithSeq mobius_d_table(int d, std::int64_t N) {
  ArithSeq out(N + 1, 0);
  for (std::int64_t n = 1; n <= N; ++n) out[n] = mobius_d(d, n);
  return out;
}

/// mu_d(1..N) via d-1 explicit Dirichlet convolutions of mu with itself.
inline ArithSeq mobius_d_by_convolution(int d, std::int64_t N) {
  if (d < 1) throw std::invalid_argument("mobius_d_by_convolution: d >= 1");
  const ArithSeq mu = mobius_table(N);
  ArithSeq acc = mu;
  for (int k = 1; k < d; ++k) acc = dirichlet_convolve(acc, mu);
  return acc;
}

}  // namespace hcd
