#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hcd/bigint.hpp"
#include "hcd/number_theory.hpp"

namespace hcd {

/// Power series in one variable with exact integer coefficients, truncated
/// at a fixed order N: coefficients of x^0 .. x^N are stored, nothing beyond
/// is ever read or produced. Binary operations truncate to the smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  TruncatedSeries(std::size_t order, std::initializer_list<long long> init)
      : coeffs_(order + 1) {
    std::size_t i = 0;
    for (long long v : init) {
      if (i > order) break;
      coeffs_[i++] = v;
    }
  }

  static TruncatedSeries from_coefficients(std::vector<BigInt> coeffs) {
    if (coeffs.empty()) {
      throw std::invalid_argument("TruncatedSeries: need at least x^0");
    }
    TruncatedSeries s;
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  /// The series x truncated at the given order.
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
  BigInt& operator[](std::size_t n) { return coeffs_.at(n); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries s(order);
    const std::size_t m = std::min(order, this->order());
    std::copy_n(coeffs_.begin(), m + 1, s.coeffs_.begin());
    return s;
  }

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = a[i] + b[i];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = a[i] - b[i];
    return s;
  }

  friend TruncatedSeries operator*(const BigInt& k, const TruncatedSeries& a) {
    TruncatedSeries s = a;
    for (auto& c : s.coeffs_) c *= k;
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (!b[j].is_zero()) s.coeffs_[i + j] += a[i] * b[j];
      }
    }
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    return *this = *this + o;
  }

 private:
  std::vector<BigInt> coeffs_{BigInt{0}};
};

/// Truncated k-th power by binary exponentiation; base^0 is the series 1.
inline TruncatedSeries series_power(const TruncatedSeries& base,
                                    unsigned k) {
  TruncatedSeries result(base.order());
  result[0] = 1;
  TruncatedSeries sq = base;
  while (k > 0) {
    if (k & 1U) result = result * sq;
    k >>= 1U;
    if (k > 0) sq = sq * sq;
  }
  return result;
}

/// outer(inner(x)) by Horner's rule. inner must have zero constant term.
inline TruncatedSeries compose(const TruncatedSeries& outer,
                               const TruncatedSeries& inner) {
  if (!inner[0].is_zero()) {
    throw std::invalid_argument("compose: inner series needs zero constant");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  TruncatedSeries acc(n);
  for (std::size_t k = outer.order() + 1; k-- > 0;) {
    acc = acc * inner.truncated(n);
    acc[0] += outer[k];
  }
  return acc;
}

/// M_d(z) = sum_{n>=1} mu_d(n) z^n through z^N.
inline TruncatedSeries mobius_series(int d, std::size_t N) {
  TruncatedSeries m(N);
  for (std::size_t n = 1; n <= N; ++n) {
    m[n] = mobius_d(d, static_cast<std::int64_t>(n));
  }
  return m;
}

/// s_d(1..N): coefficients of the compositional inverse y of M_d, so that
/// sum_k mu_d(k) y^k = x. Since mu_d(1) = 1, coefficient n of y is forced by
///   s_d(n) = - sum_{k=2}^{n} mu_d(k) [x^n] y^k,
/// where the right side only involves s_d(1..n-1). The table of partial
/// powers [x^m] y^k is filled one column m at a time.
inline TruncatedSeries decomposition_counts(int d, std::size_t N) {
  if (N < 1) throw std::invalid_argument("decomposition_counts: N >= 1");
  std::vector<std::int64_t> mu(N + 1, 0);
  for (std::size_t k = 1; k <= N; ++k) {
    mu[k] = mobius_d(d, static_cast<std::int64_t>(k));
  }
  // powers[k][m] = [x^m] y^k for 1 <= k <= m <= N.
  std::vector<std::vector<BigInt>> powers(N + 1,
                                          std::vector<BigInt>(N + 1));
  TruncatedSeries y(N);
  y[1] = 1;
  powers[1][1] = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 2; k <= n; ++k) {
      BigInt c = 0;
      // y^k = y * y^{k-1}; the x^j factor of y needs j <= n-k+1 < n.
      for (std::size_t j = 1; j + (k - 1) <= n; ++j) {
        c += y[j] * powers[k - 1][n - j];
      }
      powers[k][n] = c;
      if (mu[k] != 0) acc += mu[k] * c;
    }
    y[n] = -acc;
    powers[1][n] = y[n];
  }
  return y;
}

/// a_d(0..N), the coefficients of z / M_d(z), by
///   a_d(n) = - sum_{k=2}^{n+1} mu_d(k) a_d(n+1-k),  a_d(0) = 1.
inline TruncatedSeries auxiliary_counts(int d, std::size_t N) {
  TruncatedSeries a(N);
  a[0] = 1;
  std::vector<std::int64_t> mu(N + 2, 0);
  for (std::size_t k = 1; k <= N + 1; ++k) {
    mu[k] = mobius_d(d, static_cast<std::int64_t>(k));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 2; k <= n + 1; ++k) {
      if (mu[k] != 0) acc -= mu[k] * a[n + 1 - k];
    }
    a[n] = acc;
  }
  return a;
}

/// Counts of decompositions whose gcd is exactly r, as the series
///   sum_{m>=1} mu_d(m) y^{(prod r_i) m}.
/// Terms with (prod r_i) m > N vanish below order N and are skipped.
inline TruncatedSeries refined_counts(int d, const std::vector<long long>& r,
                                      std::size_t N) {
  if (static_cast<int>(r.size()) != d) {
    throw std::invalid_argument("refined_counts: r must have d entries");
  }
  unsigned long long block = 1;
  for (long long ri : r) {
    if (ri < 1) throw std::invalid_argument("refined_counts: r_i >= 1");
    block *= static_cast<unsigned long long>(ri);
    if (block > N) return TruncatedSeries(N);
  }
  const TruncatedSeries y = decomposition_counts(d, N);
  const TruncatedSeries y_block = series_power(y, static_cast<unsigned>(block));
  TruncatedSeries out(N);
  TruncatedSeries term = y_block;  // y^{block * m}
  for (unsigned long long m = 1; block * m <= N; ++m) {
    if (m > 1) term = term * y_block;
    const std::int64_t mu = mobius_d(d, static_cast<std::int64_t>(m));
    if (mu != 0) out = out + BigInt(mu) * term;
  }
  return out;
}

}  // namespace hcd
