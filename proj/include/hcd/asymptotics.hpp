#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcd/number_theory.hpp"

namespace hcd {

/// A truncated evaluation: the partial sum over n < 2^k and a certified
/// bound on the magnitude of everything dropped.
struct Bounded {
  double value = 0.0;
  double tail = 0.0;
};

struct SaddleResult {
  int d = 1;
  double s = 0.0;            // smallest positive root of M_d'
  double M_at_s = 0.0;
  double M2_at_s = 0.0;      // second derivative, negative at the maximum
  double growth_rate = 0.0;  // K_d = 1 / M_d(s)
  int truncation_order = 6;  // partial sums run over n < 2^k
  double tail_bound_used = 0.0;
  double M_tail = 0.0;
  double M1_at_s = 0.0;
};

namespace detail {

inline std::vector<std::int64_t> mu_prefix(int d, int k) {
  const std::int64_t limit = std::int64_t{1} << k;
  std::vector<std::int64_t> mu(limit, 0);
  for (std::int64_t n = 1; n < limit; ++n) mu[n] = mobius_d(d, n);
  return mu;
}

// Tail of the j-th derivative, sum over n >= 2^k of n^(j) mu_d(n) x^(n-j),
// bounded block by block: on [2^l, 2^(l+1)) there are at most l prime
// factors, so |mu_d(n)| <= d^l, and n(n-1)..(n-j+1) < 2^((l+1)j). Consecutive
// block bounds shrink by at least d 2^j x^(2^k), giving a geometric series.
inline double block_tail(int d, int k, int j, double x) {
  const double n0 = std::ldexp(1.0, k);
  const double ratio = d * std::ldexp(1.0, j) * std::pow(x, n0);
  if (!(x < 1.0) || !(ratio < 1.0)) {
    throw std::domain_error("block_tail: x outside the convergence range");
  }
  return std::pow(static_cast<double>(d), k) * std::ldexp(1.0, (k + 1) * j) *
         std::pow(x, n0 - j) / ((1.0 - x) * (1.0 - ratio));
}

inline void check_x(double x) {
  if (!(x >= 0.0)) throw std::domain_error("eval: x must be >= 0");
}

}  // namespace detail

/// M_d(x) through n < 2^k. For d >= 2 the tail is 2 d^k x^(2^k), valid on
/// [0, 1/d] with k >= 3; for d = 1, |mu| <= 1 gives x^(2^k) / (1 - x).
inline Bounded eval_M(int d, double x, int k = 6) {
  detail::check_x(x);
  const auto mu = detail::mu_prefix(d, k);
  double v = 0.0;
  for (std::size_t n = mu.size(); n-- > 1;) v = (v + mu[n]) * x;
  const double n0 = std::ldexp(1.0, k);
  double tail = 0.0;
  if (d == 1) {
    if (!(x < 1.0)) throw std::domain_error("eval_M: need x < 1 for d = 1");
    tail = std::pow(x, n0) / (1.0 - x);
  } else {
    if (k < 3) throw std::domain_error("eval_M: need k >= 3");
    if (x > 1.0 / d) throw std::domain_error("eval_M: need x <= 1/d");
    tail = 2.0 * std::pow(static_cast<double>(d), k) * std::pow(x, n0);
  }
  return {v, tail};
}

/// M_d'(x) through n < 2^k. For d >= 2 the tail is 2^(k+1) d^k x^(2^k - 1)
/// on [0, 1/(2d)] with k >= 3; for d = 1 it is the exact sum of n x^(n-1)
/// over n >= 2^k.
inline Bounded eval_M_prime(int d, double x, int k = 6) {
  detail::check_x(x);
  const auto mu = detail::mu_prefix(d, k);
  double v = 0.0;
  for (std::size_t n = mu.size(); n-- > 1;) {
    v = v * x + static_cast<double>(n) * mu[n];
  }
  const double n0 = std::ldexp(1.0, k);
  double tail = 0.0;
  if (d == 1) {
    if (!(x < 1.0)) throw std::domain_error("eval_M_prime: need x < 1 for d = 1");
    tail = n0 * std::pow(x, n0 - 1) / (1.0 - x) + std::pow(x, n0) / ((1.0 - x) * (1.0 - x));
  } else {
    if (k < 3) throw std::domain_error("eval_M_prime: need k >= 3");
    if (x > 1.0 / (2.0 * d)) throw std::domain_error("eval_M_prime: need x <= 1/(2d)");
    tail = std::ldexp(1.0, k + 1) * std::pow(static_cast<double>(d), k) * std::pow(x, n0 - 1);
  }
  return {v, tail};
}

/// M_d''(x) through n < 2^k, with the block tail bound for j = 2.
inline Bounded eval_M_second(int d, double x, int k = 6) {
  detail::check_x(x);
  const auto mu = detail::mu_prefix(d, k);
  double v = 0.0;
  for (std::size_t n = mu.size(); n-- > 2;) {
    v = v * x + static_cast<double>(n) * static_cast<double>(n - 1) * mu[n];
  }
  return {v, detail::block_tail(d, k, 2, x)};
}

/// Smallest positive root of M_d' by bisection on a bracket where the
/// certified sign of M_d' differs. d >= 2 uses [k1, k2] with
/// k1 = (4d+5)/((4d+5)(2d+1)+1), k2 = (d-1)/d k1 + 1/(d(2d+1)); d = 1 uses
/// [0.1, 0.45]. The truncation exponent grows until every tail used is
/// below tol / 10.
inline SaddleResult find_saddle(int d, double tol = 1e-12) {
  if (d < 1) throw std::invalid_argument("find_saddle: d >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("find_saddle: tol > 0");
  double lo = 0.1;
  double hi = 0.45;
  if (d >= 2) {
    const double a = 4.0 * d + 5.0;
    lo = a / (a * (2.0 * d + 1.0) + 1.0);
    hi = (d - 1.0) / d * lo + 1.0 / (d * (2.0 * d + 1.0));
  }
  int k = 6;
  for (;; ++k) {
    if (k > 24) {
      throw std::runtime_error("find_saddle: could not certify tails for d = " +
                               std::to_string(d));
    }
    if (eval_M_prime(d, hi, k).tail < tol / 10 && eval_M(d, hi, k).tail < tol / 10 &&
        detail::block_tail(d, k, 2, hi) < tol / 10) {
      break;
    }
  }
  const Bounded at_lo = eval_M_prime(d, lo, k);
  const Bounded at_hi = eval_M_prime(d, hi, k);
  if (!(at_lo.value - at_lo.tail > 0.0 && at_hi.value + at_hi.tail < 0.0)) {
    throw std::runtime_error("find_saddle: bracket not found for d = " + std::to_string(d) +
                             " (M'(lo) = " + std::to_string(at_lo.value) +
                             ", M'(hi) = " + std::to_string(at_hi.value) + ")");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval_M_prime(d, mid, k).value > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Bounded mid_val = eval_M_prime(d, mid, k);
  if (std::abs(mid_val.value) > tol) {
    throw std::runtime_error("find_saddle: |M'(s)| above tolerance for d = " +
                             std::to_string(d));
  }
  SaddleResult r;
  r.d = d;
  r.s = mid;
  r.truncation_order = k;
  const Bounded m = eval_M(d, mid, k);
  const Bounded m2 = eval_M_second(d, mid, k);
  r.M_at_s = m.value;
  r.M_tail = m.tail;
  r.M1_at_s = mid_val.value;
  r.M2_at_s = m2.value;
  r.growth_rate = 1.0 / m.value;
  r.tail_bound_used = std::max({m.tail, mid_val.tail, m2.tail});
  return r;
}

/// log of 1/sqrt(-2 pi M''(s)) n^(-3/2) M(s)^(1/2 - n); logs keep large n
/// and large d inside double range.
inline double log_asymptotic_estimate(const SaddleResult& r, double n) {
  return -0.5 * std::log(-2.0 * std::numbers::pi * r.M2_at_s) - 1.5 * std::log(n) +
         (0.5 - n) * std::log(r.M_at_s);
}

inline double asymptotic_estimate(const SaddleResult& r, double n) {
  return std::exp(log_asymptotic_estimate(r, n));
}

inline double asymptotic_estimate(int d, double n) {
  return asymptotic_estimate(find_saddle(d), n);
}

/// 4d + 3/2 <= K_d <= 4d + 3/2 + 1/(16d), with the M_d(s) tail folded into
/// the interval for K_d. Only stated for d >= 2.
inline bool check_growth_bounds(const SaddleResult& r) {
  const int d = r.d;
  if (d < 2) throw std::invalid_argument("check_growth_bounds: needs d >= 2");
  const double k_lo = 1.0 / (r.M_at_s + r.M_tail);
  const double k_hi = 1.0 / (r.M_at_s - r.M_tail);
  const double lower = 4.0 * d + 1.5;
  const double upper = lower + 1.0 / (16.0 * d);
  return lower <= k_lo && k_hi <= upper;
}

inline bool check_growth_bounds(int d) {
  if (d < 2) throw std::invalid_argument("check_growth_bounds: needs d >= 2");
  return check_growth_bounds(find_saddle(d));
}

}  // namespace hcd
