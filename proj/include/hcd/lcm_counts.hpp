#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hcd/bigint.hpp"
#include "hcd/number_theory.hpp"

namespace hcd {

/// Grid shape (r_1, .., r_d), coordinates kept in the given order.
using LcmKey = std::vector<std::int64_t>;

namespace detail {

inline void check_key(const LcmKey& r) {
  if (r.empty()) throw std::invalid_argument("lcm key: needs at least one entry");
  for (auto v : r) {
    if (v < 1) throw std::invalid_argument("lcm key: entries must be >= 1");
  }
}

// Calls visit(q, mu(q_1)..mu(q_d), prod q) for every divisor vector q of r
// whose Moebius product is nonzero.
template <class Visit>
void for_each_squarefree_divisor(const LcmKey& r, Visit&& visit) {
  std::vector<std::vector<std::int64_t>> divs;
  divs.reserve(r.size());
  for (auto v : r) divs.push_back(divisors(v));
  LcmKey q(r.size(), 1);
  auto rec = [&](auto&& self, std::size_t i, int mu_prod, std::int64_t prod) -> void {
    if (i == r.size()) {
      visit(q, mu_prod, prod);
      return;
    }
    for (auto x : divs[i]) {
      const int m = mobius(x);
      if (m == 0) continue;
      q[i] = x;
      self(self, i + 1, mu_prod * m, prod * x);
    }
  };
  rec(rec, 0, 1, 1);
}

inline LcmKey quotient(const LcmKey& r, const LcmKey& q) {
  LcmKey out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i] / q[i];
  return out;
}

// g is symmetric under permuting coordinates, so the cache is keyed by the
// sorted vector.
struct GCache {
  std::mutex lock;
  std::map<LcmKey, BigInt> values;
};

inline GCache& g_cache() {
  static GCache cache;
  return cache;
}

}  // namespace detail

/// Number of decompositions refined by the grid D_r:
///   g(r) = 1 - sum over q | r, q != 1 of (prod mu(q_i)) g(r/q)^(prod q_i).
inline BigInt g_count(const LcmKey& r) {
  detail::check_key(r);
  LcmKey key = r;
  std::sort(key.begin(), key.end());
  auto& cache = detail::g_cache();
  {
    std::lock_guard<std::mutex> guard(cache.lock);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  BigInt g = 1;
  detail::for_each_squarefree_divisor(key, [&](const LcmKey& q, int mu, std::int64_t prod) {
    if (prod == 1) return;
    const BigInt sub = pow(g_count(detail::quotient(key, q)), static_cast<unsigned>(prod));
    g -= mu * sub;
  });
  std::lock_guard<std::mutex> guard(cache.lock);
  cache.values.emplace(key, g);
  return g;
}

/// Number of decompositions whose lcm is exactly r:
///   h(r) = sum over q | r of (prod mu(q_i)) g(r/q).
inline BigInt h_count(const LcmKey& r) {
  detail::check_key(r);
  BigInt h = 0;
  detail::for_each_squarefree_divisor(r, [&](const LcmKey& q, int mu, std::int64_t) {
    h += mu * g_count(detail::quotient(r, q));
  });
  return h;
}

inline BigInt g_count(std::int64_t n) { return g_count(LcmKey{n}); }
inline BigInt h_count(std::int64_t n) { return h_count(LcmKey{n}); }

}  // namespace hcd
