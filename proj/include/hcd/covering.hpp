#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "hcd/geometry.hpp"

namespace hcd {

/// The residue class a (mod n), 0 <= a < n.
struct ResidueClass {
  std::int64_t a = 0;
  std::int64_t n = 1;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  // Canonical order: by modulus, then representative.
  friend bool operator<(const ResidueClass& x, const ResidueClass& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.a < y.a;
  }
};

/// Two classes meet iff their representatives agree modulo gcd of moduli.
inline bool intersects(const ResidueClass& x, const ResidueClass& y) {
  const std::int64_t g = std::gcd(x.n, y.n);
  return (x.a - y.a) % g == 0;
}

/// A natural exact covering system, classes in canonical order.
class Necs {
 public:
  Necs() : classes_{{0, 1}} {}

  explicit Necs(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
    for (const auto& c : classes_) {
      if (c.n < 1 || c.a < 0 || c.a >= c.n) {
        throw std::invalid_argument("Necs: class out of range");
      }
    }
    std::sort(classes_.begin(), classes_.end());
  }

  std::size_t size() const { return classes_.size(); }
  const std::vector<ResidueClass>& classes() const { return classes_; }

  /// Sum of densities is 1 and classes are pairwise disjoint.
  bool is_partition() const {
    Fraction density = 0;
    for (const auto& c : classes_) density += Fraction(1, c.n);
    if (density != Fraction(1)) return false;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      for (std::size_t j = i + 1; j < classes_.size(); ++j) {
        if (intersects(classes_[i], classes_[j])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Necs&, const Necs&) = default;
  friend bool operator<(const Necs& x, const Necs& y) {
    return x.classes_ < y.classes_;
  }

 private:
  std::vector<ResidueClass> classes_;
};

/// E_{i,r}(a mod n) = (i n + a) mod (r n) for i = 0..r-1.
inline std::vector<ResidueClass> split_class(const ResidueClass& c,
                                             std::int64_t r) {
  if (r < 2) throw std::invalid_argument("split_class: r must be >= 2");
  std::vector<ResidueClass> out;
  out.reserve(r);
  for (std::int64_t i = 0; i < r; ++i) out.push_back({i * c.n + c.a, r * c.n});
  return out;
}

/// C_1 .. C_n by breadth-first closure under class splitting; levels[k]
/// holds the k-class systems in canonical order.
inline std::vector<std::vector<Necs>> enumerate_necs_levels(std::size_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_necs: n >= 1");
  std::vector<std::set<Necs>> seen(n + 1);
  seen[1].insert(Necs{});
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& C : seen[k]) {
      const auto& cls = C.classes();
      for (std::size_t idx = 0; idx < cls.size(); ++idx) {
        for (std::size_t r = 2; k + r - 1 <= n; ++r) {
          std::vector<ResidueClass> next;
          next.reserve(cls.size() + r - 1);
          for (std::size_t j = 0; j < cls.size(); ++j) {
            if (j != idx) next.push_back(cls[j]);
          }
          for (const auto& piece :
               split_class(cls[idx], static_cast<std::int64_t>(r))) {
            next.push_back(piece);
          }
          seen[k + r - 1].insert(Necs(std::move(next)));
        }
      }
    }
  }
  std::vector<std::vector<Necs>> levels(n + 1);
  for (std::size_t k = 1; k <= n; ++k) levels[k].assign(seen[k].begin(), seen[k].end());
  return levels;
}

inline std::vector<Necs> enumerate_necs(std::size_t n) {
  return std::move(enumerate_necs_levels(n)[n]);
}

inline std::int64_t gcd_necs(const Necs& C) {
  std::int64_t g = 0;
  for (const auto& c : C.classes()) g = std::gcd(g, c.n);
  return g;
}

inline std::int64_t lcm_necs(const Necs& C) {
  std::int64_t l = 1;
  for (const auto& c : C.classes()) l = std::lcm(l, c.n);
  return l;
}

/// Bijection from 1-dimensional decompositions to NECS. With r = gcd(S),
/// S splits into r blocks (j/r, (j+1)/r); the class a mod n of the image of
/// block j becomes (j + r a) mod (r n), i.e. a sub-class of j mod r.
inline Necs phi(const Decomposition& S) {
  if (S.dim() != 1) throw std::invalid_argument("phi: needs a 1-d decomposition");
  if (S.size() == 1) return Necs{};
  const std::int64_t r = gcd_of(S).front();
  if (r < 2) throw std::invalid_argument("phi: not a split-generated decomposition");
  std::vector<ResidueClass> out;
  for (std::int64_t j = 0; j < r; ++j) {
    const Region block{{Interval{Fraction(j, r), Fraction(j + 1, r)}}};
    const Necs sub = phi(restrict_rescale(S, block));
    for (const auto& c : sub.classes()) out.push_back({j + r * c.a, r * c.n});
  }
  return Necs(std::move(out));
}

}  // namespace hcd
