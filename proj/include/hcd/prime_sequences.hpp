#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcd/number_theory.hpp"

namespace hcd {

/// A prime carrying a colour in 1..d.
struct ColouredPrime {
  std::int64_t prime = 2;
  int colour = 1;

  friend bool operator==(const ColouredPrime&, const ColouredPrime&) = default;
  friend auto operator<=>(const ColouredPrime&, const ColouredPrime&) = default;
};

/// Multiset of coloured primes, equal primes carrying distinct colours.
/// Elements are kept sorted by (prime, colour).
class ColouredPrimeSet {
 public:
  ColouredPrimeSet() = default;

  ColouredPrimeSet(std::initializer_list<ColouredPrime> elems)
      : ColouredPrimeSet(std::vector<ColouredPrime>(elems)) {}

  explicit ColouredPrimeSet(std::vector<ColouredPrime> elems)
      : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
      throw std::invalid_argument("ColouredPrimeSet: repeated prime colour");
    }
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<ColouredPrime>& elements() const { return elems_; }
  const ColouredPrime& min_element() const { return elems_.front(); }

  /// Product of the primes minus one.
  std::int64_t weight() const {
    std::int64_t prod = 1;
    for (const auto& e : elems_) prod *= e.prime;
    return prod - 1;
  }

  int sign() const { return elems_.size() % 2 == 1 ? 1 : -1; }

  ColouredPrimeSet without(const ColouredPrime& e) const {
    ColouredPrimeSet out = *this;
    out.elems_.erase(std::find(out.elems_.begin(), out.elems_.end(), e));
    return out;
  }

  ColouredPrimeSet merged(const ColouredPrimeSet& other) const {
    std::vector<ColouredPrime> all = elems_;
    all.insert(all.end(), other.elems_.begin(), other.elems_.end());
    return ColouredPrimeSet(std::move(all));
  }

  friend bool operator==(const ColouredPrimeSet&, const ColouredPrimeSet&) = default;
  friend auto operator<=>(const ColouredPrimeSet&, const ColouredPrimeSet&) = default;

 private:
  std::vector<ColouredPrime> elems_;
};

using PrimeSequence = std::vector<ColouredPrimeSet>;

inline std::int64_t weight(const PrimeSequence& A) {
  std::int64_t w = 0;
  for (const auto& s : A) w += s.weight();
  return w;
}

inline int sign(const PrimeSequence& A) {
  int v = 1;
  for (const auto& s : A) v *= s.sign();
  return v;
}

namespace detail {

inline void colour_choices(int d, int m, int from, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int c = from; c <= d; ++c) {
    cur.push_back(c);
    colour_choices(d, m, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// B_{d,n}: every d-coloured prime set whose primes multiply to n+1.
/// The prime content is forced by the factorization; only colours vary.
inline std::vector<ColouredPrimeSet> enumerate_B(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("enumerate_B: d >= 1");
  if (n < 1) return {};
  std::vector<std::vector<ColouredPrime>> partial{{}};
  for (const auto& [p, m] : factorize(n + 1)) {
    if (m > d) return {};
    std::vector<std::vector<int>> colourings;
    std::vector<int> cur;
    detail::colour_choices(d, m, 1, cur, colourings);
    std::vector<std::vector<ColouredPrime>> next;
    for (const auto& base : partial) {
      for (const auto& cols : colourings) {
        auto e = base;
        for (int c : cols) e.push_back({p, c});
        next.push_back(std::move(e));
      }
    }
    partial = std::move(next);
  }
  std::vector<ColouredPrimeSet> out;
  out.reserve(partial.size());
  for (auto& e : partial) out.emplace_back(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// Visit every sequence of non-empty d-coloured prime sets of total weight
/// n (the empty sequence when n = 0). Parts are built from B_{d,w}, so
/// weights w with B_{d,w} empty are pruned immediately.
inline void for_each_A(int d, std::int64_t n,
                       const std::function<void(const PrimeSequence&)>& visit) {
  std::map<std::int64_t, std::vector<ColouredPrimeSet>> blocks;
  for (std::int64_t w = 1; w <= n; ++w) {
    auto b = enumerate_B(d, w);
    if (!b.empty()) blocks.emplace(w, std::move(b));
  }
  PrimeSequence prefix;
  std::function<void(std::int64_t)> rec = [&](std::int64_t remaining) {
    if (remaining == 0) {
      visit(prefix);
      return;
    }
    for (const auto& [w, sets] : blocks) {
      if (w > remaining) break;
      for (const auto& s : sets) {
        prefix.push_back(s);
        rec(remaining - w);
        prefix.pop_back();
      }
    }
  };
  rec(n);
}

inline std::vector<PrimeSequence> enumerate_A(int d, std::int64_t n) {
  std::vector<PrimeSequence> out;
  for_each_A(d, n, [&](const PrimeSequence& A) { out.push_back(A); });
  return out;
}

/// Sum of v(A) over A_{d,n}.
inline std::int64_t signed_sum(int d, std::int64_t n) {
  std::int64_t total = 0;
  for_each_A(d, n, [&](const PrimeSequence& A) { total += sign(A); });
  return total;
}

/// Index of the first even-sized set.
inline std::optional<std::size_t> first_even(const PrimeSequence& A) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() % 2 == 0) return i;
  }
  return std::nullopt;
}

/// Whether an odd, ascending, repetitive run starts at index j: A[j] is a
/// singleton {l_c}, and A[j+1..j+l] are equal odd-sized sets whose every
/// element exceeds l, or equals l with a colour above c.
inline bool oar_starts_at(const PrimeSequence& A, std::size_t j) {
  if (A[j].size() != 1) return false;
  const ColouredPrime head = A[j].min_element();
  const auto len = static_cast<std::size_t>(head.prime);
  if (j + len >= A.size()) return false;
  const ColouredPrimeSet& body = A[j + 1];
  if (body.size() % 2 == 0) return false;
  for (std::size_t t = 2; t <= len; ++t) {
    if (A[j + t] != body) return false;
  }
  return std::all_of(body.elements().begin(), body.elements().end(),
                     [&](const ColouredPrime& e) {
                       return e.prime > head.prime ||
                              (e.prime == head.prime && e.colour > head.colour);
                     });
}

struct OarRun {
  std::size_t start;   // 0-based index of the singleton
  std::size_t length;  // number of repeated sets following it
  friend bool operator==(const OarRun&, const OarRun&) = default;
};

/// First OAR run, by starting index.
inline std::optional<OarRun> find_oar(const PrimeSequence& A) {
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (oar_starts_at(A, j)) {
      return OarRun{j, static_cast<std::size_t>(A[j].min_element().prime)};
    }
  }
  return std::nullopt;
}

inline bool in_A_tilde(const PrimeSequence& A) {
  return !first_even(A) && !find_oar(A);
}

/// The pairing map on sequences holding an even set or an OAR run,
/// whichever comes first. Even set first: peel off its least element p0 by
/// (prime, colour) and expand into {p0} followed by p0 copies of the rest.
/// OAR run first: collapse it back into the union of its first two sets.
inline PrimeSequence involution_f(const PrimeSequence& A) {
  const auto even = first_even(A);
  const auto oar = find_oar(A);
  if (!even && !oar) {
    throw std::invalid_argument("involution_f: sequence has no even set or OAR run");
  }
  PrimeSequence out;
  if (even && (!oar || oar->start > *even)) {
    const std::size_t i = *even;
    const ColouredPrime p0 = A[i].min_element();
    const ColouredPrimeSet rest = A[i].without(p0);
    out.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(ColouredPrimeSet{p0});
    for (std::int64_t t = 0; t < p0.prime; ++t) out.push_back(rest);
    out.insert(out.end(), A.begin() + static_cast<std::ptrdiff_t>(i + 1), A.end());
  } else {
    const std::size_t j = oar->start;
    out.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(A[j].merged(A[j + 1]));
    out.insert(out.end(), A.begin() + static_cast<std::ptrdiff_t>(j + oar->length + 1),
               A.end());
  }
  return out;
}

/// The reduced set: sequences with neither an even set nor an OAR run.
inline std::vector<PrimeSequence> enumerate_A_tilde(int d, std::int64_t n) {
  std::vector<PrimeSequence> out;
  for_each_A(d, n, [&](const PrimeSequence& A) {
    if (in_A_tilde(A)) out.push_back(A);
  });
  return out;
}

/// Append {2_c}; if that closes a run {2_c'},{2_c},{2_c} with c' < c,
/// replace the trailing {2_c} by {3_c} instead.
inline PrimeSequence ratio_injection(const PrimeSequence& A, int colour) {
  PrimeSequence out = A;
  const ColouredPrimeSet two{{2, colour}};
  const std::size_t k = A.size();
  if (k >= 2 && A[k - 1] == two && A[k - 2].size() == 1 &&
      A[k - 2].min_element().prime == 2 &&
      A[k - 2].min_element().colour < colour) {
    out.back() = ColouredPrimeSet{{3, colour}};
  } else {
    out.push_back(two);
  }
  return out;
}

}  // namespace hcd
