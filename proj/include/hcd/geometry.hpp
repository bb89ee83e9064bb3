#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hcd/number_theory.hpp"

namespace hcd {

/// Exact rational endpoint; boost::rational keeps it in lowest terms.
using Fraction = boost::rational<std::int64_t>;

inline std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

/// Open interval (lo, hi) with 0 <= lo < hi <= 1.
struct Interval {
  Fraction lo;
  Fraction hi;

  Fraction length() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend bool operator<(const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }
};

/// Axis-aligned open box; coordinate i (0-based here) is sides[i].
struct Region {
  std::vector<Interval> sides;

  std::size_t dim() const { return sides.size(); }

  Fraction volume() const {
    Fraction v = 1;
    for (const auto& s : sides) v *= s.length();
    return v;
  }

  bool valid() const {
    return std::all_of(sides.begin(), sides.end(), [](const Interval& s) {
      return Fraction(0) <= s.lo && s.lo < s.hi && s.hi <= Fraction(1);
    });
  }

  bool contains(const Region& inner) const {
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (inner.sides[i].lo < sides[i].lo || sides[i].hi < inner.sides[i].hi) {
        return false;
      }
    }
    return true;
  }

  bool overlaps(const Region& other) const {
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (!(sides[i].lo < other.sides[i].hi && other.sides[i].lo < sides[i].hi)) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Region&, const Region&) = default;
  friend bool operator<(const Region& a, const Region& b) {
    return std::lexicographical_compare(a.sides.begin(), a.sides.end(),
                                        b.sides.begin(), b.sides.end());
  }
};

inline Region unit_cube(int d) {
  return Region{std::vector<Interval>(d, Interval{0, 1})};
}

/// A partition of (0,1)^d into boxes, held in canonical (sorted) order so
/// that equality of decompositions is equality of region lists.
class Decomposition {
 public:
  Decomposition() = default;

  Decomposition(int d, std::vector<Region> regions)
      : dim_(d), regions_(std::move(regions)) {
    for (const auto& r : regions_) {
      if (static_cast<int>(r.dim()) != d || !r.valid()) {
        throw std::invalid_argument("Decomposition: invalid region");
      }
    }
    std::sort(regions_.begin(), regions_.end());
  }

  static Decomposition trivial(int d) { return {d, {unit_cube(d)}}; }

  int dim() const { return dim_; }
  std::size_t size() const { return regions_.size(); }
  const std::vector<Region>& regions() const { return regions_; }

  Fraction volume() const {
    Fraction v = 0;
    for (const auto& r : regions_) v += r.volume();
    return v;
  }

  /// Exact partition check: volumes sum to 1 and interiors pairwise disjoint.
  bool is_partition() const {
    if (volume() != Fraction(1)) return false;
    for (std::size_t a = 0; a < regions_.size(); ++a) {
      for (std::size_t b = a + 1; b < regions_.size(); ++b) {
        if (regions_[a].overlaps(regions_[b])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend bool operator<(const Decomposition& a, const Decomposition& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return std::lexicographical_compare(a.regions_.begin(), a.regions_.end(),
                                        b.regions_.begin(), b.regions_.end());
  }

 private:
  int dim_ = 1;
  std::vector<Region> regions_;
};

namespace detail {

inline std::int64_t floor_of(const Fraction& f) {
  return f.numerator() / f.denominator();  // non-negative only
}

// Index j of the p-slab [j/p, (j+1)/p] holding (lo, hi), or -1 if straddling.
inline std::int64_t slab_index(const Interval& s, std::int64_t p) {
  const std::int64_t j = floor_of(s.lo * p);
  return (s.hi * p <= Fraction(j + 1)) ? j : -1;
}

inline std::int64_t lcm_of_denominators(const std::vector<Region>& regions,
                                        std::size_t coord) {
  std::int64_t l = 1;
  for (const auto& r : regions) {
    l = std::lcm(l, r.sides[coord].lo.denominator());
    l = std::lcm(l, r.sides[coord].hi.denominator());
  }
  return l;
}

// Membership in the split-generated family for a box partition of the unit
// cube: either one region, or some first split H_{i,p} (p prime suffices,
// since a composite first split factors through a prime one) such that
// every slab restriction is itself split-generated.
inline bool split_generated(const std::vector<Region>& regions) {
  if (regions.size() == 1) return true;
  const std::size_t d = regions.front().dim();
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t l = lcm_of_denominators(regions, i);
    for (std::int64_t p : prime_divisors(l)) {
      std::vector<std::vector<Region>> slabs(p);
      bool fits = true;
      for (const auto& r : regions) {
        const std::int64_t j = slab_index(r.sides[i], p);
        if (j < 0) {
          fits = false;
          break;
        }
        Region scaled = r;
        scaled.sides[i] = {r.sides[i].lo * p - j, r.sides[i].hi * p - j};
        slabs[j].push_back(std::move(scaled));
      }
      if (!fits) continue;
      if (std::all_of(slabs.begin(), slabs.end(), [](const auto& s) {
            return !s.empty() && split_generated(s);
          })) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// H_{i,p}: cut R into p congruent slabs orthogonal to axis i (1-based).
inline std::vector<Region> split(const Region& R, int i, int p) {
  if (p < 2) throw std::invalid_argument("split: arity must be >= 2");
  if (i < 1 || i > static_cast<int>(R.dim())) {
    throw std::invalid_argument("split: coordinate out of range");
  }
  const Interval side = R.sides[i - 1];
  const Fraction width = side.length();
  std::vector<Region> out;
  out.reserve(p);
  for (int j = 1; j <= p; ++j) {
    Region piece = R;
    piece.sides[i - 1] = {side.lo + width * Fraction(j - 1, p),
                          side.lo + width * Fraction(j, p)};
    out.push_back(std::move(piece));
  }
  return out;
}

/// Replace one region of S by its p-split along coordinate i.
inline Decomposition apply_split(const Decomposition& S, std::size_t region,
                                 int i, int p) {
  std::vector<Region> regs = S.regions();
  const Region target = regs.at(region);
  regs.erase(regs.begin() + static_cast<std::ptrdiff_t>(region));
  for (auto& piece : split(target, i, p)) regs.push_back(std::move(piece));
  return {S.dim(), std::move(regs)};
}

/// D_(r): the uniform grid with r_i slabs along axis i.
inline Decomposition grid_decomposition(const std::vector<std::int64_t>& r) {
  const int d = static_cast<int>(r.size());
  if (d < 1) throw std::invalid_argument("grid_decomposition: empty r");
  std::vector<Region> regs{unit_cube(d)};
  for (int i = 0; i < d; ++i) {
    if (r[i] < 1) throw std::invalid_argument("grid_decomposition: r_i >= 1");
    if (r[i] == 1) continue;
    std::vector<Region> next;
    for (const auto& reg : regs) {
      for (auto& piece : split(reg, i + 1, static_cast<int>(r[i]))) {
        next.push_back(std::move(piece));
      }
    }
    regs = std::move(next);
  }
  return {d, std::move(regs)};
}

/// Image of inner under the order-preserving affine bijection from -> to.
inline Region scale_map(const Region& from, const Region& to,
                        const Region& inner) {
  if (from.dim() != to.dim() || from.dim() != inner.dim()) {
    throw std::invalid_argument("scale_map: dimension mismatch");
  }
  if (!from.contains(inner)) {
    throw std::invalid_argument("scale_map: region not contained in source");
  }
  Region out = inner;
  for (std::size_t i = 0; i < from.dim(); ++i) {
    const Fraction ratio = to.sides[i].length() / from.sides[i].length();
    out.sides[i].lo = to.sides[i].lo + ratio * (inner.sides[i].lo - from.sides[i].lo);
    out.sides[i].hi = to.sides[i].lo + ratio * (inner.sides[i].hi - from.sides[i].lo);
  }
  return out;
}

/// Regions of S inside cell, rescaled to the unit cube. Throws if a region
/// straddles the cell boundary.
inline Decomposition restrict_rescale(const Decomposition& S,
                                      const Region& cell) {
  const Region unit = unit_cube(S.dim());
  std::vector<Region> inside;
  for (const auto& r : S.regions()) {
    if (cell.contains(r)) {
      inside.push_back(scale_map(cell, unit, r));
    } else if (cell.overlaps(r)) {
      throw std::invalid_argument("restrict_rescale: region straddles cell");
    }
  }
  return {S.dim(), std::move(inside)};
}

/// True iff S can be produced by a sequence of splitting operations.
inline bool is_split_generated(const Decomposition& S) {
  return S.is_partition() && detail::split_generated(S.regions());
}

/// Every region lies inside one cell of the r-grid.
inline bool contained_in_grid(const Decomposition& S,
                              const std::vector<std::int64_t>& r) {
  for (const auto& reg : S.regions()) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (detail::slab_index(reg.sides[i], r[i]) < 0) return false;
    }
  }
  return true;
}

/// S refines D_(r): S is obtainable from the r-grid by further splits, i.e.
/// every region sits in a grid cell and each cell's contents, rescaled to
/// the unit cube, is split-generated.
inline bool refines_grid(const Decomposition& S,
                         const std::vector<std::int64_t>& r) {
  if (static_cast<int>(r.size()) != S.dim()) {
    throw std::invalid_argument("refines_grid: r must have d entries");
  }
  std::map<std::vector<std::int64_t>, std::vector<Region>> cells;
  for (const auto& reg : S.regions()) {
    std::vector<std::int64_t> key(r.size());
    Region scaled = reg;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::int64_t j = detail::slab_index(reg.sides[i], r[i]);
      if (j < 0) return false;
      key[i] = j;
      scaled.sides[i] = {reg.sides[i].lo * r[i] - j, reg.sides[i].hi * r[i] - j};
    }
    cells[key].push_back(std::move(scaled));
  }
  return std::all_of(cells.begin(), cells.end(), [](const auto& kv) {
    return detail::split_generated(kv.second);
  });
}

/// Per coordinate, the lcm of the endpoint denominators: the smallest grid
/// that refines S.
inline std::vector<std::int64_t> lcm_of(const Decomposition& S) {
  std::vector<std::int64_t> out(S.dim());
  for (int i = 0; i < S.dim(); ++i) {
    out[i] = detail::lcm_of_denominators(S.regions(), i);
  }
  return out;
}

/// Componentwise-maximal r with S refining D_(r). Computed one coordinate
/// at a time over the divisors of lcm_of(S).
inline std::vector<std::int64_t> gcd_of(const Decomposition& S) {
  const auto l = lcm_of(S);
  std::vector<std::int64_t> out(S.dim(), 1);
  for (int i = 0; i < S.dim(); ++i) {
    auto divs = divisors(l[i]);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
      std::vector<std::int64_t> probe(S.dim(), 1);
      probe[i] = *it;
      if (refines_grid(S, probe)) {
        out[i] = *it;
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline std::vector<Decomposition> expand(const Decomposition& S,
                                         std::size_t max_regions) {
  std::vector<Decomposition> out;
  const std::size_t budget = max_regions - S.size();
  for (std::size_t reg = 0; reg < S.size(); ++reg) {
    for (int i = 1; i <= S.dim(); ++i) {
      for (std::size_t p = 2; p <= budget + 1; ++p) {
        out.push_back(apply_split(S, reg, i, static_cast<int>(p)));
      }
    }
  }
  return out;
}

}  // namespace detail

/// All split-generated decompositions of (0,1)^d with 1..n regions, by
/// breadth-first closure; levels[k] holds the k-region ones in canonical
/// order (levels[0] is empty). With threads > 1 the frontier expansion runs
/// in parallel; the merge into the seen-set is sequential, so the result is
/// identical to the single-threaded reference path.
inline std::vector<std::vector<Decomposition>> enumerate_decomposition_levels(
    int d, std::size_t n, unsigned threads = 1) {
  if (d < 1 || n < 1) {
    throw std::invalid_argument("enumerate_decompositions: d, n >= 1");
  }
  std::vector<std::set<Decomposition>> seen(n + 1);
  seen[1].insert(Decomposition::trivial(d));
  for (std::size_t k = 1; k < n; ++k) {
    const std::vector<Decomposition> frontier(seen[k].begin(), seen[k].end());
    std::vector<std::vector<Decomposition>> produced;
    if (threads <= 1 || frontier.size() < 2 * threads) {
      for (const auto& S : frontier) produced.push_back(detail::expand(S, n));
    } else {
      std::vector<std::future<std::vector<Decomposition>>> jobs;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t start = 0; start < frontier.size(); start += chunk) {
        const std::size_t stop = std::min(frontier.size(), start + chunk);
        jobs.push_back(std::async(std::launch::async, [&, start, stop] {
          std::vector<Decomposition> local;
          for (std::size_t t = start; t < stop; ++t) {
            auto more = detail::expand(frontier[t], n);
            local.insert(local.end(), std::make_move_iterator(more.begin()),
                         std::make_move_iterator(more.end()));
          }
          return local;
        }));
      }
      for (auto& job : jobs) produced.push_back(job.get());
    }
    for (auto& batch : produced) {
      for (auto& S : batch) seen[S.size()].insert(std::move(S));
    }
  }
  std::vector<std::vector<Decomposition>> levels(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    levels[k].assign(seen[k].begin(), seen[k].end());
  }
  return levels;
}

/// The complete set S_{d,n} in canonical order.
inline std::vector<Decomposition> enumerate_decompositions(int d, std::size_t n,
                                                           unsigned threads = 1) {
  return std::move(enumerate_decomposition_levels(d, n, threads)[n]);
}

}  // namespace hcd
