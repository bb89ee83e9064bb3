#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcd/asymptotics.hpp"
#include "hcd/covering.hpp"
#include "hcd/geometry.hpp"
#include "hcd/lcm_counts.hpp"
#include "hcd/number_theory.hpp"
#include "hcd/prime_sequences.hpp"
#include "hcd/series.hpp"
#include "hcd/trees.hpp"

namespace hcd::verify {

/// Outcome of one acceptance criterion.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace tables {

inline const std::vector<std::vector<std::int64_t>> kDecompositions = {
    {1, 1, 3, 10, 39, 160, 691, 3081, 14095, 65757},
    {1, 2, 10, 59, 394, 2810, 20998, 162216, 1285185, 10384986},
    {1, 3, 21, 177, 1677, 17001, 180525, 1981909, 22314339, 256245783},
};

inline const std::vector<std::vector<std::int64_t>> kMobius = {
    {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1},
    {1, -2, -2, 1, -2, 4, -2, 0, 1, 4, -2, -2, -2, 4, 4},
    {1, -3, -3, 3, -3, 9, -3, -1, 3, 9, -3, -9, -3, 9, 9},
};

// a_d(0..10)
inline const std::vector<std::vector<std::int64_t>> kAuxiliary = {
    {1, 1, 2, 3, 6, 9, 17, 28, 50, 83, 147},
    {1, 2, 6, 15, 42, 108, 291, 766, 2041, 5395, 14328},
    {1, 3, 12, 42, 156, 558, 2028, 7318, 26490, 95730, 346218},
};

// g(n), h(n) for n = 1..16
inline const std::vector<std::int64_t> kG = {1, 2, 2, 5, 2, 12, 2, 26, 9, 36, 2, 206, 2, 132, 40, 677};
inline const std::vector<std::int64_t> kH = {1, 1, 1, 3, 1, 9, 1, 21, 7, 33, 1, 191, 1, 129, 37, 651};

inline constexpr double kGrowth1 = 5.487452;
// K_d - (4d + 3/2)
inline const std::vector<std::pair<int, double>> kGrowthExcess = {
    {2, 0.004290}, {3, 0.007080}, {30, 0.001910}};

/// One row of the 1-d decomposition / covering system correspondence for
/// n <= 4: interior cut points, image classes, gcd, lcm.
struct CoveringRow {
  std::vector<Fraction> cuts;
  std::vector<ResidueClass> classes;
  std::int64_t gcd;
  std::int64_t lcm;
};

inline const std::vector<CoveringRow>& covering_rows() {
  static const std::vector<CoveringRow> rows = {
      {{}, {{0, 1}}, 1, 1},
      {{Fraction(1, 2)}, {{0, 2}, {1, 2}}, 2, 2},
      {{Fraction(1, 4), Fraction(1, 2)}, {{0, 4}, {2, 4}, {1, 2}}, 2, 4},
      {{Fraction(1, 2), Fraction(3, 4)}, {{0, 2}, {1, 4}, {3, 4}}, 2, 4},
      {{Fraction(1, 3), Fraction(2, 3)}, {{0, 3}, {1, 3}, {2, 3}}, 3, 3},
      {{Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)}, {{0, 6}, {2, 6}, {4, 6}, {1, 2}}, 2, 6},
      {{Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)}, {{0, 2}, {1, 6}, {3, 6}, {5, 6}}, 2, 6},
      {{Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)}, {{0, 8}, {4, 8}, {2, 4}, {1, 2}}, 2, 8},
      {{Fraction(1, 4), Fraction(3, 8), Fraction(1, 2)}, {{0, 4}, {2, 8}, {6, 8}, {1, 2}}, 2, 8},
      {{Fraction(1, 2), Fraction(5, 8), Fraction(3, 4)}, {{0, 2}, {1, 8}, {5, 8}, {3, 4}}, 2, 8},
      {{Fraction(1, 2), Fraction(3, 4), Fraction(7, 8)}, {{0, 2}, {1, 4}, {3, 8}, {7, 8}}, 2, 8},
      {{Fraction(1, 6), Fraction(1, 3), Fraction(2, 3)}, {{0, 6}, {3, 6}, {1, 3}, {2, 3}}, 3, 6},
      {{Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)}, {{0, 3}, {1, 6}, {4, 6}, {2, 3}}, 3, 6},
      {{Fraction(1, 3), Fraction(2, 3), Fraction(5, 6)}, {{0, 3}, {1, 3}, {2, 6}, {5, 6}}, 3, 6},
      {{Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, 4, 4},
  };
  return rows;
}

inline Decomposition from_cuts(const std::vector<Fraction>& cuts) {
  std::vector<Region> regs;
  Fraction lo = 0;
  for (const auto& c : cuts) {
    regs.push_back(Region{{Interval{lo, c}}});
    lo = c;
  }
  regs.push_back(Region{{Interval{lo, 1}}});
  return {1, std::move(regs)};
}

inline Region box(Fraction x0, Fraction x1, Fraction y0, Fraction y1) {
  return Region{{Interval{x0, x1}, Interval{y0, y1}}};
}

/// The 8-region planar decomposition built by splitting the unit square
/// into thirds, the middle third into quarters along y, and the right third
/// in half along y with its lower half halved along x.
inline Decomposition eight_region_square() {
  using F = Fraction;
  return {2,
          {box(F(0), F(1, 3), F(0), F(1)),
           box(F(1, 3), F(2, 3), F(0), F(1, 4)),
           box(F(1, 3), F(2, 3), F(1, 4), F(1, 2)),
           box(F(1, 3), F(2, 3), F(1, 2), F(3, 4)),
           box(F(1, 3), F(2, 3), F(3, 4), F(1)),
           box(F(2, 3), F(5, 6), F(0), F(1, 2)),
           box(F(5, 6), F(1), F(0), F(1, 2)),
           box(F(2, 3), F(1), F(1, 2), F(1))}};
}

}  // namespace tables

namespace detail {

// Collects failure messages; passed() is true iff nothing was recorded.
class Report {
 public:
  template <class... Args>
  void fail(const Args&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    if (failures_.size() < 12) failures_.push_back(os.str());
    ++count_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return count_ == 0; }
  std::string text() const {
    std::string out;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    if (count_ > 0) {
      out += (out.empty() ? "" : "; ") + std::to_string(count_) + " failure(s): ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::size_t count_ = 0;
};

inline CheckResult timed(int id, std::string name, const std::function<void(Report&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.fail("exception: ", e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  return {id, std::move(name), rep.passed(), rep.text(),
          std::chrono::duration<double>(stop - start).count()};
}

}  // namespace detail

inline CheckResult series_tables() {
  return detail::timed(1, "series tables", [](detail::Report& rep) {
    for (int d = 1; d <= 3; ++d) {
      const auto s = decomposition_counts(d, 10);
      for (std::size_t n = 1; n <= 10; ++n) {
        if (s[n] != tables::kDecompositions[d - 1][n - 1]) rep.fail("s_", d, "(", n, ") = ", s[n]);
      }
    }
    rep.note("s_d(1..10), d = 1..3");
  });
}

inline CheckResult mobius_tables() {
  return detail::timed(2, "mobius tables", [](detail::Report& rep) {
    for (int d = 1; d <= 3; ++d) {
      const auto closed = mobius_d_table(d, 15);
      const auto conv = mobius_d_by_convolution(d, 15);
      for (std::size_t n = 1; n <= 15; ++n) {
        const auto want = tables::kMobius[d - 1][n - 1];
        if (closed[n] != want) rep.fail("closed form mu_", d, "(", n, ") = ", closed[n]);
        if (conv[n] != want) rep.fail("convolution mu_", d, "(", n, ") = ", conv[n]);
      }
    }
    rep.note("mu_d(1..15), d = 1..3, both routes");
  });
}

inline CheckResult auxiliary_tables() {
  return detail::timed(3, "auxiliary tables", [](detail::Report& rep) {
    for (int d = 1; d <= 3; ++d) {
      const auto a = auxiliary_counts(d, 10);
      for (std::size_t n = 0; n <= 10; ++n) {
        if (a[n] != tables::kAuxiliary[d - 1][n]) rep.fail("a_", d, "(", n, ") = ", a[n]);
      }
    }
    rep.note("a_d(0..10), d = 1..3");
  });
}

inline CheckResult enumeration_oracles(unsigned threads = 1) {
  return detail::timed(4, "enumeration oracles", [threads](detail::Report& rep) {
    for (auto [d, N] : std::vector<std::pair<int, std::size_t>>{{1, 8}, {2, 6}, {3, 5}}) {
      const auto levels = enumerate_decomposition_levels(d, N, threads);
      const auto s = decomposition_counts(d, N);
      for (std::size_t n = 1; n <= N; ++n) {
        if (s[n] != levels[n].size()) {
          rep.fail("|S_", d, ",", n, "| = ", levels[n].size(), " vs ", s[n]);
        }
      }
      rep.note("|S_" + std::to_string(d) + "," + std::to_string(N) + "| = " +
               std::to_string(levels[N].size()));
    }
    const auto necs = enumerate_necs_levels(7);
    const auto s1 = decomposition_counts(1, 7);
    for (std::size_t n = 1; n <= 7; ++n) {
      if (s1[n] != necs[n].size()) rep.fail("|C_", n, "| = ", necs[n].size());
    }
    rep.note("|C_7| = " + std::to_string(necs[7].size()));
  });
}

inline CheckResult reversion_round_trip() {
  return detail::timed(5, "reversion round trip", [](detail::Report& rep) {
    for (int d = 1; d <= 4; ++d) {
      const auto y = decomposition_counts(d, 60);
      const auto back = compose(mobius_series(d, 60), y);
      if (back != TruncatedSeries::identity(60)) rep.fail("M_", d, "(y) != x to order 60");
    }
    rep.note("d = 1..4, order 60");
  });
}

inline CheckResult refined_agreement(unsigned threads = 1) {
  return detail::timed(6, "refined counts", [threads](detail::Report& rep) {
    constexpr int d = 2;
    constexpr std::size_t N = 5;
    const auto levels = enumerate_decomposition_levels(d, N, threads);
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> by_gcd;
    for (std::size_t n = 1; n <= N; ++n) {
      for (const auto& S : levels[n]) {
        auto& row = by_gcd[gcd_of(S)];
        row.resize(N + 1, 0);
        ++row[n];
      }
    }
    for (const auto& [r, row] : by_gcd) {
      const auto series = refined_counts(d, std::vector<long long>(r.begin(), r.end()), N);
      for (std::size_t n = 1; n <= N; ++n) {
        if (series[n] != row[n]) {
          rep.fail("gcd (", r[0], ",", r[1], ") n = ", n, ": ", series[n], " vs ", row[n]);
        }
      }
    }
    rep.note(std::to_string(by_gcd.size()) + " gcd vectors");
  });
}

inline CheckResult bijection_suite() {
  return detail::timed(7, "bijection", [](detail::Report& rep) {
    const auto decomps = enumerate_decomposition_levels(1, 6);
    const auto systems = enumerate_necs_levels(6);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<Necs> image;
      for (const auto& S : decomps[n]) {
        const Necs C = phi(S);
        image.insert(C);
        if (gcd_necs(C) != gcd_of(S)[0]) rep.fail("gcd not preserved at n = ", n);
        if (lcm_necs(C) != lcm_of(S)[0]) rep.fail("lcm not preserved at n = ", n);
      }
      if (image.size() != decomps[n].size()) rep.fail("phi not injective at n = ", n);
      if (!std::equal(image.begin(), image.end(), systems[n].begin(), systems[n].end())) {
        rep.fail("image != C_", n);
      }
    }
    std::set<Decomposition> covered;
    for (const auto& row : tables::covering_rows()) {
      const Decomposition S = tables::from_cuts(row.cuts);
      covered.insert(S);
      if (phi(S) != Necs(row.classes)) rep.fail("row with ", S.size(), " regions: image differs");
      if (gcd_of(S)[0] != row.gcd || lcm_of(S)[0] != row.lcm) {
        rep.fail("row with ", S.size(), " regions: gcd/lcm differ");
      }
    }
    std::size_t all = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      all += decomps[n].size();
      for (const auto& S : decomps[n]) {
        if (!covered.count(S)) rep.fail("table misses a decomposition with ", n, " regions");
      }
    }
    rep.note("n <= 6; " + std::to_string(tables::covering_rows().size()) + " table rows cover all " +
             std::to_string(all) + " decompositions with n <= 4");
  });
}

inline CheckResult prime_sequence_combinatorics() {
  return detail::timed(8, "prime sequence combinatorics", [](detail::Report& rep) {
    constexpr std::int64_t N = 12;
    for (int d = 1; d <= 2; ++d) {
      const auto a = auxiliary_counts(d, N + 1);
      std::vector<std::set<PrimeSequence>> tilde(N + 1);
      std::size_t involution_bad = 0;
      for (std::int64_t n = 1; n <= N; ++n) {
        std::int64_t total = 0;
        for_each_A(d, n, [&](const PrimeSequence& A) {
          total += sign(A);
          if (in_A_tilde(A)) {
            tilde[n].insert(A);
            return;
          }
          const PrimeSequence B = involution_f(A);
          bool ok = weight(B) == n && sign(B) == -sign(A) && !in_A_tilde(B);
          if (ok) ok = involution_f(B) == A;
          if (!ok) ++involution_bad;
        });
        if (a[n] != total) rep.fail("d = ", d, " n = ", n, ": signed sum ", total, " vs ", a[n]);
        if (a[n] != tilde[n].size()) {
          rep.fail("d = ", d, " n = ", n, ": |reduced set| ", tilde[n].size(), " vs ", a[n]);
        }
      }
      if (involution_bad > 0) {
        rep.fail("d = ", d, ": pairing map fails on ", involution_bad, " sequences");
      }
      for (std::int64_t n = 1; n < N; ++n) {
        std::set<PrimeSequence> images;
        for (const auto& A : tilde[n]) {
          for (int c = 1; c <= d; ++c) {
            const auto B = ratio_injection(A, c);
            if (weight(B) != n + 1) rep.fail("injection changes weight wrongly");
            images.insert(B);
          }
        }
        if (images.size() != d * tilde[n].size()) rep.fail("d = ", d, " n = ", n, ": injection collides");
      }
    }
    rep.note("d <= 2, n <= 12");
  });
}

inline CheckResult asymptotic_constants() {
  return detail::timed(9, "asymptotic constants", [](detail::Report& rep) {
    const auto r1 = find_saddle(1);
    if (std::abs(r1.growth_rate - tables::kGrowth1) > 1e-5) rep.fail("K_1 = ", r1.growth_rate);
    for (auto [d, excess] : tables::kGrowthExcess) {
      const auto r = find_saddle(d);
      const double got = r.growth_rate - (4.0 * d + 1.5);
      if (std::abs(got - excess) > 1e-5) rep.fail("K_", d, " excess ", got);
    }
    for (int d = 2; d <= 30; ++d) {
      if (!check_growth_bounds(d)) rep.fail("growth bounds fail at d = ", d);
    }
    const auto s = decomposition_counts(1, 151);
    const double ratio = std::exp(log_of(s[151]) - log_of(s[150]));
    if (std::abs(ratio / r1.growth_rate - 1.0) > 0.01) rep.fail("s_1(151)/s_1(150) = ", ratio);
    std::ostringstream os;
    os.precision(9);
    os << "K_1 = " << r1.growth_rate << ", s_1(151)/s_1(150) = " << ratio;
    rep.note(os.str());
  });
}

inline CheckResult lcm_tables() {
  return detail::timed(10, "lcm counts", [](detail::Report& rep) {
    for (std::int64_t n = 1; n <= 16; ++n) {
      if (g_count(n) != tables::kG[n - 1]) rep.fail("g(", n, ") = ", g_count(n));
      if (h_count(n) != tables::kH[n - 1]) rep.fail("h(", n, ") = ", h_count(n));
    }
    const auto systems = enumerate_necs_levels(8);
    std::map<std::int64_t, std::int64_t> by_lcm;
    for (const auto& level : systems) {
      for (const auto& C : level) ++by_lcm[lcm_necs(C)];
    }
    for (std::int64_t l = 1; l <= 8; ++l) {
      if (h_count(l) != by_lcm[l]) rep.fail("systems with lcm ", l, ": ", by_lcm[l]);
    }
    for (const LcmKey& r : std::vector<LcmKey>{{4, 3}, {8, 9}, {4, 3, 5}}) {
      std::int64_t prod = 1;
      for (auto v : r) prod *= v;
      if (g_count(r) != g_count(prod) || h_count(r) != h_count(prod)) {
        rep.fail("coprime collapse fails for product ", prod);
      }
    }
    rep.note("g, h for n = 1..16; lcm classes to 8; (4,3), (8,9), (4,3,5)");
  });
}

inline CheckResult tree_checks() {
  return detail::timed(11, "trees", [](detail::Report& rep) {
    const std::vector<std::int64_t> schroeder = {1, 1, 3, 11, 45, 197};
    const auto t1 = tree_counts(1, 6);
    const auto trees1 = enumerate_tree_levels(1, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      if (t1[n] != schroeder[n - 1]) rep.fail("t_1(", n, ") = ", t1[n]);
      if (trees1[n].size() != static_cast<std::size_t>(schroeder[n - 1])) {
        rep.fail("|T_1,", n, "| = ", trees1[n].size());
      }
    }
    const auto trees2 = enumerate_tree_levels(2, 5);
    const auto decomps2 = enumerate_decomposition_levels(2, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::set<Decomposition> image;
      for (const auto& T : trees2[n]) image.insert(psi(T, 2));
      if (!std::equal(image.begin(), image.end(), decomps2[n].begin(), decomps2[n].end())) {
        rep.fail("psi image != S_2,", n);
      }
    }
    for (int d = 1; d <= 2; ++d) {
      const auto t = tree_counts(d, 6);
      const auto s = decomposition_counts(d, 6);
      for (std::size_t n = 4; n <= 6; ++n) {
        if (!(t[n] > s[n])) rep.fail("t_", d, "(", n, ") <= s_", d, "(", n, ")");
      }
    }
    if (psi(parse_tree("(1 L (2 L L L L) (2 (1 L L) L))"), 2) != tables::eight_region_square()) {
      rep.fail("eight-region tree image differs");
    }
    const auto six = grid_decomposition({6, 1});
    if (psi(parse_tree("(1 L L L L L L)"), 2) != six ||
        psi(parse_tree("(1 (1 L L L) (1 L L L))"), 2) != six) {
      rep.fail("six-slab pair differs");
    }
    const auto grid23 = grid_decomposition({2, 3});
    if (psi(parse_tree("(1 (2 L L L) (2 L L L))"), 2) != grid23 ||
        psi(parse_tree("(2 (1 L L) (1 L L) (1 L L))"), 2) != grid23) {
      rep.fail("2x3 grid pair differs");
    }
    rep.note("t_1(1..6), psi onto S_2,n for n <= 5, golden trees");
  });
}

inline CheckResult asymptotic_trend() {
  return detail::timed(12, "asymptotic trend", [](detail::Report& rep) {
    std::ostringstream os;
    os.precision(4);
    for (int d = 1; d <= 2; ++d) {
      const auto s = decomposition_counts(d, 400);
      const auto r = find_saddle(d);
      const auto error = [&](std::size_t n) {
        return std::abs(std::expm1(log_of(s[n]) - log_asymptotic_estimate(r, static_cast<double>(n))));
      };
      const double e100 = error(100);
      const double e400 = error(400);
      if (!(e400 < e100)) rep.fail("d = ", d, ": error ", e400, " at 400 vs ", e100, " at 100");
      os << (d > 1 ? ", " : "") << "d = " << d << ": " << e100 << " -> " << e400;
    }
    rep.note("relative error " + os.str());
  });
}

/// Criteria grouped into the CLI suites.
inline std::vector<int> suite_members(const std::string& suite) {
  if (suite == "tables") return {1, 2, 3, 5, 10};
  if (suite == "oracles") return {4, 6, 11};
  if (suite == "bijection") return {7, 8};
  if (suite == "asymptotics") return {9, 12};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

inline CheckResult run_criterion(int id, unsigned threads = 1) {
  switch (id) {
    case 1: return series_tables();
    case 2: return mobius_tables();
    case 3: return auxiliary_tables();
    case 4: return enumeration_oracles(threads);
    case 5: return reversion_round_trip();
    case 6: return refined_agreement(threads);
    case 7: return bijection_suite();
    case 8: return prime_sequence_combinatorics();
    case 9: return asymptotic_constants();
    case 10: return lcm_tables();
    case 11: return tree_checks();
    case 12: return asymptotic_trend();
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
}

}  // namespace hcd::verify
