#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcd/geometry.hpp"
#include "hcd/series.hpp"

namespace hcd {

/// Plane rooted tree; a leaf has label 0 and no children, an internal node
/// has a label in 1..d and at least two ordered children.
struct PlaneTree {
  int label = 0;
  std::vector<PlaneTree> children;

  static PlaneTree leaf() { return {}; }
  static PlaneTree node(int label, std::vector<PlaneTree> children) {
    if (label < 1 || children.size() < 2) {
      throw std::invalid_argument("PlaneTree: internal node needs label >= 1 and >= 2 children");
    }
    return {label, std::move(children)};
  }

  bool is_leaf() const { return children.empty(); }

  std::size_t leaves() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
  }

  int max_label() const {
    int m = label;
    for (const auto& c : children) m = std::max(m, c.max_label());
    return m;
  }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend bool operator<(const PlaneTree& a, const PlaneTree& b) {
    if (a.label != b.label) return a.label < b.label;
    return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                        b.children.begin(), b.children.end());
  }
};

/// "L" for a leaf, "(i c1 c2 ...)" for an internal node labelled i.
inline std::string to_string(const PlaneTree& t) {
  if (t.is_leaf()) return "L";
  std::string s = "(" + std::to_string(t.label);
  for (const auto& c : t.children) s += " " + to_string(c);
  return s + ")";
}

namespace detail {

inline PlaneTree parse_tree(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size()) throw std::invalid_argument("parse_tree: unexpected end");
  if (text[pos] == 'L') {
    ++pos;
    return PlaneTree::leaf();
  }
  if (text[pos] != '(') throw std::invalid_argument("parse_tree: expected '(' or 'L'");
  ++pos;
  skip();
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) throw std::invalid_argument("parse_tree: missing label");
  const int label = std::stoi(std::string(text.substr(start, pos - start)));
  std::vector<PlaneTree> kids;
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    kids.push_back(parse_tree(text, pos));
  }
  return PlaneTree::node(label, std::move(kids));
}

}  // namespace detail

inline PlaneTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  PlaneTree t = detail::parse_tree(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw std::invalid_argument("parse_tree: trailing input");
  return t;
}

/// T_{d,1} .. T_{d,n}; levels[k] holds the trees with k leaves, sorted.
inline std::vector<std::vector<PlaneTree>> enumerate_tree_levels(int d, std::size_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("enumerate_trees: d, n >= 1");
  std::vector<std::vector<PlaneTree>> levels(n + 1);
  levels[1].push_back(PlaneTree::leaf());
  for (std::size_t m = 2; m <= n; ++m) {
    // Ordered forests of >= 2 subtrees with m leaves in total.
    std::vector<std::vector<PlaneTree>> forests;
    std::vector<PlaneTree> cur;
    auto build = [&](auto&& self, std::size_t remaining) -> void {
      if (remaining == 0) {
        if (cur.size() >= 2) forests.push_back(cur);
        return;
      }
      for (std::size_t part = 1; part <= remaining; ++part) {
        if (cur.empty() && part == m) continue;  // a lone child is not allowed
        for (const auto& sub : levels[part]) {
          cur.push_back(sub);
          self(self, remaining - part);
          cur.pop_back();
        }
      }
    };
    build(build, m);
    for (int label = 1; label <= d; ++label) {
      for (const auto& f : forests) levels[m].push_back(PlaneTree{label, f});
    }
    std::sort(levels[m].begin(), levels[m].end());
  }
  return levels;
}

inline std::vector<PlaneTree> enumerate_trees(int d, std::size_t n) {
  return std::move(enumerate_tree_levels(d, n)[n]);
}

/// t_d(1..N) from T = x + d T^2 / (1 - T), rearranged to
/// (1+d) T^2 - (1+x) T + x = 0, which gives for n >= 2
///   t(n) = (1+d) sum_{j=1}^{n-1} t(j) t(n-j) - t(n-1).
inline TruncatedSeries tree_counts(int d, std::size_t N) {
  if (N < 1) throw std::invalid_argument("tree_counts: N >= 1");
  TruncatedSeries t(N);
  t[1] = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    BigInt conv = 0;
    for (std::size_t j = 1; j < n; ++j) conv += t[j] * t[n - j];
    t[n] = BigInt(1 + d) * conv - t[n - 1];
  }
  return t;
}

/// Limit of t_d(n+1)/t_d(n).
inline double tree_growth_rate(int d) {
  return 2.0 * d + 1.0 + 2.0 * std::sqrt(static_cast<double>(d) * d + d);
}

/// Tree-to-decomposition map: a node labelled i with r children cuts the
/// cube into r slabs along axis i and places the children's images, left
/// to right, into the slabs.
inline Decomposition psi(const PlaneTree& T, int d) {
  if (T.max_label() > d) throw std::invalid_argument("psi: label exceeds d");
  if (T.is_leaf()) return Decomposition::trivial(d);
  const Region unit = unit_cube(d);
  const auto slabs = split(unit, T.label, static_cast<int>(T.children.size()));
  std::vector<Region> regs;
  for (std::size_t j = 0; j < slabs.size(); ++j) {
    const Decomposition child = psi(T.children[j], d);
    for (const auto& R : child.regions()) {
      regs.push_back(scale_map(unit, slabs[j], R));
    }
  }
  return {d, std::move(regs)};
}

}  // namespace hcd
