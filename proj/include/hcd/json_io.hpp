#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcd/asymptotics.hpp"
#include "hcd/covering.hpp"
#include "hcd/geometry.hpp"
#include "hcd/prime_sequences.hpp"
#include "hcd/series.hpp"
#include "hcd/trees.hpp"

namespace hcd {

using json = nlohmann::json;

/// "p/q" or "p".
inline Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Fraction(std::stoll(text));
    return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("parse_fraction: bad fraction '" + text + "'");
  }
}

/// {"d": 2, "regions": [[["0/1","1/2"],["0/1","1/1"]], ...]}; region
/// entries list one [lo, hi] pair per axis.
inline json to_json(const Decomposition& S) {
  json regions = json::array();
  for (const auto& R : S.regions()) {
    json sides = json::array();
    for (const auto& s : R.sides) sides.push_back({to_string(s.lo), to_string(s.hi)});
    regions.push_back(std::move(sides));
  }
  return {{"d", S.dim()}, {"regions", std::move(regions)}};
}

inline Decomposition decomposition_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  std::vector<Region> regions;
  for (const auto& r : j.at("regions")) {
    Region R;
    for (const auto& s : r) {
      const auto read = [](const json& v) {
        return v.is_string() ? parse_fraction(v.get<std::string>()) : Fraction(v.get<std::int64_t>());
      };
      R.sides.push_back({read(s.at(0)), read(s.at(1))});
    }
    regions.push_back(std::move(R));
  }
  Decomposition S(d, std::move(regions));
  if (!S.is_partition()) throw std::invalid_argument("decomposition: regions do not tile the cube");
  return S;
}

inline json to_json(const Necs& C) {
  json classes = json::array();
  for (const auto& c : C.classes()) classes.push_back({{"a", c.a}, {"n", c.n}});
  return {{"classes", std::move(classes)}};
}

inline Necs necs_from_json(const json& j) {
  std::vector<ResidueClass> classes;
  for (const auto& c : j.at("classes")) {
    classes.push_back({c.at("a").get<std::int64_t>(), c.at("n").get<std::int64_t>()});
  }
  return Necs(std::move(classes));
}

inline json to_json(const PrimeSequence& A) {
  json out = json::array();
  for (const auto& s : A) {
    json set = json::array();
    for (const auto& e : s.elements()) set.push_back({{"p", e.prime}, {"colour", e.colour}});
    out.push_back(std::move(set));
  }
  return out;
}

inline PrimeSequence prime_sequence_from_json(const json& j) {
  PrimeSequence A;
  for (const auto& set : j) {
    std::vector<ColouredPrime> elems;
    for (const auto& e : set) {
      elems.push_back({e.at("p").get<std::int64_t>(), e.at("colour").get<int>()});
    }
    A.emplace_back(std::move(elems));
  }
  return A;
}

/// Trees travel as {"d": D, "tree": "(1 L L)"}.
inline json to_json(const PlaneTree& T, int d) {
  return {{"d", d}, {"tree", to_string(T)}};
}

inline json to_json(const SaddleResult& r) {
  return {{"d", r.d},
          {"s", r.s},
          {"M_at_s", r.M_at_s},
          {"M1_at_s", r.M1_at_s},
          {"M2_at_s", r.M2_at_s},
          {"growth_rate", r.growth_rate},
          {"excess", r.growth_rate - (4.0 * r.d + 1.5)},
          {"truncation_order", r.truncation_order},
          {"M_tail", r.M_tail},
          {"tail_bound_used", r.tail_bound_used}};
}

/// Coefficients 1..N as decimal strings.
inline json coefficients_json(const TruncatedSeries& s, std::size_t from = 1) {
  json out = json::array();
  for (std::size_t n = from; n <= s.order(); ++n) out.push_back(to_decimal(s[n]));
  return out;
}

}  // namespace hcd
