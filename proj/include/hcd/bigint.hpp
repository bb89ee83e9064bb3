#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcd {

/// Arbitrary-precision signed integer used for every exact count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

/// Natural log of a positive integer of any size.
inline double log_of(const BigInt& v) {
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace hcd
