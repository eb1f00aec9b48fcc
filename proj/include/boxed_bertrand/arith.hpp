#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <string>

namespace boxed_bertrand {

// Pair counts reach (8n)^2; 128 bits keeps every desk-scale n exact.
using Count = unsigned __int128;

// 50 decimal digits, enough for the 30-digit constants and exact-looking ratios.
using Decimal = boost::multiprecision::cpp_bin_float_50;

std::string to_string(Count value);

// Largest r with r*r <= v.
std::uint64_t isqrt(std::uint64_t v);

inline bool is_square(std::uint64_t v) {
  const std::uint64_t r = isqrt(v);
  return r * r == v;
}

// Decimal rendering with `digits` significant digits.
std::string to_string(const Decimal& value, int digits = 30);

inline Decimal to_decimal(Count value) {
  // cpp_bin_float has no __int128 constructor; split into halves.
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  const auto lo = static_cast<std::uint64_t>(value);
  Decimal d = hi;
  d = ldexp(d, 64);
  d += lo;
  return d;
}

}  // namespace boxed_bertrand
