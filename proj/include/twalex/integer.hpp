#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace twalex {

/// Arbitrary-precision signed integer used for every exact coefficient.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer &a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer &a, const Integer &b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer pow(const Integer &base, std::size_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline std::string to_string(const Integer &a) { return a.str(); }

inline Integer parse_integer(std::string_view text) {
  return Integer(std::string(text));
}

inline bool fits_int64(const Integer &a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

} // namespace twalex
