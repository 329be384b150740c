#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "error.hpp"

namespace natlin {

// Universal numeric policy: exact, arbitrary-precision integers. Nothing in
// the library wraps or rounds; fixed-width fast paths exist only where an
// a-priori bound proves them exact (see oracle.cpp).
using Int = boost::multiprecision::cpp_int;

/// Floor division, exact for any signs; q such that q <= a/b < q + 1.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling division: smallest integer >= a/b.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// lcm of two nonzero integers, always positive.
inline Int lcm_positive(const Int& a, const Int& b) {
  Int g = boost::multiprecision::gcd(a, b);
  return abs_int(a / g * b);
}

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Strict decimal parser: optional sign, then digits. Anything else is rejected.
inline Int int_from_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw InvalidArgument("not a decimal integer: \"" + std::string(text) + "\"");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw InvalidArgument("not a decimal integer: \"" + std::string(text) + "\"");
  }
  Int magnitude(std::string(text.substr(i)));
  return text[0] == '-' ? Int(-magnitude) : magnitude;
}

}  // namespace natlin
