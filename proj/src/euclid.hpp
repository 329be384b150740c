#pragma once

#include <span>
#include <vector>

#include "bigint.hpp"

namespace natlin {

/// gcd written as an integer combination of the inputs:
/// sum(coefficients[i] * a[i]) = g, with g = gcd(|a_1|, ..., |a_n|) > 0.
struct BezoutResult {
  Int g;
  std::vector<Int> coefficients;
};

/// Extended Euclid for two integers, (a, b) != (0, 0). The returned g is
/// always positive; the coefficient pair absorbs the input signs.
BezoutResult gcd_ext(const Int& a, const Int& b);

/// gcd and a combining vector for n >= 1 nonzero integers, built by folding
/// gcd_ext left to right (fixed order, so results are deterministic).
BezoutResult multi_gcd_bezout(std::span<const Int> values);

}  // namespace natlin
