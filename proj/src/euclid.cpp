#include "euclid.hpp"

#include <utility>

#include "error.hpp"

namespace natlin {

BezoutResult gcd_ext(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw InvalidArgument("gcd_ext: both arguments are zero");

  // Iterative extended Euclid; cpp_int division truncates toward zero, which
  // keeps the invariants old_s*a + old_t*b = old_r valid for negative inputs.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return BezoutResult{std::move(old_r), {std::move(old_s), std::move(old_t)}};
}

BezoutResult multi_gcd_bezout(std::span<const Int> values) {
  if (values.empty()) throw InvalidArgument("multi_gcd_bezout: empty input");
  for (const auto& v : values) {
    if (v == 0) throw InvalidArgument("multi_gcd_bezout: zero entry");
  }

  BezoutResult acc;
  acc.g = abs_int(values[0]);
  acc.coefficients = {values[0] < 0 ? Int(-1) : Int(1)};
  for (std::size_t i = 1; i < values.size(); ++i) {
    BezoutResult step = gcd_ext(acc.g, values[i]);
    for (auto& u : acc.coefficients) u *= step.coefficients[0];
    acc.coefficients.push_back(std::move(step.coefficients[1]));
    acc.g = std::move(step.g);
  }
  return acc;
}

}  // namespace natlin
