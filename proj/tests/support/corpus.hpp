#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "equation.hpp"

namespace natlin::testsupport {

/// Deterministic random equations: n variables, coefficients drawn from
/// [-coeff_mag, coeff_mag] without 0, |rhs| <= rhs_mag. Fixed seeds keep
/// every test run on the identical corpus.
class EquationCorpus {
 public:
  explicit EquationCorpus(std::uint64_t seed) : rng_(seed) {}

  LinearEquation next(int min_vars = 1, int max_vars = 4, int coeff_mag = 9, int rhs_mag = 30) {
    std::uniform_int_distribution<int> size_dist(min_vars, max_vars);
    int n = size_dist(rng_);
    std::vector<Int> coeffs;
    coeffs.reserve(n);
    for (int i = 0; i < n; ++i) coeffs.emplace_back(nonzero(coeff_mag));
    std::uniform_int_distribution<int> rhs_dist(-rhs_mag, rhs_mag);
    return LinearEquation::with_default_names(std::move(coeffs), Int(rhs_dist(rng_)));
  }

  int nonzero(int magnitude) {
    std::uniform_int_distribution<int> mag(1, magnitude);
    std::uniform_int_distribution<int> flip(0, 1);
    int v = mag(rng_);
    return flip(rng_) ? v : -v;
  }

  int integer_in(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace natlin::testsupport
