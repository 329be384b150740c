#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace natlin {

/// A linear equation sum(coeffs[i] * x[i]) = rhs over integer unknowns.
/// Immutable after construction. Every coefficient is nonzero, variable
/// names are distinct, and vectors are positionally aligned with the
/// variable order.
class LinearEquation {
 public:
  LinearEquation(std::vector<Int> coeffs, Int rhs, std::vector<std::string> var_names);

  /// Convenience constructor naming the unknowns x1, x2, ...
  static LinearEquation with_default_names(std::vector<Int> coeffs, Int rhs);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& rhs() const { return rhs_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Left-hand side value at x.
  Int evaluate(std::span<const Int> x) const;
  bool satisfied_by(std::span<const Int> x) const;

  /// The equation multiplied by -1 (same solution set).
  LinearEquation negated() const;

  bool operator==(const LinearEquation&) const = default;

 private:
  std::vector<Int> coeffs_;
  Int rhs_;
  std::vector<std::string> var_names_;
};

/// Equation scaled down by the gcd of its coefficients; the scaled equation
/// has coprime coefficients and the identical solution set.
struct NormalizedEquation {
  LinearEquation equation;
  Int original_gcd;  // > 0, divides every original coefficient
};

/// Divides through by d = gcd(coefficients). Returns nothing when d does not
/// divide the right-hand side, i.e. the equation has no integer solutions.
std::optional<NormalizedEquation> normalize(const LinearEquation& eq);

}  // namespace natlin
