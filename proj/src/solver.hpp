#pragma once

#include <optional>

#include "classify.hpp"
#include "natsolve.hpp"

namespace natlin {

/// Full pipeline result for one equation. Populated members depend on the
/// classification:
///   EmptyNoInteger  nothing beyond the tag
///   EmptyNoNatural  normalized
///   TrivialOnly     normalized, finite (the zero vector, bounds all zero)
///   Finite          normalized, finite
///   Infinite        normalized, parametric, family
struct Analysis {
  LinearEquation equation;
  Classification classification;
  std::optional<NormalizedEquation> normalized;
  std::optional<FiniteSolutionSet> finite;
  std::optional<ParametricNaturalSolution> parametric;
  std::optional<ProgressionFamily> family;

  bool has_natural_solutions() const;
};

/// Runs classification and the matching solver. `cap` bounds the finite
/// enumeration; it does not affect the other regimes.
Analysis analyze(const LinearEquation& eq, const Int& cap = Int(kDefaultEnumerationCap));

}  // namespace natlin
