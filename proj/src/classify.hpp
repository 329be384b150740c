#pragma once

#include <string_view>

#include "equation.hpp"

namespace natlin {

/// The five mutually exclusive regimes of an equation's natural-number
/// (N includes 0) solution set.
enum class Classification {
  EmptyNoInteger,   // gcd of coefficients does not divide rhs: no integer solutions at all
  EmptyNoNatural,   // integer solutions exist, but rhs is on the wrong side of all-same-sign coefficients
  TrivialOnly,      // homogeneous without sign variation: only the zero vector
  Finite,           // no sign variation, solvable side: finitely many (possibly zero) solutions
  Infinite,         // sign variation and divisible rhs: infinitely many natural solutions
};

/// Stable lower_snake tag used by the CLI and JSON output.
std::string_view classification_tag(Classification c);

/// True iff two coefficients have opposite signs.
bool has_sign_variation(const LinearEquation& eq);

/// Total, deterministic classification of the natural solution set.
Classification classify(const LinearEquation& eq);

}  // namespace natlin
