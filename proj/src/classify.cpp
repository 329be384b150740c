#include "classify.hpp"

namespace natlin {

std::string_view classification_tag(Classification c) {
  switch (c) {
    case Classification::EmptyNoInteger: return "empty_no_integer";
    case Classification::EmptyNoNatural: return "empty_no_natural";
    case Classification::TrivialOnly: return "trivial_only";
    case Classification::Finite: return "finite";
    case Classification::Infinite: return "infinite";
  }
  return "unknown";
}

bool has_sign_variation(const LinearEquation& eq) {
  bool any_pos = false, any_neg = false;
  for (const auto& c : eq.coeffs()) {
    if (c > 0) any_pos = true;
    if (c < 0) any_neg = true;
  }
  return any_pos && any_neg;
}

Classification classify(const LinearEquation& eq) {
  auto normalized = normalize(eq);
  if (!normalized) return Classification::EmptyNoInteger;

  if (has_sign_variation(eq)) return Classification::Infinite;

  // All coefficients share one sign; orient them positive.
  Int b = normalized->equation.rhs();
  if (normalized->equation.coeffs()[0] < 0) b = -b;

  if (b < 0) return Classification::EmptyNoNatural;
  if (b == 0) return Classification::TrivialOnly;
  return Classification::Finite;
}

}  // namespace natlin
