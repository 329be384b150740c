#include "solver.hpp"

namespace natlin {

bool Analysis::has_natural_solutions() const {
  switch (classification) {
    case Classification::EmptyNoInteger:
    case Classification::EmptyNoNatural:
      return false;
    case Classification::TrivialOnly:
    case Classification::Infinite:
      return true;
    case Classification::Finite:
      return finite && !finite->solutions.empty();
  }
  return false;
}

Analysis analyze(const LinearEquation& eq, const Int& cap) {
  Analysis result{.equation = eq, .classification = classify(eq)};
  if (result.classification == Classification::EmptyNoInteger) return result;

  result.normalized = normalize(eq);
  switch (result.classification) {
    case Classification::EmptyNoNatural:
      break;
    case Classification::TrivialOnly: {
      FiniteSolutionSet trivial;
      trivial.solutions.push_back(std::vector<Int>(eq.size(), 0));
      trivial.per_var_bounds.assign(eq.size(), 0);
      trivial.count_bound = 1;
      result.finite = std::move(trivial);
      break;
    }
    case Classification::Finite:
      result.finite = enumerate_finite(*result.normalized, cap);
      break;
    case Classification::Infinite:
      result.parametric = parametric_solution(*result.normalized);
      result.family = progression_family(*result.normalized, result.parametric->lattice.particular);
      break;
    case Classification::EmptyNoInteger:
      break;
  }
  return result;
}

}  // namespace natlin
