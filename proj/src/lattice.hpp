#pragma once

#include <span>
#include <vector>

#include "equation.hpp"

namespace natlin {

/// The complete integer solution set of an equation, as an affine lattice:
/// { particular + sum_j k_j * basis[j] : k integer }. The basis spans the
/// full integer kernel of the homogeneous equation, so every integer
/// solution has an integer parameter vector.
struct IntegerSolutionLattice {
  std::vector<Int> particular;            // one integer solution
  std::vector<std::vector<Int>> basis;    // n-1 independent homogeneous solutions
  std::size_t dim() const { return particular.size(); }
};

/// General integer solution by recursive gcd elimination: the first two
/// unknowns are folded through their gcd into one, the smaller problem is
/// solved, and the elimination contributes the kernel vector
/// (a2/g, -a1/g, 0, ..., 0). Requires gcd(coefficients) = 1.
IntegerSolutionLattice integer_general_solution(const NormalizedEquation& neq);

/// particular + sum_j params[j] * basis[j]; params must have length n-1.
std::vector<Int> evaluate_lattice(const IntegerSolutionLattice& lattice,
                                  std::span<const Int> params);

}  // namespace natlin
