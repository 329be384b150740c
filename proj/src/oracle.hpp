#pragma once

#include <vector>

#include "equation.hpp"

namespace natlin::oracle {

// Exhaustive reference solvers. Every candidate vector in the box is tested
// against the equation; nothing here shares solving logic with the lattice
// or enumeration modules, so agreement between them is meaningful evidence.

inline constexpr std::uint64_t kCandidateGuard = 100'000'000;

/// All natural solutions with every component in [0, box]; box >= 1.
/// Sorted lexicographically. Throws ResourceLimit when (box+1)^n exceeds
/// the candidate guard.
std::vector<std::vector<Int>> brute_force_natural(const LinearEquation& eq, const Int& box);

/// All integer solutions with every component in [-box, box]; box >= 1.
/// Sorted lexicographically. Throws ResourceLimit when (2*box+1)^n exceeds
/// the candidate guard.
std::vector<std::vector<Int>> brute_force_integer(const LinearEquation& eq, const Int& box);

}  // namespace natlin::oracle
