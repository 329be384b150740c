#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equation.hpp"
#include "lattice.hpp"

namespace natlin {

/// Candidate budget for finite enumeration; callers raise it explicitly
/// for larger instances.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// The complete natural solution set of a finite-regime equation, plus the
/// per-variable bounds d_i = floor(b / a_i) and the a-priori count bound
/// prod(1 + d_i) that certify completeness of the search.
struct FiniteSolutionSet {
  std::vector<std::vector<Int>> solutions;  // lexicographically sorted
  std::vector<Int> per_var_bounds;
  Int count_bound;
};

/// Exhaustive natural solutions of a finite-regime normalized equation
/// (no sign variation, nonzero rhs on the solvable side). Backtracks over
/// x_1 in [0, d_1], ... pruning on the running sum. Refuses with
/// ResourceLimit when prod(1 + d_i) exceeds cap.
FiniteSolutionSet enumerate_finite(const NormalizedEquation& neq,
                                   const Int& cap = Int(kDefaultEnumerationCap));

/// Desk-scale exhaustive check that the all-ones coefficient vector attains
/// the largest natural solution count among coefficient vectors in
/// [1, coeff_cap]^n for the fixed rhs b.
struct MaxCountReport {
  Int all_ones_count;
  Int max_count;
  bool all_ones_is_max = false;
  bool unique_max = false;                    // no other vector ties the maximum
  std::vector<std::vector<Int>> co_maximal;   // competitors achieving max_count
};

/// n <= 3, 1 <= b <= 12, coeff_cap <= 5; larger scales are rejected.
MaxCountReport max_count_report(int n, const Int& b, int coeff_cap);

/// Closed-form family for a*x - b*y = c (a, b > 0): x = b*k + x0,
/// y = a*k + y0 for integer k >= k_min. Canonicalized so that (x0, y0) is
/// the least natural solution and k_min = 0; a, b, c are reduced by their
/// gcd first. k_min stays tight: k_min - 1 always leaves N.
struct TwoVarSolution {
  Int x0, y0;
  Int a, b;   // reduced, positive
  Int k_min;
};

/// Returns nothing when gcd(a, b) does not divide c.
std::optional<TwoVarSolution> solve_ax_minus_by(const Int& a, const Int& b, const Int& c);

/// coeffs . k + constant >= 0 over the n-1 lattice parameters.
struct LinearInequality {
  std::vector<Int> coeffs;
  Int constant;
};

/// One inequality per equation variable: exactly the assertion x_i >= 0
/// under the lattice parametrization.
struct ConstraintSystem {
  std::vector<LinearInequality> inequalities;
  bool satisfied_by(std::span<const Int> params) const;
};

ConstraintSystem derive_nonneg_constraints(const IntegerSolutionLattice& lattice);

/// Lattice plus the nonnegativity constraints: the parameter vectors
/// satisfying the constraints map exactly onto the natural solution set.
struct ParametricNaturalSolution {
  IntegerSolutionLattice lattice;
  ConstraintSystem constraints;
};

ParametricNaturalSolution parametric_solution(const NormalizedEquation& neq);

/// Explicit arithmetic progression of natural solutions witnessing
/// infinitude: base + z * step for every integer z >= z_min. Steps are
/// strictly positive, so distinct z give distinct solutions.
struct ProgressionFamily {
  Int coeff_lcm;                 // positive lcm of |a_i|
  std::vector<Int> lcm_quotients;  // |coeff_lcm / a_i|
  Int pos_count, neg_count;      // nonzero counts of positive / negative coefficients
  Int count_lcm;                 // lcm(pos_count, neg_count)
  Int pos_scale, neg_scale;      // count_lcm / pos_count, count_lcm / neg_count
  std::vector<Int> base;         // a particular integer solution
  std::vector<Int> step;         // homogeneous direction, strictly positive
  Int z_min;

  std::vector<Int> at(const Int& z) const;
};

/// Requires sign variation and a particular integer solution of neq.
ProgressionFamily progression_family(const NormalizedEquation& neq, std::vector<Int> particular);

/// Up to `limit` natural solutions in the canonical order: increasing
/// component sum, ties broken lexicographically. Total over every
/// classification; the cap bounds the candidates visited.
std::vector<std::vector<Int>> stream_natural_solutions(const LinearEquation& eq,
                                                       std::uint64_t limit,
                                                       const Int& cap = Int(kDefaultEnumerationCap));

}  // namespace natlin
