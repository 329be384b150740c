#include "natsolve.hpp"

#include <algorithm>
#include <limits>

#include "classify.hpp"
#include "error.hpp"
#include "euclid.hpp"

namespace natlin {
namespace {

std::uint64_t saturating_u64(const Int& v) {
  if (v < 0) return 0;
  if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return v.convert_to<std::uint64_t>();
}

// Backtracking over x[0..n-2] with running sum pruning; the last unknown is
// solved by divisibility. Coefficients must all be positive, rhs > 0.
void enumerate_positive(const std::vector<Int>& a, const Int& rhs, std::size_t depth,
                        const Int& acc, std::vector<Int>& x,
                        std::vector<std::vector<Int>>& out) {
  if (depth + 1 == a.size()) {
    Int remaining = rhs - acc;
    if (remaining % a[depth] == 0) {
      x[depth] = remaining / a[depth];
      out.push_back(x);
    }
    return;
  }
  Int bound = (rhs - acc) / a[depth];
  for (Int xi = 0; xi <= bound; ++xi) {
    x[depth] = xi;
    enumerate_positive(a, rhs, depth + 1, acc + a[depth] * xi, x, out);
  }
}

}  // namespace

FiniteSolutionSet enumerate_finite(const NormalizedEquation& neq, const Int& cap) {
  if (has_sign_variation(neq.equation))
    throw InvalidArgument("enumerate_finite requires an equation without sign variation");

  LinearEquation eq =
      neq.equation.coeffs()[0] < 0 ? neq.equation.negated() : neq.equation;
  if (eq.rhs() <= 0)
    throw InvalidArgument("enumerate_finite requires the finite classification (positive rhs)");

  FiniteSolutionSet result;
  result.count_bound = 1;
  result.per_var_bounds.reserve(eq.size());
  for (const auto& c : eq.coeffs()) {
    Int d = eq.rhs() / c;  // both positive, truncation is floor
    result.count_bound *= d + 1;
    result.per_var_bounds.push_back(std::move(d));
  }
  if (result.count_bound > cap)
    throw ResourceLimit("finite enumeration bound " + to_decimal(result.count_bound) +
                        " exceeds cap " + to_decimal(cap));

  std::vector<Int> x(eq.size(), 0);
  enumerate_positive(eq.coeffs(), eq.rhs(), 0, Int(0), x, result.solutions);
  return result;  // backtracking in ascending order == lexicographic
}

MaxCountReport max_count_report(int n, const Int& b, int coeff_cap) {
  if (n < 1 || n > 3) throw InvalidArgument("max_count_report: n must be in [1, 3]");
  if (b < 1 || b > 12) throw InvalidArgument("max_count_report: b must be in [1, 12]");
  if (coeff_cap < 1 || coeff_cap > 5)
    throw InvalidArgument("max_count_report: coeff_cap must be in [1, 5]");

  auto count_for = [&](const std::vector<Int>& coeffs) -> Int {
    auto normalized = normalize(LinearEquation::with_default_names(coeffs, b));
    if (!normalized) return 0;
    return Int(enumerate_finite(*normalized).solutions.size());
  };

  MaxCountReport report;
  std::vector<Int> coeffs(static_cast<std::size_t>(n), 1);
  report.all_ones_count = count_for(coeffs);
  report.max_count = report.all_ones_count;

  // Odometer over all coefficient vectors in [1, coeff_cap]^n.
  while (true) {
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] == coeff_cap) coeffs[pos++] = 1;
    if (pos == coeffs.size()) break;
    ++coeffs[pos];

    Int count = count_for(coeffs);
    if (count > report.max_count) {
      report.max_count = count;
      report.co_maximal.clear();
      report.co_maximal.push_back(coeffs);
    } else if (count == report.max_count) {
      report.co_maximal.push_back(coeffs);
    }
  }

  report.all_ones_is_max = report.all_ones_count == report.max_count;
  report.unique_max = report.all_ones_is_max && report.co_maximal.empty();
  return report;
}

std::optional<TwoVarSolution> solve_ax_minus_by(const Int& a, const Int& b, const Int& c) {
  if (a <= 0 || b <= 0) throw InvalidArgument("solve_ax_minus_by: a and b must be positive");

  Int g = boost::multiprecision::gcd(a, b);
  if (c % g != 0) return std::nullopt;

  TwoVarSolution sol;
  sol.a = a / g;
  sol.b = b / g;
  Int cr = c / g;

  BezoutResult bez = gcd_ext(sol.a, sol.b);  // u*a + v*b = 1
  sol.x0 = bez.coefficients[0] * cr;
  sol.y0 = -bez.coefficients[1] * cr;

  // Shift k so the particular solution is the least natural one; the bound
  // k >= 0 is then tight by the ceiling construction.
  Int k_min = std::max(ceil_div(-sol.x0, sol.b), ceil_div(-sol.y0, sol.a));
  sol.x0 += k_min * sol.b;
  sol.y0 += k_min * sol.a;
  sol.k_min = 0;
  return sol;
}

bool ConstraintSystem::satisfied_by(std::span<const Int> params) const {
  for (const auto& ineq : inequalities) {
    if (params.size() != ineq.coeffs.size())
      throw InvalidArgument("parameter vector length does not match the constraint system");
    Int value = ineq.constant;
    for (std::size_t j = 0; j < params.size(); ++j) value += ineq.coeffs[j] * params[j];
    if (value < 0) return false;
  }
  return true;
}

ConstraintSystem derive_nonneg_constraints(const IntegerSolutionLattice& lattice) {
  ConstraintSystem system;
  system.inequalities.reserve(lattice.dim());
  for (std::size_t i = 0; i < lattice.dim(); ++i) {
    LinearInequality ineq;
    ineq.coeffs.reserve(lattice.basis.size());
    for (const auto& vec : lattice.basis) ineq.coeffs.push_back(vec[i]);
    ineq.constant = lattice.particular[i];
    system.inequalities.push_back(std::move(ineq));
  }
  return system;
}

ParametricNaturalSolution parametric_solution(const NormalizedEquation& neq) {
  ParametricNaturalSolution result;
  result.lattice = integer_general_solution(neq);
  result.constraints = derive_nonneg_constraints(result.lattice);
  return result;
}

std::vector<Int> ProgressionFamily::at(const Int& z) const {
  std::vector<Int> point(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) point[i] = base[i] + z * step[i];
  return point;
}

ProgressionFamily progression_family(const NormalizedEquation& neq, std::vector<Int> particular) {
  const LinearEquation& eq = neq.equation;
  if (!has_sign_variation(eq))
    throw InvalidArgument("progression_family requires sign variation");
  if (!eq.satisfied_by(particular))
    throw InvalidArgument("progression_family: particular does not satisfy the equation");

  ProgressionFamily family;
  family.coeff_lcm = 1;
  for (const auto& c : eq.coeffs()) family.coeff_lcm = lcm_positive(family.coeff_lcm, c);

  family.pos_count = 0;
  family.neg_count = 0;
  family.lcm_quotients.reserve(eq.size());
  for (const auto& c : eq.coeffs()) {
    family.lcm_quotients.push_back(family.coeff_lcm / abs_int(c));
    (c > 0 ? family.pos_count : family.neg_count) += 1;
  }
  family.count_lcm = lcm_positive(family.pos_count, family.neg_count);
  family.pos_scale = family.count_lcm / family.pos_count;
  family.neg_scale = family.count_lcm / family.neg_count;

  family.step.reserve(eq.size());
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const Int& scale = eq.coeffs()[i] > 0 ? family.pos_scale : family.neg_scale;
    family.step.push_back(scale * family.lcm_quotients[i]);
  }

  family.base = std::move(particular);
  family.z_min = 0;
  for (std::size_t i = 0; i < family.base.size(); ++i)
    family.z_min = std::max(family.z_min, ceil_div(-family.base[i], family.step[i]));
  return family;
}

namespace {

// All natural vectors with component sum exactly `target_sum` satisfying the
// equation, in lexicographic order. Decrements `budget` per candidate leaf.
void level_scan(const std::vector<Int>& a, const Int& rhs, const Int& target_sum,
                std::size_t depth, const Int& sum_left, const Int& acc, std::vector<Int>& x,
                std::vector<std::vector<Int>>& out, std::uint64_t& budget) {
  if (depth + 1 == a.size()) {
    if (budget == 0)
      throw ResourceLimit("solution stream exceeded its candidate budget");
    --budget;
    x[depth] = sum_left;
    if (acc + a[depth] * sum_left == rhs) out.push_back(x);
    return;
  }
  for (Int xi = 0; xi <= sum_left; ++xi) {
    x[depth] = xi;
    level_scan(a, rhs, target_sum, depth + 1, sum_left - xi, acc + a[depth] * xi, x, out, budget);
  }
}

}  // namespace

std::vector<std::vector<Int>> stream_natural_solutions(const LinearEquation& eq,
                                                       std::uint64_t limit, const Int& cap) {
  if (limit == 0) throw InvalidArgument("stream limit must be positive");

  switch (classify(eq)) {
    case Classification::EmptyNoInteger:
    case Classification::EmptyNoNatural:
      return {};
    case Classification::TrivialOnly:
      return {std::vector<Int>(eq.size(), 0)};
    case Classification::Finite: {
      auto finite = enumerate_finite(*normalize(eq), cap);
      std::vector<std::pair<Int, std::vector<Int>>> keyed;
      keyed.reserve(finite.solutions.size());
      for (auto& sol : finite.solutions) {
        Int sum = 0;
        for (const auto& v : sol) sum += v;
        keyed.emplace_back(std::move(sum), std::move(sol));
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<std::vector<Int>> out;
      for (auto& [sum, sol] : keyed) {
        if (out.size() == limit) break;
        out.push_back(std::move(sol));
      }
      return out;
    }
    case Classification::Infinite:
      break;
  }

  // Infinite regime: walk component sums upward; each level is finite and
  // solutions exist at some level, so the walk reaches `limit` (or trips the
  // candidate budget on adversarial inputs).
  std::uint64_t budget = saturating_u64(cap);
  std::vector<std::vector<Int>> out;
  std::vector<Int> x(eq.size(), 0);
  for (Int s = 0; out.size() < limit; ++s) {
    std::vector<std::vector<Int>> level;
    level_scan(eq.coeffs(), eq.rhs(), s, 0, s, Int(0), x, level, budget);
    for (auto& sol : level) {
      if (out.size() == limit) break;
      out.push_back(std::move(sol));
    }
  }
  return out;
}

}  // namespace natlin
