#include "lattice.hpp"

#include "error.hpp"
#include "euclid.hpp"

namespace natlin {
namespace {

// Solves sum(a[i] * x[i]) = rhs with gcd(a) | rhs, a[i] != 0.
void solve_recursive(std::span<const Int> a, const Int& rhs, std::vector<Int>& particular,
                     std::vector<std::vector<Int>>& basis) {
  if (a.size() == 1) {
    if (rhs % a[0] != 0)
      throw InvalidArgument("lattice: gcd of coefficients does not divide the right-hand side");
    particular = {rhs / a[0]};
    basis.clear();
    return;
  }

  BezoutResult bez = gcd_ext(a[0], a[1]);  // u*a0 + v*a1 = g
  const Int& u = bez.coefficients[0];
  const Int& v = bez.coefficients[1];

  std::vector<Int> reduced;
  reduced.reserve(a.size() - 1);
  reduced.push_back(bez.g);
  for (std::size_t i = 2; i < a.size(); ++i) reduced.push_back(a[i]);

  std::vector<Int> sub_particular;
  std::vector<std::vector<Int>> sub_basis;
  solve_recursive(reduced, rhs, sub_particular, sub_basis);

  // Undo the fold: the combined unknown w splits as (u*w, v*w).
  particular.clear();
  particular.reserve(a.size());
  particular.push_back(u * sub_particular[0]);
  particular.push_back(v * sub_particular[0]);
  for (std::size_t i = 1; i < sub_particular.size(); ++i) particular.push_back(sub_particular[i]);

  basis.clear();
  basis.reserve(a.size() - 1);
  std::vector<Int> elimination(a.size(), 0);
  elimination[0] = a[1] / bez.g;
  elimination[1] = -a[0] / bez.g;
  basis.push_back(std::move(elimination));
  for (auto& sub : sub_basis) {
    std::vector<Int> lifted;
    lifted.reserve(a.size());
    lifted.push_back(u * sub[0]);
    lifted.push_back(v * sub[0]);
    for (std::size_t i = 1; i < sub.size(); ++i) lifted.push_back(std::move(sub[i]));
    basis.push_back(std::move(lifted));
  }
}

}  // namespace

IntegerSolutionLattice integer_general_solution(const NormalizedEquation& neq) {
  const LinearEquation& eq = neq.equation;
  if (multi_gcd_bezout(eq.coeffs()).g != 1)
    throw InvalidArgument("lattice: coefficients are not coprime; normalize first");

  IntegerSolutionLattice lattice;
  solve_recursive(eq.coeffs(), eq.rhs(), lattice.particular, lattice.basis);

  // Orient each basis vector so its first nonzero entry is positive; a sign
  // flip spans the same lattice and keeps rendered output stable.
  for (auto& vec : lattice.basis) {
    for (const auto& entry : vec) {
      if (entry == 0) continue;
      if (entry < 0)
        for (auto& e : vec) e = -e;
      break;
    }
  }
  return lattice;
}

std::vector<Int> evaluate_lattice(const IntegerSolutionLattice& lattice,
                                  std::span<const Int> params) {
  if (params.size() != lattice.basis.size())
    throw InvalidArgument("lattice evaluation needs exactly " +
                          std::to_string(lattice.basis.size()) + " parameters");
  std::vector<Int> point = lattice.particular;
  for (std::size_t j = 0; j < params.size(); ++j)
    for (std::size_t i = 0; i < point.size(); ++i) point[i] += params[j] * lattice.basis[j][i];
  return point;
}

}  // namespace natlin
