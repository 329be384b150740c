#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "classify.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "support/corpus.hpp"
#include "support/rational_solve.hpp"

using natlin::Int;
using natlin::IntegerSolutionLattice;
using natlin::LinearEquation;

namespace {

LinearEquation eq_of(std::vector<int> coeffs, int rhs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return LinearEquation::with_default_names(std::move(c), Int(rhs));
}

IntegerSolutionLattice solve_lattice(const LinearEquation& eq) {
  auto norm = natlin::normalize(eq);
  REQUIRE(norm.has_value());
  return natlin::integer_general_solution(*norm);
}

}  // namespace

TEST_CASE("pinned lattice for the three-variable example") {
  IntegerSolutionLattice lat = solve_lattice(eq_of({3, -7, 2}, -18));
  CHECK(lat.particular == std::vector<Int>{36, 18, 0});
  REQUIRE(lat.basis.size() == 2);
  CHECK(lat.basis[0] == std::vector<Int>{7, 3, 0});
  CHECK(lat.basis[1] == std::vector<Int>{4, 2, 1});
}

TEST_CASE("single-variable equations have an empty basis") {
  IntegerSolutionLattice lat = solve_lattice(eq_of({1}, 5));
  CHECK(lat.particular == std::vector<Int>{5});
  CHECK(lat.basis.empty());

  lat = solve_lattice(eq_of({-1}, 5));
  CHECK(lat.particular == std::vector<Int>{-5});
}

TEST_CASE("rejects non-coprime input") {
  natlin::NormalizedEquation fake{eq_of({2, 4}, 6), Int(1)};
  CHECK_THROWS_AS(natlin::integer_general_solution(fake), natlin::InvalidArgument);
}

TEST_CASE("evaluate_lattice checks the parameter count") {
  IntegerSolutionLattice lat = solve_lattice(eq_of({3, -7, 2}, -18));
  std::vector<Int> too_short{1};
  CHECK_THROWS_AS(natlin::evaluate_lattice(lat, too_short), natlin::InvalidArgument);
}

TEST_CASE("soundness: every parameter vector lands on a solution") {
  natlin::testsupport::EquationCorpus corpus(4404);
  int checked = 0;
  while (checked < 120) {
    LinearEquation eq = corpus.next(2, 4);
    auto norm = natlin::normalize(eq);
    if (!norm) continue;
    ++checked;
    IntegerSolutionLattice lat = natlin::integer_general_solution(*norm);

    CHECK(eq.satisfied_by(lat.particular));
    REQUIRE(lat.basis.size() == eq.size() - 1);
    for (const auto& vec : lat.basis) {
      Int dot = 0;
      for (std::size_t i = 0; i < vec.size(); ++i) dot += eq.coeffs()[i] * vec[i];
      CHECK(dot == 0);

      bool seen_nonzero = false;
      for (const auto& entry : vec) {
        if (entry == 0) continue;
        if (!seen_nonzero) CHECK(entry > 0);
        seen_nonzero = true;
      }
      CHECK(seen_nonzero);
    }

    for (int sample = 0; sample < 20; ++sample) {
      std::vector<Int> params;
      for (std::size_t j = 0; j < lat.basis.size(); ++j)
        params.emplace_back(corpus.integer_in(-8, 8));
      CHECK(eq.satisfied_by(natlin::evaluate_lattice(lat, params)));
    }
  }
}

TEST_CASE("completeness: every boxed integer solution has an integer preimage") {
  natlin::testsupport::EquationCorpus corpus(5505);
  int checked = 0;
  while (checked < 60) {
    LinearEquation eq = corpus.next(2, 4);
    auto norm = natlin::normalize(eq);
    if (!norm) continue;
    ++checked;
    IntegerSolutionLattice lat = natlin::integer_general_solution(*norm);

    auto hits = natlin::oracle::brute_force_integer(eq, Int(6));
    for (const auto& hit : hits)
      CHECK(natlin::testsupport::has_integer_preimage(lat, hit));
  }
}

TEST_CASE("determinism: identical input yields identical lattice") {
  LinearEquation eq = eq_of({6, 10, -15}, 7);
  IntegerSolutionLattice a = solve_lattice(eq);
  IntegerSolutionLattice b = solve_lattice(eq);
  CHECK(a.particular == b.particular);
  CHECK(a.basis == b.basis);
}
