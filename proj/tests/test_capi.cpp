#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "natlin/natlin.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string value(s);
  natlin_string_free(s);
  return value;
}

template <typename Fn, typename... Args>
std::string fetch(Fn fn, Args... args) {
  char* out = nullptr;
  REQUIRE(fn(args..., &out) == NATLIN_OK);
  return take(out);
}

struct Equation {
  natlin_equation* h = nullptr;
  explicit Equation(const char* text) { REQUIRE(natlin_equation_parse(text, &h) == NATLIN_OK); }
  ~Equation() { natlin_equation_free(h); }
};

struct Analysis {
  natlin_analysis* h = nullptr;
  explicit Analysis(const natlin_equation* eq, const char* cap = nullptr) {
    REQUIRE(natlin_analyze(eq, cap, &h) == NATLIN_OK);
  }
  ~Analysis() { natlin_analysis_free(h); }
};

}  // namespace

TEST_CASE("version and class names") {
  CHECK(std::string(natlin_version()) == "0.1.0");
  CHECK(std::string(natlin_class_name(NATLIN_CLASS_FINITE)) == "finite");
  CHECK(std::string(natlin_class_name(NATLIN_CLASS_EMPTY_NO_INTEGER)) == "empty_no_integer");
  CHECK(std::string(natlin_class_name(NATLIN_CLASS_EMPTY_NO_NATURAL)) == "empty_no_natural");
  CHECK(std::string(natlin_class_name(NATLIN_CLASS_TRIVIAL_ONLY)) == "trivial_only");
  CHECK(std::string(natlin_class_name(NATLIN_CLASS_INFINITE)) == "infinite");
}

TEST_CASE("equation parsing, accessors, and rendering") {
  Equation eq("3x - 7y + 2z = -18");
  CHECK(natlin_equation_size(eq.h) == 3);
  CHECK(fetch(natlin_equation_coeff, (const natlin_equation*)eq.h, (size_t)1) == "-7");
  CHECK(fetch(natlin_equation_rhs, (const natlin_equation*)eq.h) == "-18");
  CHECK(fetch(natlin_equation_var_name, (const natlin_equation*)eq.h, (size_t)2) == "z");
  CHECK(fetch(natlin_equation_render, (const natlin_equation*)eq.h) == "3x - 7y + 2z = -18");

  natlin_class cls;
  CHECK(natlin_classify(eq.h, &cls) == NATLIN_OK);
  CHECK(cls == NATLIN_CLASS_INFINITE);
}

TEST_CASE("parse errors report a message and byte offset") {
  natlin_equation* h = nullptr;
  CHECK(natlin_equation_parse("2x + = 5", &h) == NATLIN_ERROR_PARSE);
  CHECK(h == nullptr);
  CHECK(std::string(natlin_last_error()) == "expected a term");
  CHECK(natlin_last_error_offset() == 5);

  Equation ok("x = 1");
  CHECK(std::string(natlin_last_error()).empty());
  CHECK(natlin_last_error_offset() == SIZE_MAX);
}

TEST_CASE("structured construction") {
  const char* coeffs[] = {"2", "3"};
  natlin_equation* h = nullptr;
  REQUIRE(natlin_equation_create(2, coeffs, "12", nullptr, &h) == NATLIN_OK);
  CHECK(fetch(natlin_equation_var_name, (const natlin_equation*)h, (size_t)0) == "x1");
  CHECK(fetch(natlin_equation_render, (const natlin_equation*)h) == "2x1 + 3x2 = 12");
  natlin_equation_free(h);

  const char* names[] = {"u", "v"};
  REQUIRE(natlin_equation_create(2, coeffs, "12", names, &h) == NATLIN_OK);
  CHECK(fetch(natlin_equation_var_name, (const natlin_equation*)h, (size_t)1) == "v");
  natlin_equation_free(h);

  const char* bad[] = {"2", "junk"};
  h = nullptr;
  CHECK(natlin_equation_create(2, bad, "12", nullptr, &h) == NATLIN_ERROR_INVALID_ARGUMENT);
  CHECK(h == nullptr);
}

TEST_CASE("finite analysis exposes solutions and bounds") {
  Equation eq("2x + 3y = 12");
  Analysis a(eq.h);
  CHECK(natlin_analysis_class(a.h) == NATLIN_CLASS_FINITE);
  CHECK(natlin_analysis_has_solutions(a.h) == 1);
  REQUIRE(natlin_analysis_has_finite_set(a.h) == 1);
  REQUIRE(natlin_analysis_solution_count(a.h) == 3);
  CHECK(fetch(natlin_analysis_solution, (const natlin_analysis*)a.h, (size_t)1, (size_t)0) == "3");
  CHECK(fetch(natlin_analysis_bound, (const natlin_analysis*)a.h, (size_t)0) == "6");
  CHECK(fetch(natlin_analysis_bound, (const natlin_analysis*)a.h, (size_t)1) == "4");
  CHECK(fetch(natlin_analysis_count_bound, (const natlin_analysis*)a.h) == "35");

  CHECK(natlin_analysis_has_lattice(a.h) == 0);
  char* out = nullptr;
  CHECK(natlin_analysis_particular(a.h, 0, &out) == NATLIN_ERROR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("infinite analysis exposes lattice, constraints, and family") {
  Equation eq("3x - 7y + 2z = -18");
  Analysis a(eq.h);
  CHECK(natlin_analysis_class(a.h) == NATLIN_CLASS_INFINITE);
  CHECK(natlin_analysis_has_finite_set(a.h) == 0);
  REQUIRE(natlin_analysis_has_lattice(a.h) == 1);
  REQUIRE(natlin_analysis_lattice_dim(a.h) == 2);

  const natlin_analysis* h = a.h;
  CHECK(fetch(natlin_analysis_particular, h, (size_t)0) == "36");
  CHECK(fetch(natlin_analysis_basis_entry, h, (size_t)0, (size_t)0) == "7");
  CHECK(fetch(natlin_analysis_basis_entry, h, (size_t)1, (size_t)2) == "1");

  REQUIRE(natlin_analysis_constraint_count(a.h) == 3);
  CHECK(fetch(natlin_analysis_constraint_coeff, h, (size_t)0, (size_t)0) == "7");
  CHECK(fetch(natlin_analysis_constraint_constant, h, (size_t)0) == "36");
  CHECK(fetch(natlin_analysis_constraint_coeff, h, (size_t)2, (size_t)1) == "1");

  REQUIRE(natlin_analysis_has_family(a.h) == 1);
  CHECK(fetch(natlin_analysis_family_step, h, (size_t)0) == "14");
  CHECK(fetch(natlin_analysis_family_step, h, (size_t)1) == "12");
  CHECK(fetch(natlin_analysis_family_step, h, (size_t)2) == "21");
  CHECK(fetch(natlin_analysis_family_zmin, h) == "0");
  CHECK(fetch(natlin_analysis_family_at, h, "2", (size_t)0) == "64");
}

TEST_CASE("stream returns the canonical prefix") {
  Equation eq("3x - 7y + 2z = -18");
  natlin_solutions* s = nullptr;
  REQUIRE(natlin_stream(eq.h, 3, nullptr, &s) == NATLIN_OK);
  REQUIRE(natlin_solutions_count(s) == 3);
  CHECK(natlin_solutions_width(s) == 3);
  CHECK(fetch(natlin_solutions_entry, (const natlin_solutions*)s, (size_t)0, (size_t)0) == "1");
  CHECK(fetch(natlin_solutions_entry, (const natlin_solutions*)s, (size_t)0, (size_t)1) == "3");
  CHECK(fetch(natlin_solutions_entry, (const natlin_solutions*)s, (size_t)2, (size_t)2) == "5");
  natlin_solutions_free(s);

  s = nullptr;
  CHECK(natlin_stream(eq.h, 0, nullptr, &s) == NATLIN_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("oracles and their guard") {
  Equation eq("x + y = 2");
  natlin_solutions* s = nullptr;
  REQUIRE(natlin_oracle_natural(eq.h, "3", &s) == NATLIN_OK);
  CHECK(natlin_solutions_count(s) == 3);
  natlin_solutions_free(s);

  Equation integer_eq("2x + 3y = 1");
  s = nullptr;
  REQUIRE(natlin_oracle_integer(integer_eq.h, "4", &s) == NATLIN_OK);
  REQUIRE(natlin_solutions_count(s) == 3);
  CHECK(fetch(natlin_solutions_entry, (const natlin_solutions*)s, (size_t)0, (size_t)0) == "-4");
  natlin_solutions_free(s);

  Equation wide("a + b + c + d = 2");
  s = nullptr;
  CHECK(natlin_oracle_natural(wide.h, "100", &s) == NATLIN_ERROR_LIMIT);
  CHECK(std::string(natlin_last_error()).find("guard") != std::string::npos);
}

TEST_CASE("analysis cap maps to the limit status") {
  Equation eq("x + y + z = 1000000");
  natlin_analysis* a = nullptr;
  CHECK(natlin_analyze(eq.h, nullptr, &a) == NATLIN_ERROR_LIMIT);
  CHECK(a == nullptr);
  CHECK(natlin_analyze(eq.h, "junk", &a) == NATLIN_ERROR_INVALID_ARGUMENT);
  CHECK(natlin_analyze(eq.h, "0", &a) == NATLIN_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("axby closed form") {
  natlin_axby* r = nullptr;
  REQUIRE(natlin_axby_solve("5", "3", "1", &r) == NATLIN_OK);
  REQUIRE(natlin_axby_has_solution(r) == 1);
  CHECK(fetch(natlin_axby_x0, (const natlin_axby*)r) == "2");
  CHECK(fetch(natlin_axby_y0, (const natlin_axby*)r) == "3");
  CHECK(fetch(natlin_axby_a, (const natlin_axby*)r) == "5");
  CHECK(fetch(natlin_axby_b, (const natlin_axby*)r) == "3");
  CHECK(fetch(natlin_axby_k_min, (const natlin_axby*)r) == "0");
  natlin_axby_free(r);

  r = nullptr;
  REQUIRE(natlin_axby_solve("4", "6", "3", &r) == NATLIN_OK);
  CHECK(natlin_axby_has_solution(r) == 0);
  char* out = nullptr;
  CHECK(natlin_axby_x0(r, &out) == NATLIN_ERROR_INVALID_ARGUMENT);
  natlin_axby_free(r);

  r = nullptr;
  CHECK(natlin_axby_solve("0", "3", "1", &r) == NATLIN_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are tolerated") {
  CHECK(natlin_equation_parse(nullptr, nullptr) == NATLIN_ERROR_INVALID_ARGUMENT);
  CHECK(natlin_equation_size(nullptr) == 0);
  CHECK(natlin_analysis_has_solutions(nullptr) == 0);
  CHECK(natlin_solutions_count(nullptr) == 0);
  CHECK(natlin_axby_has_solution(nullptr) == 0);
  natlin_equation_free(nullptr);
  natlin_analysis_free(nullptr);
  natlin_solutions_free(nullptr);
  natlin_axby_free(nullptr);
  natlin_string_free(nullptr);

  Equation eq("x = 1");
  char* out = nullptr;
  CHECK(natlin_equation_coeff(eq.h, 5, &out) == NATLIN_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(natlin_last_error()) == "variable index out of range");
}
