#include "natlin/natlin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "error.hpp"
#include "natsolve.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "solver.hpp"

using natlin::Int;

struct natlin_equation {
  natlin::LinearEquation eq;
};

struct natlin_analysis {
  natlin::Analysis value;
};

struct natlin_solutions {
  std::vector<std::vector<Int>> rows;
  std::size_t width = 0;
};

struct natlin_axby {
  std::optional<natlin::TwoVarSolution> sol;
};

namespace {

thread_local std::string t_last_error;
thread_local std::size_t t_last_offset = SIZE_MAX;

void clear_error() {
  t_last_error.clear();
  t_last_offset = SIZE_MAX;
}

natlin_status fail(natlin_status code, const std::string& message,
                   std::size_t offset = SIZE_MAX) {
  t_last_error = message;
  t_last_offset = offset;
  return code;
}

/// Runs `body`, translating exceptions into status codes.
template <typename Fn>
natlin_status guarded(Fn&& body) {
  try {
    clear_error();
    body();
    return NATLIN_OK;
  } catch (const natlin::ParseError& e) {
    return fail(NATLIN_ERROR_PARSE, e.what(), e.offset());
  } catch (const natlin::InvalidArgument& e) {
    return fail(NATLIN_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const natlin::ResourceLimit& e) {
    return fail(NATLIN_ERROR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NATLIN_ERROR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(NATLIN_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(NATLIN_ERROR_INTERNAL, "unknown error");
  }
}

/// malloc'd copy handed across the C boundary; released by natlin_string_free.
char* copy_out(const std::string& s) {
  char* mem = static_cast<char*>(std::malloc(s.size() + 1));
  if (!mem) throw std::bad_alloc();
  std::memcpy(mem, s.c_str(), s.size() + 1);
  return mem;
}

void require(bool ok, const char* message) {
  if (!ok) throw natlin::InvalidArgument(message);
}

Int cap_or_default(const char* cap_decimal) {
  if (!cap_decimal) return Int(natlin::kDefaultEnumerationCap);
  Int cap = natlin::int_from_decimal(cap_decimal);
  require(cap >= 1, "cap must be at least 1");
  return cap;
}

const natlin::FiniteSolutionSet& finite_view(const natlin_analysis* a) {
  require(a != nullptr, "null analysis handle");
  require(a->value.finite.has_value(), "analysis has no finite solution set");
  return *a->value.finite;
}

const natlin::ParametricNaturalSolution& lattice_view(const natlin_analysis* a) {
  require(a != nullptr, "null analysis handle");
  require(a->value.parametric.has_value(), "analysis has no lattice");
  return *a->value.parametric;
}

const natlin::ProgressionFamily& family_view(const natlin_analysis* a) {
  require(a != nullptr, "null analysis handle");
  require(a->value.family.has_value(), "analysis has no progression family");
  return *a->value.family;
}

natlin_class to_c_class(natlin::Classification c) {
  switch (c) {
    case natlin::Classification::EmptyNoInteger: return NATLIN_CLASS_EMPTY_NO_INTEGER;
    case natlin::Classification::EmptyNoNatural: return NATLIN_CLASS_EMPTY_NO_NATURAL;
    case natlin::Classification::TrivialOnly: return NATLIN_CLASS_TRIVIAL_ONLY;
    case natlin::Classification::Finite: return NATLIN_CLASS_FINITE;
    case natlin::Classification::Infinite: return NATLIN_CLASS_INFINITE;
  }
  return NATLIN_CLASS_EMPTY_NO_INTEGER;
}

const natlin::TwoVarSolution& axby_view(const natlin_axby* r) {
  require(r != nullptr, "null handle");
  require(r->sol.has_value(), "no solution: gcd(a, b) does not divide c");
  return *r->sol;
}

}  // namespace

extern "C" {

const char* natlin_version(void) { return "0.1.0"; }

const char* natlin_last_error(void) { return t_last_error.c_str(); }

size_t natlin_last_error_offset(void) { return t_last_offset; }

void natlin_string_free(char* s) { std::free(s); }

/* ---- equations ---- */

natlin_status natlin_equation_parse(const char* text, natlin_equation** out) {
  return guarded([&] {
    require(text && out, "null pointer argument");
    auto parsed = natlin::parse_equation(text);
    *out = new natlin_equation{std::move(parsed.equation)};
  });
}

natlin_status natlin_equation_create(size_t n, const char* const* coeff_decimals,
                                     const char* rhs_decimal, const char* const* var_names,
                                     natlin_equation** out) {
  return guarded([&] {
    require(coeff_decimals && rhs_decimal && out, "null pointer argument");
    std::vector<Int> coeffs;
    coeffs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      require(coeff_decimals[i] != nullptr, "null coefficient string");
      coeffs.push_back(natlin::int_from_decimal(coeff_decimals[i]));
    }
    Int rhs = natlin::int_from_decimal(rhs_decimal);
    if (!var_names) {
      *out = new natlin_equation{
          natlin::LinearEquation::with_default_names(std::move(coeffs), std::move(rhs))};
      return;
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      require(var_names[i] != nullptr, "null variable name");
      names.emplace_back(var_names[i]);
    }
    *out = new natlin_equation{
        natlin::LinearEquation(std::move(coeffs), std::move(rhs), std::move(names))};
  });
}

void natlin_equation_free(natlin_equation* eq) { delete eq; }

size_t natlin_equation_size(const natlin_equation* eq) { return eq ? eq->eq.size() : 0; }

natlin_status natlin_equation_coeff(const natlin_equation* eq, size_t i, char** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    require(i < eq->eq.size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(eq->eq.coeffs()[i]));
  });
}

natlin_status natlin_equation_rhs(const natlin_equation* eq, char** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    *out = copy_out(natlin::to_decimal(eq->eq.rhs()));
  });
}

natlin_status natlin_equation_var_name(const natlin_equation* eq, size_t i, char** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    require(i < eq->eq.size(), "variable index out of range");
    *out = copy_out(eq->eq.var_names()[i]);
  });
}

natlin_status natlin_equation_render(const natlin_equation* eq, char** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    *out = copy_out(natlin::render_equation(eq->eq));
  });
}

/* ---- classification and analysis ---- */

natlin_status natlin_classify(const natlin_equation* eq, natlin_class* out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    *out = to_c_class(natlin::classify(eq->eq));
  });
}

const char* natlin_class_name(natlin_class c) {
  switch (c) {
    case NATLIN_CLASS_EMPTY_NO_INTEGER: return "empty_no_integer";
    case NATLIN_CLASS_EMPTY_NO_NATURAL: return "empty_no_natural";
    case NATLIN_CLASS_TRIVIAL_ONLY: return "trivial_only";
    case NATLIN_CLASS_FINITE: return "finite";
    case NATLIN_CLASS_INFINITE: return "infinite";
  }
  return "unknown";
}

natlin_status natlin_analyze(const natlin_equation* eq, const char* cap_decimal,
                             natlin_analysis** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    *out = new natlin_analysis{natlin::analyze(eq->eq, cap_or_default(cap_decimal))};
  });
}

void natlin_analysis_free(natlin_analysis* a) { delete a; }

natlin_class natlin_analysis_class(const natlin_analysis* a) {
  return a ? to_c_class(a->value.classification) : NATLIN_CLASS_EMPTY_NO_INTEGER;
}

int natlin_analysis_has_solutions(const natlin_analysis* a) {
  return a && a->value.has_natural_solutions() ? 1 : 0;
}

int natlin_analysis_has_finite_set(const natlin_analysis* a) {
  return a && a->value.finite.has_value() ? 1 : 0;
}

size_t natlin_analysis_solution_count(const natlin_analysis* a) {
  return a && a->value.finite ? a->value.finite->solutions.size() : 0;
}

natlin_status natlin_analysis_solution(const natlin_analysis* a, size_t idx, size_t var,
                                       char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& finite = finite_view(a);
    require(idx < finite.solutions.size(), "solution index out of range");
    require(var < finite.solutions[idx].size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(finite.solutions[idx][var]));
  });
}

natlin_status natlin_analysis_bound(const natlin_analysis* a, size_t var, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& finite = finite_view(a);
    require(var < finite.per_var_bounds.size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(finite.per_var_bounds[var]));
  });
}

natlin_status natlin_analysis_count_bound(const natlin_analysis* a, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(finite_view(a).count_bound));
  });
}

int natlin_analysis_has_lattice(const natlin_analysis* a) {
  return a && a->value.parametric.has_value() ? 1 : 0;
}

size_t natlin_analysis_lattice_dim(const natlin_analysis* a) {
  return a && a->value.parametric ? a->value.parametric->lattice.basis.size() : 0;
}

natlin_status natlin_analysis_particular(const natlin_analysis* a, size_t var, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& lattice = lattice_view(a).lattice;
    require(var < lattice.particular.size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(lattice.particular[var]));
  });
}

natlin_status natlin_analysis_basis_entry(const natlin_analysis* a, size_t j, size_t var,
                                          char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& lattice = lattice_view(a).lattice;
    require(j < lattice.basis.size(), "basis index out of range");
    require(var < lattice.basis[j].size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(lattice.basis[j][var]));
  });
}

size_t natlin_analysis_constraint_count(const natlin_analysis* a) {
  return a && a->value.parametric ? a->value.parametric->constraints.inequalities.size() : 0;
}

natlin_status natlin_analysis_constraint_coeff(const natlin_analysis* a, size_t row, size_t j,
                                               char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& rows = lattice_view(a).constraints.inequalities;
    require(row < rows.size(), "constraint index out of range");
    require(j < rows[row].coeffs.size(), "parameter index out of range");
    *out = copy_out(natlin::to_decimal(rows[row].coeffs[j]));
  });
}

natlin_status natlin_analysis_constraint_constant(const natlin_analysis* a, size_t row,
                                                  char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& rows = lattice_view(a).constraints.inequalities;
    require(row < rows.size(), "constraint index out of range");
    *out = copy_out(natlin::to_decimal(rows[row].constant));
  });
}

int natlin_analysis_has_family(const natlin_analysis* a) {
  return a && a->value.family.has_value() ? 1 : 0;
}

natlin_status natlin_analysis_family_base(const natlin_analysis* a, size_t var, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& family = family_view(a);
    require(var < family.base.size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(family.base[var]));
  });
}

natlin_status natlin_analysis_family_step(const natlin_analysis* a, size_t var, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    const auto& family = family_view(a);
    require(var < family.step.size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(family.step[var]));
  });
}

natlin_status natlin_analysis_family_zmin(const natlin_analysis* a, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(family_view(a).z_min));
  });
}

natlin_status natlin_analysis_family_at(const natlin_analysis* a, const char* z_decimal,
                                        size_t var, char** out) {
  return guarded([&] {
    require(z_decimal && out, "null pointer argument");
    const auto& family = family_view(a);
    require(var < family.base.size(), "variable index out of range");
    std::vector<Int> point = family.at(natlin::int_from_decimal(z_decimal));
    *out = copy_out(natlin::to_decimal(point[var]));
  });
}

/* ---- solution lists ---- */

natlin_status natlin_stream(const natlin_equation* eq, uint64_t limit, const char* cap_decimal,
                            natlin_solutions** out) {
  return guarded([&] {
    require(eq && out, "null pointer argument");
    auto rows = natlin::stream_natural_solutions(eq->eq, limit, cap_or_default(cap_decimal));
    *out = new natlin_solutions{std::move(rows), eq->eq.size()};
  });
}

natlin_status natlin_oracle_natural(const natlin_equation* eq, const char* box_decimal,
                                    natlin_solutions** out) {
  return guarded([&] {
    require(eq && box_decimal && out, "null pointer argument");
    auto rows = natlin::oracle::brute_force_natural(eq->eq, natlin::int_from_decimal(box_decimal));
    *out = new natlin_solutions{std::move(rows), eq->eq.size()};
  });
}

natlin_status natlin_oracle_integer(const natlin_equation* eq, const char* box_decimal,
                                    natlin_solutions** out) {
  return guarded([&] {
    require(eq && box_decimal && out, "null pointer argument");
    auto rows = natlin::oracle::brute_force_integer(eq->eq, natlin::int_from_decimal(box_decimal));
    *out = new natlin_solutions{std::move(rows), eq->eq.size()};
  });
}

void natlin_solutions_free(natlin_solutions* s) { delete s; }

size_t natlin_solutions_count(const natlin_solutions* s) { return s ? s->rows.size() : 0; }

size_t natlin_solutions_width(const natlin_solutions* s) { return s ? s->width : 0; }

natlin_status natlin_solutions_entry(const natlin_solutions* s, size_t idx, size_t var,
                                     char** out) {
  return guarded([&] {
    require(s && out, "null pointer argument");
    require(idx < s->rows.size(), "solution index out of range");
    require(var < s->rows[idx].size(), "variable index out of range");
    *out = copy_out(natlin::to_decimal(s->rows[idx][var]));
  });
}

/* ---- two-variable closed form ---- */

natlin_status natlin_axby_solve(const char* a_decimal, const char* b_decimal,
                                const char* c_decimal, natlin_axby** out) {
  return guarded([&] {
    require(a_decimal && b_decimal && c_decimal && out, "null pointer argument");
    auto sol = natlin::solve_ax_minus_by(natlin::int_from_decimal(a_decimal),
                                         natlin::int_from_decimal(b_decimal),
                                         natlin::int_from_decimal(c_decimal));
    *out = new natlin_axby{std::move(sol)};
  });
}

void natlin_axby_free(natlin_axby* r) { delete r; }

int natlin_axby_has_solution(const natlin_axby* r) { return r && r->sol ? 1 : 0; }

natlin_status natlin_axby_x0(const natlin_axby* r, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(axby_view(r).x0));
  });
}

natlin_status natlin_axby_y0(const natlin_axby* r, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(axby_view(r).y0));
  });
}

natlin_status natlin_axby_a(const natlin_axby* r, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(axby_view(r).a));
  });
}

natlin_status natlin_axby_b(const natlin_axby* r, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(axby_view(r).b));
  });
}

natlin_status natlin_axby_k_min(const natlin_axby* r, char** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer argument");
    *out = copy_out(natlin::to_decimal(axby_view(r).k_min));
  });
}

}  // extern "C"
