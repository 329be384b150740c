#ifndef NATLIN_H
#define NATLIN_H

/* natlin: natural-number solution sets of linear Diophantine equations.
 *
 * Conventions:
 *   - Integers cross this boundary as decimal strings ("-42"); there is no
 *     size limit. Every char** output is allocated by the library and must
 *     be released with natlin_string_free. const char* returns point at
 *     static or thread-local storage and must not be freed.
 *   - Functions returning natlin_status set the thread-local last error
 *     message on failure (natlin_last_error); parse failures also record a
 *     byte offset (natlin_last_error_offset).
 *   - Handles are opaque; each type has its matching _free, safe on NULL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__) || defined(__clang__)
#define NATLIN_API __attribute__((visibility("default")))
#else
#define NATLIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum natlin_status {
  NATLIN_OK = 0,
  NATLIN_ERROR_INVALID_ARGUMENT = 1,
  NATLIN_ERROR_PARSE = 2,
  NATLIN_ERROR_LIMIT = 3,
  NATLIN_ERROR_NO_MEMORY = 4,
  NATLIN_ERROR_INTERNAL = 5
} natlin_status;

/* Five-way classification of the natural solution set. */
typedef enum natlin_class {
  NATLIN_CLASS_EMPTY_NO_INTEGER = 0, /* gcd of coefficients does not divide rhs */
  NATLIN_CLASS_EMPTY_NO_NATURAL = 1, /* integer solutions exist, none natural */
  NATLIN_CLASS_TRIVIAL_ONLY = 2,     /* exactly the zero vector */
  NATLIN_CLASS_FINITE = 3,           /* finitely many, possibly zero */
  NATLIN_CLASS_INFINITE = 4          /* sign variation: infinitely many */
} natlin_class;

typedef struct natlin_equation natlin_equation;
typedef struct natlin_analysis natlin_analysis;
typedef struct natlin_solutions natlin_solutions;
typedef struct natlin_axby natlin_axby;

/* Library version, static storage. */
NATLIN_API const char* natlin_version(void);

/* Message for this thread's most recent failure; empty string if none. */
NATLIN_API const char* natlin_last_error(void);

/* Byte offset of this thread's most recent parse failure, or SIZE_MAX when
 * the last failure was not a parse error. */
NATLIN_API size_t natlin_last_error_offset(void);

NATLIN_API void natlin_string_free(char* s);

/* ---- equations ---- */

/* Text form, e.g. "3x - 7y + 2z = -18". See the CLI docs for the grammar. */
NATLIN_API natlin_status natlin_equation_parse(const char* text, natlin_equation** out);

/* Structured form. var_names may be NULL, meaning x1..xn. */
NATLIN_API natlin_status natlin_equation_create(size_t n, const char* const* coeff_decimals,
                                                const char* rhs_decimal,
                                                const char* const* var_names,
                                                natlin_equation** out);

NATLIN_API void natlin_equation_free(natlin_equation* eq);

NATLIN_API size_t natlin_equation_size(const natlin_equation* eq);
NATLIN_API natlin_status natlin_equation_coeff(const natlin_equation* eq, size_t i, char** out);
NATLIN_API natlin_status natlin_equation_rhs(const natlin_equation* eq, char** out);
NATLIN_API natlin_status natlin_equation_var_name(const natlin_equation* eq, size_t i, char** out);

/* Canonical text that parses back to the same equation. */
NATLIN_API natlin_status natlin_equation_render(const natlin_equation* eq, char** out);

/* ---- classification and full analysis ---- */

/* Classification alone; never enumerates, cheap on any input. */
NATLIN_API natlin_status natlin_classify(const natlin_equation* eq, natlin_class* out);

/* Stable lowercase tag ("finite", "empty_no_integer", ...), static storage. */
NATLIN_API const char* natlin_class_name(natlin_class c);

/* Classification plus the matching solution representation. cap_decimal
 * bounds the finite enumeration candidate count (NULL means 10^7); when the
 * bound product exceeds it the call fails with NATLIN_ERROR_LIMIT. */
NATLIN_API natlin_status natlin_analyze(const natlin_equation* eq, const char* cap_decimal,
                                        natlin_analysis** out);

NATLIN_API void natlin_analysis_free(natlin_analysis* a);

NATLIN_API natlin_class natlin_analysis_class(const natlin_analysis* a);
NATLIN_API int natlin_analysis_has_solutions(const natlin_analysis* a);

/* Finite view. Present for FINITE and TRIVIAL_ONLY: the complete solution
 * list (lexicographic), per-variable bounds d_i, and the count bound
 * prod(1 + d_i). */
NATLIN_API int natlin_analysis_has_finite_set(const natlin_analysis* a);
NATLIN_API size_t natlin_analysis_solution_count(const natlin_analysis* a);
NATLIN_API natlin_status natlin_analysis_solution(const natlin_analysis* a, size_t idx,
                                                  size_t var, char** out);
NATLIN_API natlin_status natlin_analysis_bound(const natlin_analysis* a, size_t var, char** out);
NATLIN_API natlin_status natlin_analysis_count_bound(const natlin_analysis* a, char** out);

/* Lattice view. Present for INFINITE: every integer solution is
 * particular + sum_j k_j * basis_j with the k_j ranging over the integers,
 * and the natural solutions are exactly those satisfying the constraint
 * rows coeffs . k + constant >= 0 (one row per variable). */
NATLIN_API int natlin_analysis_has_lattice(const natlin_analysis* a);
NATLIN_API size_t natlin_analysis_lattice_dim(const natlin_analysis* a);
NATLIN_API natlin_status natlin_analysis_particular(const natlin_analysis* a, size_t var,
                                                    char** out);
NATLIN_API natlin_status natlin_analysis_basis_entry(const natlin_analysis* a, size_t j,
                                                     size_t var, char** out);
NATLIN_API size_t natlin_analysis_constraint_count(const natlin_analysis* a);
NATLIN_API natlin_status natlin_analysis_constraint_coeff(const natlin_analysis* a, size_t row,
                                                          size_t j, char** out);
NATLIN_API natlin_status natlin_analysis_constraint_constant(const natlin_analysis* a,
                                                             size_t row, char** out);

/* Progression view. Present for INFINITE: base + z * step is a natural
 * solution for every integer z >= z_min, with strictly positive steps. */
NATLIN_API int natlin_analysis_has_family(const natlin_analysis* a);
NATLIN_API natlin_status natlin_analysis_family_base(const natlin_analysis* a, size_t var,
                                                     char** out);
NATLIN_API natlin_status natlin_analysis_family_step(const natlin_analysis* a, size_t var,
                                                     char** out);
NATLIN_API natlin_status natlin_analysis_family_zmin(const natlin_analysis* a, char** out);
NATLIN_API natlin_status natlin_analysis_family_at(const natlin_analysis* a,
                                                   const char* z_decimal, size_t var, char** out);

/* ---- solution lists ---- */

/* Up to `limit` natural solutions ordered by increasing component sum, ties
 * lexicographic; total over every classification. cap_decimal bounds the
 * candidates visited (NULL means 10^7). */
NATLIN_API natlin_status natlin_stream(const natlin_equation* eq, uint64_t limit,
                                       const char* cap_decimal, natlin_solutions** out);

/* Brute-force scans for cross-checking: every natural solution in [0, box]^n,
 * or every integer solution in [-box, box]^n, lexicographic. Fails with
 * NATLIN_ERROR_LIMIT beyond 10^8 candidates. */
NATLIN_API natlin_status natlin_oracle_natural(const natlin_equation* eq, const char* box_decimal,
                                               natlin_solutions** out);
NATLIN_API natlin_status natlin_oracle_integer(const natlin_equation* eq, const char* box_decimal,
                                               natlin_solutions** out);

NATLIN_API void natlin_solutions_free(natlin_solutions* s);
NATLIN_API size_t natlin_solutions_count(const natlin_solutions* s);
NATLIN_API size_t natlin_solutions_width(const natlin_solutions* s);
NATLIN_API natlin_status natlin_solutions_entry(const natlin_solutions* s, size_t idx, size_t var,
                                                char** out);

/* ---- two-variable closed form ---- */

/* a*x - b*y = c with a, b > 0. Succeeds even when unsolvable; check
 * natlin_axby_has_solution. When solvable: x = b'*k + x0, y = a'*k + y0 for
 * every integer k >= k_min, where a', b' are a, b divided by their gcd,
 * (x0, y0) is the least natural solution, and k_min is 0. */
NATLIN_API natlin_status natlin_axby_solve(const char* a_decimal, const char* b_decimal,
                                           const char* c_decimal, natlin_axby** out);

NATLIN_API void natlin_axby_free(natlin_axby* r);
NATLIN_API int natlin_axby_has_solution(const natlin_axby* r);
NATLIN_API natlin_status natlin_axby_x0(const natlin_axby* r, char** out);
NATLIN_API natlin_status natlin_axby_y0(const natlin_axby* r, char** out);
NATLIN_API natlin_status natlin_axby_a(const natlin_axby* r, char** out);
NATLIN_API natlin_status natlin_axby_b(const natlin_axby* r, char** out);
NATLIN_API natlin_status natlin_axby_k_min(const natlin_axby* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NATLIN_H */
