#include <cstddef>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "natlin/natlin.h"

using json = nlohmann::json;

namespace {

struct CliError {
  natlin_status status;
  std::string message;
  std::size_t offset;
};

void check(natlin_status st) {
  if (st != NATLIN_OK) throw CliError{st, natlin_last_error(), natlin_last_error_offset()};
}

/// Calls a C API getter with a trailing char** out parameter and takes
/// ownership of the returned string.
template <typename Fn, typename... Args>
std::string fetch(Fn fn, Args... args) {
  char* out = nullptr;
  check(fn(args..., &out));
  std::string value(out);
  natlin_string_free(out);
  return value;
}

struct EquationDelete {
  void operator()(natlin_equation* p) const { natlin_equation_free(p); }
};
struct AnalysisDelete {
  void operator()(natlin_analysis* p) const { natlin_analysis_free(p); }
};
struct SolutionsDelete {
  void operator()(natlin_solutions* p) const { natlin_solutions_free(p); }
};
struct AxbyDelete {
  void operator()(natlin_axby* p) const { natlin_axby_free(p); }
};

using EquationPtr = std::unique_ptr<natlin_equation, EquationDelete>;
using AnalysisPtr = std::unique_ptr<natlin_analysis, AnalysisDelete>;
using SolutionsPtr = std::unique_ptr<natlin_solutions, SolutionsDelete>;
using AxbyPtr = std::unique_ptr<natlin_axby, AxbyDelete>;

EquationPtr parse_equation_arg(const std::string& text) {
  natlin_equation* raw = nullptr;
  check(natlin_equation_parse(text.c_str(), &raw));
  return EquationPtr(raw);
}

std::vector<std::string> variable_names(const natlin_equation* eq) {
  std::vector<std::string> names;
  std::size_t n = natlin_equation_size(eq);
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(fetch(natlin_equation_var_name, eq, i));
  return names;
}

const char* cap_arg(const std::string& cap) { return cap.empty() ? nullptr : cap.c_str(); }

std::pair<bool, std::string> sign_split(const std::string& decimal) {
  if (!decimal.empty() && decimal[0] == '-') return {true, decimal.substr(1)};
  return {false, decimal};
}

/// "7k1 + 4k2 + 36" from per-parameter coefficients and a constant, all as
/// decimal strings. Zero terms are dropped; a fully zero expression renders
/// as the bare constant.
std::string affine_text(const std::vector<std::string>& coeffs,
                        const std::vector<std::string>& params, const std::string& constant) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto [neg, mag] = sign_split(coeffs[i]);
    if (mag == "0") continue;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != "1") out += mag;
    out += params[i];
  }
  auto [cneg, cmag] = sign_split(constant);
  if (out.empty()) return cneg ? "-" + cmag : cmag;
  if (cmag != "0") {
    out += cneg ? " - " : " + ";
    out += cmag;
  }
  return out;
}

std::vector<std::string> parameter_names(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) names.push_back("k" + std::to_string(j + 1));
  return names;
}

std::string row_text(const natlin_solutions* s, std::size_t idx) {
  std::string line;
  for (std::size_t v = 0; v < natlin_solutions_width(s); ++v) {
    if (v > 0) line += ' ';
    line += fetch(natlin_solutions_entry, s, idx, v);
  }
  return line;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_classify(const std::string& text, bool json_mode) {
  EquationPtr eq = parse_equation_arg(text);
  natlin_class cls;
  check(natlin_classify(eq.get(), &cls));
  std::string rendered = fetch(natlin_equation_render, eq.get());

  if (json_mode) {
    json doc;
    doc["classification"] = natlin_class_name(cls);
    doc["equation"] = rendered;
    doc["variables"] = variable_names(eq.get());
    emit_json(doc);
  } else {
    std::cout << "equation: " << rendered << "\n";
    std::cout << "classification: " << natlin_class_name(cls) << "\n";
  }
  bool empty = cls == NATLIN_CLASS_EMPTY_NO_INTEGER || cls == NATLIN_CLASS_EMPTY_NO_NATURAL;
  return empty ? 1 : 0;
}

int cmd_solve(const std::string& text, bool json_mode, const std::string& cap) {
  EquationPtr eq = parse_equation_arg(text);
  natlin_analysis* raw = nullptr;
  check(natlin_analyze(eq.get(), cap_arg(cap), &raw));
  AnalysisPtr analysis(raw);

  natlin_class cls = natlin_analysis_class(analysis.get());
  std::string rendered = fetch(natlin_equation_render, eq.get());
  std::vector<std::string> vars = variable_names(eq.get());
  std::size_t n = vars.size();

  json doc;
  if (json_mode) {
    doc["classification"] = natlin_class_name(cls);
    doc["equation"] = rendered;
    doc["variables"] = vars;
  } else {
    std::cout << "equation: " << rendered << "\n";
    std::cout << "classification: " << natlin_class_name(cls) << "\n";
  }

  if (natlin_analysis_has_finite_set(analysis.get())) {
    std::vector<std::string> bounds;
    for (std::size_t v = 0; v < n; ++v)
      bounds.push_back(fetch(natlin_analysis_bound, analysis.get(), v));
    std::string count_bound = fetch(natlin_analysis_count_bound, analysis.get());
    std::size_t count = natlin_analysis_solution_count(analysis.get());

    if (json_mode) {
      doc["bounds"] = {{"d", bounds}, {"count_bound", count_bound}};
      json rows = json::array();
      for (std::size_t i = 0; i < count; ++i) {
        json row = json::array();
        for (std::size_t v = 0; v < n; ++v)
          row.push_back(fetch(natlin_analysis_solution, analysis.get(), i, v));
        rows.push_back(std::move(row));
      }
      doc["solutions"] = std::move(rows);
    } else {
      std::cout << "bounds:";
      for (std::size_t v = 0; v < n; ++v)
        std::cout << (v == 0 ? " " : ", ") << vars[v] << " <= " << bounds[v];
      std::cout << "\n";
      std::cout << "count bound: " << count_bound << "\n";
      std::cout << "solutions (" << count << "):\n";
      for (std::size_t i = 0; i < count; ++i) {
        std::cout << " ";
        for (std::size_t v = 0; v < n; ++v)
          std::cout << " " << fetch(natlin_analysis_solution, analysis.get(), i, v);
        std::cout << "\n";
      }
    }
  } else if (natlin_analysis_has_lattice(analysis.get())) {
    std::size_t dim = natlin_analysis_lattice_dim(analysis.get());
    std::vector<std::string> params = parameter_names(dim);

    std::vector<std::string> particular(n);
    std::vector<std::vector<std::string>> basis(dim, std::vector<std::string>(n));
    for (std::size_t v = 0; v < n; ++v)
      particular[v] = fetch(natlin_analysis_particular, analysis.get(), v);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t v = 0; v < n; ++v)
        basis[j][v] = fetch(natlin_analysis_basis_entry, analysis.get(), j, v);

    std::size_t rows = natlin_analysis_constraint_count(analysis.get());
    std::vector<std::vector<std::string>> con_coeffs(rows, std::vector<std::string>(dim));
    std::vector<std::string> con_const(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < dim; ++j)
        con_coeffs[r][j] = fetch(natlin_analysis_constraint_coeff, analysis.get(), r, j);
      con_const[r] = fetch(natlin_analysis_constraint_constant, analysis.get(), r);
    }

    std::vector<std::string> base(n), step(n), display_base(n);
    std::string z_min = fetch(natlin_analysis_family_zmin, analysis.get());
    for (std::size_t v = 0; v < n; ++v) {
      base[v] = fetch(natlin_analysis_family_base, analysis.get(), v);
      step[v] = fetch(natlin_analysis_family_step, analysis.get(), v);
      display_base[v] = fetch(natlin_analysis_family_at, analysis.get(), z_min.c_str(), v);
    }

    if (json_mode) {
      json lattice;
      lattice["particular"] = particular;
      lattice["basis"] = basis;
      doc["lattice"] = std::move(lattice);
      json constraints = json::array();
      for (std::size_t r = 0; r < rows; ++r)
        constraints.push_back({{"coeffs", con_coeffs[r]}, {"constant", con_const[r]}});
      doc["constraints"] = std::move(constraints);
      doc["family"] = {{"base", base}, {"step", step}, {"z_min", z_min}};
    } else {
      std::cout << "integer lattice:\n";
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::string> coeff_row(dim);
        for (std::size_t j = 0; j < dim; ++j) coeff_row[j] = basis[j][v];
        std::cout << "  " << vars[v] << " = " << affine_text(coeff_row, params, particular[v])
                  << "\n";
      }
      std::cout << "constraints:\n";
      for (std::size_t r = 0; r < rows; ++r)
        std::cout << "  " << affine_text(con_coeffs[r], params, con_const[r]) << " >= 0\n";
      std::cout << "infinite family (t >= 0):\n";
      for (std::size_t v = 0; v < n; ++v)
        std::cout << "  " << vars[v] << " = "
                  << affine_text({step[v]}, {"t"}, display_base[v]) << "\n";
    }
  } else if (json_mode) {
    doc["solutions"] = json::array();
  } else if (cls == NATLIN_CLASS_EMPTY_NO_INTEGER) {
    std::cout << "no integer solutions\n";
  } else {
    std::cout << "integer solutions exist, none natural\n";
  }

  if (json_mode) emit_json(doc);
  return natlin_analysis_has_solutions(analysis.get()) ? 0 : 1;
}

int cmd_enumerate(const std::string& text, bool json_mode, const std::string& cap,
                  std::uint64_t limit) {
  EquationPtr eq = parse_equation_arg(text);
  natlin_class cls;
  check(natlin_classify(eq.get(), &cls));
  natlin_solutions* raw = nullptr;
  check(natlin_stream(eq.get(), limit, cap_arg(cap), &raw));
  SolutionsPtr rows(raw);

  std::size_t count = natlin_solutions_count(rows.get());
  if (json_mode) {
    json doc;
    doc["classification"] = natlin_class_name(cls);
    doc["equation"] = fetch(natlin_equation_render, eq.get());
    doc["variables"] = variable_names(eq.get());
    json list = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      json row = json::array();
      for (std::size_t v = 0; v < natlin_solutions_width(rows.get()); ++v)
        row.push_back(fetch(natlin_solutions_entry, rows.get(), i, v));
      list.push_back(std::move(row));
    }
    doc["solutions"] = std::move(list);
    emit_json(doc);
  } else {
    for (std::size_t i = 0; i < count; ++i) std::cout << row_text(rows.get(), i) << "\n";
  }
  return count > 0 ? 0 : 1;
}

int cmd_axby(const std::string& a, const std::string& b, const std::string& c, bool json_mode) {
  natlin_axby* raw = nullptr;
  check(natlin_axby_solve(a.c_str(), b.c_str(), c.c_str(), &raw));
  AxbyPtr result(raw);

  bool solvable = natlin_axby_has_solution(result.get()) != 0;
  if (json_mode) {
    json doc;
    doc["a"] = a;
    doc["b"] = b;
    doc["c"] = c;
    doc["solvable"] = solvable;
    if (solvable) {
      doc["x0"] = fetch(natlin_axby_x0, result.get());
      doc["y0"] = fetch(natlin_axby_y0, result.get());
      doc["x_step"] = fetch(natlin_axby_b, result.get());
      doc["y_step"] = fetch(natlin_axby_a, result.get());
      doc["k_min"] = fetch(natlin_axby_k_min, result.get());
    }
    emit_json(doc);
  } else if (solvable) {
    std::string x_line = affine_text({fetch(natlin_axby_b, result.get())}, {"k"},
                                     fetch(natlin_axby_x0, result.get()));
    std::string y_line = affine_text({fetch(natlin_axby_a, result.get())}, {"k"},
                                     fetch(natlin_axby_y0, result.get()));
    std::cout << "x = " << x_line << ", y = " << y_line
              << ", k >= " << fetch(natlin_axby_k_min, result.get()) << "\n";
  } else {
    std::cout << "no solutions: gcd(a, b) does not divide c\n";
  }
  return solvable ? 0 : 1;
}

int cmd_oracle(const std::string& text, bool json_mode, const std::string& box) {
  EquationPtr eq = parse_equation_arg(text);
  natlin_solutions* raw = nullptr;
  check(natlin_oracle_natural(eq.get(), box.c_str(), &raw));
  SolutionsPtr rows(raw);

  std::size_t count = natlin_solutions_count(rows.get());
  if (json_mode) {
    json doc;
    doc["box"] = box;
    doc["equation"] = fetch(natlin_equation_render, eq.get());
    doc["variables"] = variable_names(eq.get());
    json list = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      json row = json::array();
      for (std::size_t v = 0; v < natlin_solutions_width(rows.get()); ++v)
        row.push_back(fetch(natlin_solutions_entry, rows.get(), i, v));
      list.push_back(std::move(row));
    }
    doc["solutions"] = std::move(list);
    emit_json(doc);
  } else {
    for (std::size_t i = 0; i < count; ++i) std::cout << row_text(rows.get(), i) << "\n";
  }
  return count > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete natural-number solution sets of linear Diophantine equations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", natlin_version());

  bool json_mode = false;
  std::string cap;
  app.add_flag("--json", json_mode, "emit structured JSON instead of text");
  app.add_option("--cap", cap, "candidate cap for finite enumeration (default 10000000)");
  // global flags work on either side of the subcommand
  app.fallthrough();

  std::string classify_text;
  auto* classify_cmd = app.add_subcommand("classify", "classify the natural solution set");
  classify_cmd->add_option("equation", classify_text, "equation text, e.g. \"2x + 3y = 12\"")
      ->required();

  std::string solve_text;
  auto* solve_cmd =
      app.add_subcommand("solve", "classification plus the full solution representation");
  solve_cmd->add_option("equation", solve_text, "equation text")->required();

  std::string enum_text;
  std::uint64_t limit = 10;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list natural solutions by increasing component sum");
  enum_cmd->add_option("equation", enum_text, "equation text")->required();
  enum_cmd->add_option("--limit", limit, "maximum number of solutions to print (default 10)");

  std::string axby_a, axby_b, axby_c;
  auto* axby_cmd = app.add_subcommand("axby", "closed form for a*x - b*y = c with a, b > 0");
  axby_cmd->add_option("a", axby_a, "coefficient of x")->required();
  axby_cmd->add_option("b", axby_b, "coefficient of y")->required();
  axby_cmd->add_option("c", axby_c, "right-hand side")->required();

  std::string oracle_text, box = "10";
  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force natural solutions over the box [0, B]^n");
  oracle_cmd->add_option("equation", oracle_text, "equation text")->required();
  oracle_cmd->add_option("--box", box, "per-variable upper bound B (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(classify_text, json_mode);
    if (solve_cmd->parsed()) return cmd_solve(solve_text, json_mode, cap);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_text, json_mode, cap, limit);
    if (axby_cmd->parsed()) return cmd_axby(axby_a, axby_b, axby_c, json_mode);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_text, json_mode, box);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message;
    if (e.status == NATLIN_ERROR_PARSE && e.offset != SIZE_MAX)
      std::cerr << " at position " << e.offset;
    std::cerr << "\n";
    return e.status == NATLIN_ERROR_LIMIT ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
