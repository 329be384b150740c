#pragma once

#include <string>

#include "equation.hpp"

namespace natlin {

struct ParsedEquation {
  LinearEquation equation;
  std::string source_text;
};

/// Grammar: equation := term (('+'|'-') term)* '=' integer with
/// term := [digits] identifier. An omitted coefficient means 1; the first
/// term may carry a leading sign; identifiers are an ASCII letter followed
/// by alphanumerics; whitespace is ignored everywhere between tokens.
/// Repeated identifiers are merged by summing their coefficients.
///
/// U+2212 is accepted anywhere an ASCII '-' is.
///
/// Throws ParseError with a 0-based byte offset: syntax errors point at the
/// offending byte, a zero merged coefficient at the variable's first use.
ParsedEquation parse_equation(const std::string& text);

/// Canonical ASCII form, e.g. "3x - 7y + 2z = -18". Unit coefficients are
/// omitted. parse_equation(render_equation(eq)).equation == eq.
std::string render_equation(const LinearEquation& eq);

}  // namespace natlin
