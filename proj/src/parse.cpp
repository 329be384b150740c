#include "parse.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>

#include "bigint.hpp"
#include "error.hpp"

namespace natlin {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
  }

  char peek() const { return text_[pos_]; }

  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // ASCII '-' or U+2212 (bytes e2 88 92).
  bool consume_minus() {
    if (consume('-')) return true;
    if (pos_ + 3 <= text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xe2 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
        static_cast<unsigned char>(text_[pos_ + 2]) == 0x92) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  // Optional: there may be no digits at the cursor.
  bool read_digits(Int& out) {
    if (at_end() || !is_digit(peek())) return false;
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    out = Int(text_.substr(start, pos_ - start));
    return true;
  }

  bool read_identifier(std::string& out) {
    if (at_end() || !is_letter(peek())) return false;
    std::size_t start = pos_;
    ++pos_;
    while (!at_end() && is_alnum(peek())) ++pos_;
    out = text_.substr(start, pos_ - start);
    return true;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedEquation parse_equation(const std::string& text) {
  Scanner scan(text);

  std::vector<std::string> names;
  std::vector<Int> coeffs;
  std::vector<std::size_t> first_use;
  std::unordered_map<std::string, std::size_t> index_of;

  scan.skip_ws();
  if (scan.at_end() || scan.peek() == '=')
    throw ParseError("empty left-hand side", scan.pos());

  bool first_term = true;
  while (true) {
    int sign = 1;
    if (first_term) {
      if (scan.consume('+')) {
      } else if (scan.consume_minus()) {
        sign = -1;
      }
    } else {
      if (scan.consume('+')) {
      } else if (scan.consume_minus()) {
        sign = -1;
      } else {
        break;  // no separator: the '=' must follow
      }
    }
    scan.skip_ws();

    std::size_t term_pos = scan.pos();
    Int magnitude = 1;
    bool had_digits = scan.read_digits(magnitude);
    if (had_digits) scan.skip_ws();

    std::string name;
    if (!scan.read_identifier(name)) {
      throw ParseError(had_digits ? "expected a variable name after the coefficient"
                                  : "expected a term",
                       scan.pos());
    }

    Int value = sign < 0 ? Int(-magnitude) : magnitude;
    auto [it, inserted] = index_of.emplace(name, names.size());
    if (inserted) {
      names.push_back(name);
      coeffs.push_back(std::move(value));
      first_use.push_back(term_pos);
    } else {
      coeffs[it->second] += value;
    }

    first_term = false;
    scan.skip_ws();
  }

  if (!scan.consume('='))
    throw ParseError("expected '+', '-', or '='", scan.pos());
  scan.skip_ws();

  int rhs_sign = 1;
  if (scan.consume('+')) {
  } else if (scan.consume_minus()) {
    rhs_sign = -1;
  }
  scan.skip_ws();
  Int rhs;
  if (!scan.read_digits(rhs))
    throw ParseError("expected an integer right-hand side", scan.pos());
  if (rhs_sign < 0) rhs = -rhs;

  scan.skip_ws();
  if (!scan.at_end())
    throw ParseError("unexpected trailing input", scan.pos());

  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0)
      throw ParseError("variable " + names[i] + " has zero merged coefficient", first_use[i]);
  }

  return ParsedEquation{LinearEquation(std::move(coeffs), std::move(rhs), std::move(names)),
                        text};
}

std::string render_equation(const LinearEquation& eq) {
  std::string out;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    const Int& c = eq.coeffs()[i];
    if (i == 0) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Int mag = abs_int(c);
    if (mag != 1) out += to_decimal(mag);
    out += eq.var_names()[i];
  }
  out += " = ";
  out += to_decimal(eq.rhs());
  return out;
}

}  // namespace natlin
