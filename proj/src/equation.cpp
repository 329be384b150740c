#include "equation.hpp"

#include <unordered_set>

#include "error.hpp"
#include "euclid.hpp"

namespace natlin {

LinearEquation::LinearEquation(std::vector<Int> coeffs, Int rhs, std::vector<std::string> var_names)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)), var_names_(std::move(var_names)) {
  if (coeffs_.empty()) throw InvalidArgument("equation needs at least one term");
  if (coeffs_.size() != var_names_.size())
    throw InvalidArgument("coefficient and variable counts differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      throw InvalidArgument("variable " + var_names_[i] + " has zero coefficient");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : var_names_) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name " + name);
  }
}

LinearEquation LinearEquation::with_default_names(std::vector<Int> coeffs, Int rhs) {
  std::vector<std::string> names;
  names.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return LinearEquation(std::move(coeffs), std::move(rhs), std::move(names));
}

Int LinearEquation::evaluate(std::span<const Int> x) const {
  if (x.size() != coeffs_.size()) throw InvalidArgument("vector length does not match equation");
  Int sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * x[i];
  return sum;
}

bool LinearEquation::satisfied_by(std::span<const Int> x) const { return evaluate(x) == rhs_; }

LinearEquation LinearEquation::negated() const {
  std::vector<Int> neg;
  neg.reserve(coeffs_.size());
  for (const auto& c : coeffs_) neg.push_back(-c);
  return LinearEquation(std::move(neg), -rhs_, var_names_);
}

std::optional<NormalizedEquation> normalize(const LinearEquation& eq) {
  Int d = multi_gcd_bezout(eq.coeffs()).g;
  if (eq.rhs() % d != 0) return std::nullopt;  // no integer solutions
  std::vector<Int> scaled;
  scaled.reserve(eq.size());
  for (const auto& c : eq.coeffs()) scaled.push_back(c / d);
  return NormalizedEquation{LinearEquation(std::move(scaled), eq.rhs() / d, eq.var_names()), d};
}

}  // namespace natlin
