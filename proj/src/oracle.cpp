#include "oracle.hpp"

#include <cstdint>
#include <limits>

#include "error.hpp"

namespace natlin::oracle {
namespace {

template <typename T>
void scan(const std::vector<T>& a, const T& rhs, const T& lo, const T& hi, std::size_t depth,
          T acc, std::vector<T>& x, std::vector<std::vector<Int>>& out) {
  if (depth + 1 == a.size()) {
    T value = acc + a[depth] * lo;
    for (T xi = lo; xi <= hi; ++xi, value += a[depth]) {
      if (value == rhs) {
        x[depth] = xi;
        std::vector<Int> hit(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) hit[i] = Int(x[i]);
        out.push_back(std::move(hit));
      }
    }
    return;
  }
  for (T xi = lo; xi <= hi; ++xi) {
    x[depth] = xi;
    scan(a, rhs, lo, hi, depth + 1, T(acc + a[depth] * xi), x, out);
  }
}

std::vector<std::vector<Int>> scan_box(const LinearEquation& eq, const Int& lo, const Int& hi) {
  const std::size_t n = eq.size();

  Int candidates = 1;
  for (std::size_t i = 0; i < n; ++i) candidates *= hi - lo + 1;
  if (candidates > kCandidateGuard)
    throw ResourceLimit("oracle box has " + to_decimal(candidates) + " candidates (guard " +
                        std::to_string(kCandidateGuard) + ")");

  // The scan itself is exact either way: the int64 path is taken only when
  // an a-priori bound shows no intermediate sum can overflow.
  Int magnitude = abs_int(eq.rhs());
  Int extent = std::max(abs_int(lo), abs_int(hi));
  for (const auto& c : eq.coeffs()) magnitude += abs_int(c) * extent;

  std::vector<std::vector<Int>> out;
  if (magnitude < (Int(1) << 62)) {
    std::vector<std::int64_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = eq.coeffs()[i].convert_to<std::int64_t>();
    std::vector<std::int64_t> x(n, 0);
    scan<std::int64_t>(a, eq.rhs().convert_to<std::int64_t>(), lo.convert_to<std::int64_t>(),
                       hi.convert_to<std::int64_t>(), 0, 0, x, out);
  } else {
    std::vector<Int> x(n, 0);
    scan<Int>(eq.coeffs(), eq.rhs(), lo, hi, 0, Int(0), x, out);
  }
  return out;  // ascending odometer order == lexicographic
}

}  // namespace

std::vector<std::vector<Int>> brute_force_natural(const LinearEquation& eq, const Int& box) {
  if (box < 1) throw InvalidArgument("oracle box must be positive");
  return scan_box(eq, Int(0), box);
}

std::vector<std::vector<Int>> brute_force_integer(const LinearEquation& eq, const Int& box) {
  if (box < 1) throw InvalidArgument("oracle box must be positive");
  return scan_box(eq, -box, box);
}

}  // namespace natlin::oracle
