#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "error.hpp"
#include "euclid.hpp"
#include "support/corpus.hpp"

using natlin::BezoutResult;
using natlin::gcd_ext;
using natlin::Int;
using natlin::multi_gcd_bezout;

TEST_CASE("gcd_ext satisfies the Bezout identity on a signed grid") {
  for (int a = -12; a <= 12; ++a) {
    for (int b = -12; b <= 12; ++b) {
      if (a == 0 && b == 0) continue;
      BezoutResult r = gcd_ext(Int(a), Int(b));
      CHECK(r.g > 0);
      CHECK(a % r.g == 0);
      CHECK(b % r.g == 0);
      CHECK(r.coefficients[0] * a + r.coefficients[1] * b == r.g);
    }
  }
}

TEST_CASE("gcd_ext pinned values") {
  BezoutResult r = gcd_ext(Int(5), Int(3));
  CHECK(r.g == 1);
  CHECK(r.coefficients[0] * 5 + r.coefficients[1] * 3 == 1);

  r = gcd_ext(Int(3), Int(-7));
  CHECK(r.g == 1);
  CHECK(r.coefficients == std::vector<Int>{-2, -1});

  r = gcd_ext(Int(0), Int(-4));
  CHECK(r.g == 4);
  CHECK(r.coefficients[1] * -4 == 4);

  CHECK(gcd_ext(Int(12), Int(18)).g == 6);
  CHECK_THROWS_AS(gcd_ext(Int(0), Int(0)), natlin::InvalidArgument);
}

TEST_CASE("gcd_ext handles large operands exactly") {
  Int a("123456789012345678901234567890");
  Int b("-987654321098765432109876543210987");
  BezoutResult r = gcd_ext(a, b);
  CHECK(r.g > 0);
  CHECK(a % r.g == 0);
  CHECK(b % r.g == 0);
  CHECK(r.coefficients[0] * a + r.coefficients[1] * b == r.g);
}

TEST_CASE("multi_gcd_bezout pinned values") {
  BezoutResult r = multi_gcd_bezout(std::vector<Int>{3, -7, 2});
  CHECK(r.g == 1);
  CHECK(r.coefficients == std::vector<Int>{-2, -1, 0});

  CHECK(multi_gcd_bezout(std::vector<Int>{4, 6}).g == 2);
  CHECK(multi_gcd_bezout(std::vector<Int>{6, 10, 15}).g == 1);
  CHECK(multi_gcd_bezout(std::vector<Int>{-4}).g == 4);

  CHECK_THROWS_AS(multi_gcd_bezout(std::vector<Int>{}), natlin::InvalidArgument);
  CHECK_THROWS_AS(multi_gcd_bezout(std::vector<Int>{3, 0, 2}), natlin::InvalidArgument);
}

TEST_CASE("multi_gcd_bezout identity and determinism on random vectors") {
  natlin::testsupport::EquationCorpus corpus(1101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = corpus.integer_in(1, 6);
    std::vector<Int> a;
    for (int i = 0; i < n; ++i) a.emplace_back(corpus.nonzero(40));

    BezoutResult first = multi_gcd_bezout(a);
    BezoutResult second = multi_gcd_bezout(a);
    CHECK(first.g == second.g);
    CHECK(first.coefficients == second.coefficients);

    CHECK(first.g > 0);
    Int combo = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(a[i] % first.g == 0);
      combo += first.coefficients[i] * a[i];
    }
    CHECK(combo == first.g);
  }
}
