#include "doctest.h"

#include "algdeg/errors.hpp"
#include "algdeg/poly_text.hpp"
#include "test_support.hpp"

using namespace algdeg;

TEST_CASE("printing") {
  const auto r = Ring::make(3, PrimeField(101));
  const auto names = default_names(3);
  CHECK(to_string(parse_polynomial("47*x1^5 + 5*x1*x2^4 - 92*x1*x3^2", r, names), names) ==
        "47*x1^5 + 5*x1*x2^4 + 9*x1*x3^2");
  CHECK(to_string(parse_polynomial("-x2 + 1", r, names), names) == "-x2 + 1");
  CHECK(to_string(Polynomial(r), names) == "0");
  CHECK(to_string(Polynomial::constant(r, 1), names) == "1");
  CHECK(to_string(Polynomial::constant(r, 100), names) == "-1");
  CHECK(default_names(2, 1) == VariableNames{"x1", "x2", "l1"});
  CHECK(homogeneous_names(2) == VariableNames{"x0", "x1", "x2"});
}

TEST_CASE("parsing") {
  const auto r = Ring::make(2, PrimeField(17));
  const auto names = default_names(2);
  const auto x1 = Polynomial::variable(r, 0), x2 = Polynomial::variable(r, 1);
  CHECK(parse_polynomial("(x1 + x2)^2", r, names) == (x1 + x2) * (x1 + x2));
  CHECK(parse_polynomial("-(x1 - 2)*x2", r, names) == (Polynomial::constant(r, 2) - x1) * x2);
  CHECK(parse_polynomial("  x1*x1 ", r, names) == x1 * x1);
  CHECK(parse_polynomial("100000000000000000000", r, names) == Polynomial::constant(r, 4));
}

TEST_CASE("parse errors carry line and column") {
  const auto r = Ring::make(2, PrimeField(17));
  const auto names = default_names(2);
  try {
    parse_polynomial("x1 + y7", r, names, 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x1 +", r, names), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 ** 2", r, names), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x1", r, names), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3", r, names), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r, names), ParseError);
}

TEST_CASE("print then parse round trip") {
  testing::Gen gen(4);
  const auto r = Ring::make(4, PrimeField());
  const auto names = default_names(4);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.poly(r, 5, 8);
    CHECK(parse_polynomial(to_string(f, names), r, names) == f);
  }
}
