#include <random>

#include "doctest.h"
#include "knotcalc/gaussmoments.hpp"

using namespace knotcalc;
using gaussmoments::parse_polynomial;

TEST_CASE("derivative classes reduce to zero") {
  CHECK(gaussmoments::derivative_of(RatPoly(1)).p == parse_polynomial("-x"));
  CHECK(gaussmoments::derivative_of(RatPoly(0)).p.is_zero());
  for (const char* q : {"1", "x", "x^2", "3x^4 - x^2 + 7", "1/3 x^5 + x"})
    CHECK(gaussmoments::reduce(gaussmoments::derivative_of(parse_polynomial(q)).p) == 0);
  // D(x e^{-x^2/2}) = (1 - x^2) e^{-x^2/2} ~ 0, so reduce(x^2) = reduce(1)
  CHECK(gaussmoments::reduce(parse_polynomial("x^2")) == gaussmoments::reduce(RatPoly(1)));
}

TEST_CASE("reduction of monomials and constants") {
  CHECK(gaussmoments::reduce(parse_polynomial("x^2")) == 1);
  CHECK(gaussmoments::reduce(parse_polynomial("x^4")) == 3);
  CHECK(gaussmoments::reduce(parse_polynomial("x^6")) == 15);
  CHECK(gaussmoments::reduce(parse_polynomial("x^3")) == 0);
  CHECK(gaussmoments::reduce(RatPoly(5)) == 5);
  CHECK(gaussmoments::reduce(parse_polynomial("3x^4 - x^2 + 7")) == 15);
}

TEST_CASE("reduce is linear") {
  std::mt19937 rng(7);
  auto random_poly = [&](int maxdeg) {
    RatPoly p;
    int deg = static_cast<int>(rng() % (maxdeg + 1));
    for (int n = 0; n <= deg; ++n)
      p = p + Rational(static_cast<int>(rng() % 19) - 9, 1 + rng() % 7) * RatPoly::monomial(n);
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    RatPoly p = random_poly(8), q = random_poly(8);
    Rational k(static_cast<int>(rng() % 11) - 5, 1 + rng() % 5);
    CHECK(gaussmoments::reduce(k * p + q) ==
          k * gaussmoments::reduce(p) + gaussmoments::reduce(q));
  }
}

TEST_CASE("moments match the double factorial and the source series") {
  CHECK(gaussmoments::moment(0) == 1);
  CHECK(gaussmoments::moment(2) == 1);
  CHECK(gaussmoments::moment(8) == 105);
  auto series = gaussmoments::source_series(42);
  Rational dfact = 1, factorial = 1;
  for (int n = 1; n <= 41; ++n) {
    factorial *= n;
    if (n % 2 == 0) dfact *= (n - 1);
    Rational expected = (n % 2 == 0) ? dfact : Rational(0);
    CHECK(gaussmoments::moment(n) == expected);             // (n-1)!! on evens
    CHECK(factorial * series.coeff(n) == expected);         // n! [J^n] e^{J^2/2}
  }
}

TEST_CASE("source series coefficients") {
  auto s = gaussmoments::source_series(6);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(2) == Rational(1, 2));
  CHECK(s.coeff(3) == 0);
  CHECK(s.coeff(4) == Rational(1, 8));
  CHECK(s.coeff(7) == 0);  // beyond truncation
}

TEST_CASE("drifted reduction undoes translation") {
  // p(x+J) against the shifted weight reduces to the same class as p
  RatPoly p = parse_polynomial("x^3 - 2x");
  Rational J(1, 2);
  CHECK(gaussmoments::reduce_with_drift(p.translated(J), -J) == gaussmoments::reduce(p));
}

TEST_CASE("proposition checks on pinned examples") {
  auto r1 = gaussmoments::check_proposition(parse_polynomial("x^2"), RatPoly(1), Rational(3),
                                            Rational(0));
  CHECK(r1.all_pass());
  auto r2 = gaussmoments::check_proposition(parse_polynomial("x^3"), parse_polynomial("x"),
                                            Rational(1), Rational(1, 2));
  CHECK(r2.translation_invariant);
  CHECK(r2.all_pass());
}

TEST_CASE("proposition holds on 200 random rational polynomials") {
  std::mt19937 rng(20240817);
  auto random_poly = [&] {
    RatPoly p;
    int deg = static_cast<int>(rng() % 9);
    for (int n = 0; n <= deg; ++n)
      p = p + Rational(static_cast<int>(rng() % 21) - 10, 1 + rng() % 9) * RatPoly::monomial(n);
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Rational k(static_cast<int>(rng() % 13) - 6, 1 + rng() % 6);
    Rational J(static_cast<int>(rng() % 9) - 4, 1 + rng() % 4);
    auto report = gaussmoments::check_proposition(random_poly(), random_poly(), k, J);
    CHECK(report.respects_equivalence);
    CHECK(report.linear);
    CHECK(report.translation_invariant);
    CHECK(report.integration_by_parts);
  }
}

TEST_CASE("polynomial parser") {
  CHECK(parse_polynomial("3x^4 - x^2 + 7").coeff(4) == 3);
  CHECK(parse_polynomial("3x^4 - x^2 + 7").coeff(2) == -1);
  CHECK(parse_polynomial("1/2 x^3 + x").coeff(3) == Rational (1, 2));
  CHECK(parse_polynomial("t^2", 't').coeff(2) == 1);
  CHECK_THROWS_AS(parse_polynomial("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("3y", 'x'), std::invalid_argument);
}
