#pragma once

#include <string>
#include <vector>

#include "knotcalc/polynomial.hpp"

namespace knotcalc {
namespace gaussmoments {

// p(x) * exp(-x^2/2), represented by its polynomial prefactor. Every such
// expression is equivalent, modulo exact derivatives of rapidly vanishing
// functions, to a rational multiple of the bare Gaussian; reduce() computes
// that multiple.
struct GaussianExpression {
  RatPoly p;
};

// Truncated power series of exp(J^2/2) in J.
struct SourceSeries {
  std::vector<Rational> coeffs;  // coeffs[n] multiplies J^n
  Rational coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : Rational(0);
  }
};

// D(q * exp(-x^2/2)) = (q' - x q) * exp(-x^2/2); its class is zero.
GaussianExpression derivative_of(const RatPoly& q);

// The rational mu with p * exp(-x^2/2) ~ mu * exp(-x^2/2).
Rational reduce(const RatPoly& p);

// Same modulo derivatives against the weight exp(-x^2/2 + c x); the
// reduction rule becomes x^n ~ c x^{n-1} + (n-1) x^{n-2}.
Rational reduce_with_drift(const RatPoly& p, const Rational& c);

// reduce(x^n): (n-1)!! for even n, 0 for odd n.
Rational moment(int n);

SourceSeries source_series(int n_max);

struct PropositionReport {
  bool respects_equivalence = false;  // reduce(p + Dq-part) == reduce(p)
  bool linear = false;                // reduce(k p + q) == k reduce(p) + reduce(q)
  bool translation_invariant = false; // class of p(x+J) Gaussian(x+J) matches
  bool integration_by_parts = false;  // reduce of D(p q Gaussian)/Gaussian == 0
  bool all_pass() const {
    return respects_equivalence && linear && translation_invariant && integration_by_parts;
  }
};

PropositionReport check_proposition(const RatPoly& p, const RatPoly& q,
                                    const Rational& k, const Rational& J);

// Parses e.g. "3x^4 - x^2 + 7" or "1/2 x^3 + x".
RatPoly parse_polynomial(const std::string& text, char var = 'x');

}  // namespace gaussmoments
}  // namespace knotcalc
