#include "knotcalc/gaussmoments.hpp"

#include <cctype>
#include <stdexcept>

namespace knotcalc {
namespace gaussmoments {

GaussianExpression derivative_of(const RatPoly& q) {
  return GaussianExpression{q.derivative() - RatPoly::monomial(1) * q};
}

Rational reduce_with_drift(const RatPoly& p, const Rational& c) {
  std::vector<Rational> w(p.degree() + 1);
  for (int n = 0; n <= p.degree(); ++n) w[n] = p.coeff(n);
  for (int n = p.degree(); n >= 1; --n) {
    if (w[n] == 0) continue;
    // x^n ~ c x^{n-1} + (n-1) x^{n-2}
    w[n - 1] += c * w[n];
    if (n >= 2) w[n - 2] += Rational(n - 1) * w[n];
    w[n] = 0;
  }
  return w.empty() ? Rational(0) : w[0];
}

Rational reduce(const RatPoly& p) { return reduce_with_drift(p, 0); }

Rational moment(int n) {
  if (n < 0) throw std::invalid_argument("moment: n must be non-negative");
  return reduce(RatPoly::monomial(n));
}

SourceSeries source_series(int n_max) {
  if (n_max < 0) throw std::invalid_argument("source_series: n_max must be non-negative");
  SourceSeries s;
  s.coeffs.assign(n_max + 1, 0);
  Rational term = 1;  // (1/2)^k / k!, the J^{2k} coefficient of exp(J^2/2)
  for (int k = 0; 2 * k <= n_max; ++k) {
    s.coeffs[2 * k] = term;
    term /= Rational(2 * (k + 1));
  }
  return s;
}

PropositionReport check_proposition(const RatPoly& p, const RatPoly& q,
                                    const Rational& k, const Rational& J) {
  PropositionReport r;

  GaussianExpression dq = derivative_of(q);
  r.respects_equivalence = reduce(p + dq.p) == reduce(p);

  r.linear = reduce(k * p + q) == k * reduce(p) + reduce(q);

  // p(x+J) exp(-(x+J)^2/2) = const * p(x+J) exp(-x^2/2 - Jx); its class
  // relative to that weight equals the class of p relative to the plain
  // Gaussian.
  r.translation_invariant = reduce_with_drift(p.translated(J), -J) == reduce(p);

  // D(p q exp(-x^2/2)) has polynomial part (pq)' - x(pq); its class is zero,
  // which is integration by parts with vanishing boundary terms.
  RatPoly pq = p * q;
  r.integration_by_parts =
      reduce(pq.derivative() - RatPoly::monomial(1) * pq) == 0;

  return r;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw std::invalid_argument("polynomial parse error at position " +
                                                std::to_string(start));
  Rational num(c.s.substr(start, c.i - start));
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    c.skip_ws();
    size_t dstart = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == dstart)
      throw std::invalid_argument("polynomial parse error: missing denominator");
    Rational den(c.s.substr(dstart, c.i - dstart));
    if (den == 0) throw std::invalid_argument("polynomial parse error: zero denominator");
    num /= den;
  }
  return num;
}

}  // namespace

RatPoly parse_polynomial(const std::string& text, char var) {
  Cursor c{text};
  RatPoly result;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      sign = (c.s[c.i] == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse error: expected '+' or '-' at position " +
                                  std::to_string(c.i));
    }
    c.skip_ws();
    Rational coeff = 1;
    bool have_coeff = false;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
      coeff = parse_number(c);
      have_coeff = true;
    }
    c.skip_ws();
    int deg = 0;
    if (c.i < c.s.size() && c.s[c.i] == '*') {  // optional explicit product
      ++c.i;
      c.skip_ws();
    }
    if (c.i < c.s.size() && c.s[c.i] == var) {
      ++c.i;
      deg = 1;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        c.skip_ws();
        size_t start = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == start)
          throw std::invalid_argument("polynomial parse error: missing exponent");
        deg = std::stoi(c.s.substr(start, c.i - start));
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("polynomial parse error at position " + std::to_string(c.i));
    }
    result += RatPoly::monomial(deg, Rational(sign) * coeff);
    first = false;
  }
  return result;
}

}  // namespace gaussmoments
}  // namespace knotcalc
