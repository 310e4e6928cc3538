#pragma once

#include <string>
#include <vector>

#include "knotcalc/scalar.hpp"

namespace knotcalc {

// Univariate polynomial with exact rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& c) { coeffs_.push_back(c); trim(); }  // NOLINT
  RatPoly(int c) : RatPoly(Rational(c)) {}                      // NOLINT
  explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RatPoly monomial(int degree, const Rational& c = 1) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Rational(0);
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  RatPoly operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(v));
  }
  friend RatPoly operator*(const Rational& s, RatPoly p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  RatPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = Rational(k) * coeffs_[k];
    return RatPoly(std::move(v));
  }

  // p(x + shift), expanded.
  RatPoly translated(const Rational& shift) const {
    RatPoly result;
    RatPoly xj(std::vector<Rational>{shift, 1});
    RatPoly power = 1;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) result += coeffs_[k] * power;
      power = power * xj;
    }
    return result;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // "c0 + c1 v + c2 v^2" style, e.g. "1 + z^2".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int n = 0; n <= degree(); ++n) {
    Rational c = coeff(n);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Rational a = c < 0 ? Rational(-c) : c;
    if (n == 0) {
      out += rational_to_string(a);
    } else {
      if (a != 1) out += rational_to_string(a) + " ";
      out += var;
      if (n > 1) out += "^" + std::to_string(n);
    }
  }
  return out;
}

}  // namespace knotcalc
