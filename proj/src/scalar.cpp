#include "knotcalc/scalar.hpp"

#include <cmath>
#include <sstream>

namespace knotcalc {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  static const int radical[4] = {-1, 2, 3, 5};  // bit 0 is i, i*i = -1
  Scalar r;
  for (int ma = 0; ma < Scalar::kComponents; ++ma) {
    if (a.c_[ma] == 0) continue;
    for (int mb = 0; mb < Scalar::kComponents; ++mb) {
      if (b.c_[mb] == 0) continue;
      Rational term = a.c_[ma] * b.c_[mb];
      int common = ma & mb;
      for (int bit = 0; bit < 4; ++bit)
        if (common & (1 << bit)) term *= radical[bit];
      r.c_[ma ^ mb] += term;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  // Multiply by conjugates flipping each generator in turn; the running
  // product becomes rational after the last step.
  Scalar numerator = Scalar(1);
  Scalar current = *this;
  for (int bit = 0; bit < 4; ++bit) {
    Scalar cj = current.conj_bit(bit);
    numerator *= cj;
    current *= cj;
  }
  if (!current.is_rational())
    throw std::logic_error("Scalar::inverse: norm not rational");
  Rational norm = current.c_[0];
  Scalar r;
  for (int m = 0; m < kComponents; ++m) r.c_[m] = numerator.c_[m] / norm;
  return r;
}

double Scalar::to_double() const {
  static const double vals[4] = {0.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)};
  double re = 0.0;
  for (int m = 0; m < kComponents; ++m) {
    if (c_[m] == 0 || (m & 1)) continue;  // imaginary parts excluded
    double f = static_cast<double>(c_[m]);
    for (int bit = 1; bit < 4; ++bit)
      if (m & (1 << bit)) f *= vals[bit];
    re += f;
  }
  return re;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  static const char* names[4] = {"i", "sqrt2", "sqrt3", "sqrt5"};
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < kComponents; ++m) {
    if (c_[m] == 0) continue;
    Rational v = c_[m];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    } else if (v < 0 && m != 0) {
      os << "-";
      v = -v;
    }
    bool wrote_coeff = false;
    if (m == 0 || v != 1) {
      os << (first && m == 0 ? rational_to_string(c_[m]) : rational_to_string(v));
      wrote_coeff = true;
    }
    for (int bit = 0; bit < 4; ++bit) {
      if (m & (1 << bit)) {
        if (wrote_coeff) os << "*";
        os << names[bit];
        wrote_coeff = true;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace knotcalc
