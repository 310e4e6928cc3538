#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotcalc {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Exact scalar in the field Q(i, sqrt2, sqrt3, sqrt5).
//
// A value is a rational combination of the 16 basis elements
// i^e * sqrt2^a * sqrt3^b * sqrt5^c with e,a,b,c in {0,1}. Component index
// is the bitmask (bit 0: i, bit 1: sqrt2, bit 2: sqrt3, bit 3: sqrt5).
// Rational and Gaussian-rational values embed as the obvious sparse vectors;
// the radicals are needed for the orthonormalized su(N) generator bases.
class Scalar {
 public:
  static constexpr int kComponents = 16;

  Scalar() = default;
  Scalar(int v) { c_[0] = v; }  // NOLINT: implicit by design
  Scalar(const Rational& v) { c_[0] = v; }  // NOLINT

  static Scalar i() { return unit(1); }
  static Scalar sqrt2() { return unit(2); }
  static Scalar sqrt3() { return unit(4); }
  static Scalar sqrt5() { return unit(8); }
  static Scalar gaussian(const Rational& re, const Rational& im) {
    Scalar s;
    s.c_[0] = re;
    s.c_[1] = im;
    return s;
  }

  const Rational& component(int mask) const { return c_[mask]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  // True when the value lies in Q.
  bool is_rational() const {
    for (int m = 1; m < kComponents; ++m)
      if (c_[m] != 0) return false;
    return true;
  }
  // True when the value lies in Q(i).
  bool is_gaussian_rational() const {
    for (int m = 2; m < kComponents; ++m)
      if (c_[m] != 0) return false;
    return true;
  }
  Rational rational_part() const { return c_[0]; }

  Scalar operator-() const {
    Scalar r;
    for (int m = 0; m < kComponents; ++m) r.c_[m] = -c_[m];
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    for (int m = 0; m < kComponents; ++m) c_[m] += o.c_[m];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (int m = 0; m < kComponents; ++m) c_[m] -= o.c_[m];
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Complex conjugate (i -> -i); the radicals are real.
  Scalar conj() const { return conj_bit(0); }

  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  double to_double() const;
  std::string to_string() const;

 private:
  static Scalar unit(int mask) {
    Scalar s;
    s.c_[mask] = 1;
    return s;
  }
  Scalar conj_bit(int bit) const {
    Scalar r = *this;
    for (int m = 0; m < kComponents; ++m)
      if (m & (1 << bit)) r.c_[m] = -r.c_[m];
    return r;
  }

  std::array<Rational, kComponents> c_{};
};

}  // namespace knotcalc
