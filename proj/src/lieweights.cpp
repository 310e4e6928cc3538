#include "knotcalc/lieweights.hpp"

#include <map>
#include <stdexcept>

namespace knotcalc {
namespace lieweights {

namespace {

// sqrt(1 / (l (l+1))) for the diagonal generator normalizations, expressed
// in the Q(i, sqrt2, sqrt3, sqrt5) scalar field.
Scalar inv_sqrt_l_lp1(int l) {
  switch (l) {
    case 1:  // 1/sqrt2 = sqrt2/2
      return Rational(1, 2) * Scalar::sqrt2();
    case 2:  // 1/sqrt6 = sqrt6/6
      return Rational(1, 6) * Scalar::sqrt2() * Scalar::sqrt3();
    case 3:  // 1/sqrt12 = sqrt3/6
      return Rational(1, 6) * Scalar::sqrt3();
    case 4:  // 1/sqrt20 = sqrt5/10
      return Rational(1, 10) * Scalar::sqrt5();
    case 5:  // 1/sqrt30 = sqrt30/30
      return Rational(1, 30) * Scalar::sqrt2() * Scalar::sqrt3() * Scalar::sqrt5();
    default:
      throw std::invalid_argument("suN_fundamental: N > 6 needs radicals outside the scalar field");
  }
}

void check_normalization(const LieAlgebraRep& rep) {
  int n = rep.algebra_dim();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Scalar t = (rep.generators[a] * rep.generators[b]).trace();
      Scalar expect = (a == b) ? Scalar(Rational(1, 2)) : Scalar(0);
      if (t != expect)
        throw std::invalid_argument("rep '" + rep.name + "' violates tr(T_a T_b) = delta_ab/2");
    }
}

}  // namespace

LieAlgebraRep suN_fundamental(int N) {
  if (N < 2) throw std::invalid_argument("suN_fundamental: N must be at least 2");
  LieAlgebraRep rep;
  rep.name = "su" + std::to_string(N);
  rep.dim_rep = N;
  const Rational half(1, 2);
  // Gell-Mann ordering: the off-diagonal pairs involving each new matrix
  // index, then that index's diagonal generator (so T_1..T_3 are the scaled
  // Pauli matrices and f^{123} = 1 for every N).
  for (int l = 1; l < N; ++l) {
    for (int j = 0; j < l; ++j) {
      Matrix x(N, N);
      x(j, l) = half;
      x(l, j) = half;
      rep.generators.push_back(x);
      Matrix y(N, N);
      y(j, l) = Scalar::gaussian(0, Rational(-1, 2));
      y(l, j) = Scalar::gaussian(0, half);
      rep.generators.push_back(y);
    }
    // (1/2) sqrt(2/(l(l+1))) diag(1, ..., 1, -l, 0, ..., 0), with l ones
    Scalar scale = (l == 1) ? Scalar(half) : half * Scalar::sqrt2() * inv_sqrt_l_lp1(l);
    Matrix d(N, N);
    for (int j = 0; j < l; ++j) d(j, j) = scale;
    d(l, l) = -Scalar(l) * scale;
    rep.generators.push_back(d);
  }
  return rep;
}

LieAlgebraRep su2_fundamental() { return suN_fundamental(2); }

StructureConstants structure_constants(const LieAlgebraRep& rep) {
  check_normalization(rep);
  int n = rep.algebra_dim();
  StructureConstants f(n);
  Scalar minus_two_i = Scalar(-2) * Scalar::i();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      Matrix comm = commutator(rep.generators[a], rep.generators[b]);
      // tr(comm * T_c) summed directly; the off-diagonal product entries
      // would be discarded anyway.
      for (int c = 0; c < n; ++c) {
        const Matrix& tc = rep.generators[c];
        Scalar tr;
        for (int i = 0; i < rep.dim_rep; ++i)
          for (int k = 0; k < rep.dim_rep; ++k) {
            const Scalar& x = comm(i, k);
            if (x.is_zero()) continue;
            const Scalar& y = tc(k, i);
            if (!y.is_zero()) tr += x * y;
          }
        f.at(a, b, c) = minus_two_i * tr;
      }
    }
  return f;
}

Rational weight(const chords::ChordDiagram& d, const LieAlgebraRep& rep) {
  int m = d.order();
  int n = rep.algebra_dim();
  if (m == 0) return Rational(rep.dim_rep);
  // Chord index of each circle position.
  std::vector<int> chord_at(2 * m);
  for (int c = 0; c < m; ++c) {
    chord_at[d.chords()[c].first] = c;
    chord_at[d.chords()[c].second] = c;
  }
  std::vector<int> assign(m, 0);
  Scalar total;
  while (true) {
    Matrix prod = rep.generators[assign[chord_at[0]]];
    for (int p = 1; p < 2 * m; ++p) prod = prod * rep.generators[assign[chord_at[p]]];
    total += prod.trace();
    int k = m - 1;
    while (k >= 0 && assign[k] == n - 1) assign[k--] = 0;
    if (k < 0) break;
    ++assign[k];
  }
  if (!total.is_rational())
    throw std::logic_error("weight: non-rational value for rep " + rep.name);
  return total.rational_part();
}

Matrix casimir_insertion(const LieAlgebraRep& rep) {
  Matrix sum(rep.dim_rep, rep.dim_rep);
  for (const Matrix& t : rep.generators) sum += t * t;
  return sum;
}

FourTermReport check_4T(const LieAlgebraRep& rep, int m) {
  if (m < 2) throw std::invalid_argument("check_4T: m must be at least 2");
  FourTermReport report;
  std::map<chords::ChordDiagram, Rational> cache;
  auto cached_weight = [&](const chords::ChordDiagram& d) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Rational w = weight(d, rep);
    cache.emplace(d, w);
    return w;
  };
  for (const auto& combo : chords::four_term_relations(m)) {
    ++report.combinations_checked;
    Rational sum = 0;
    for (const auto& [diagram, coeff] : combo.terms) sum += coeff * cached_weight(diagram);
    if (sum != 0) report.violations.push_back({combo, sum});
  }
  return report;
}

}  // namespace lieweights
}  // namespace knotcalc
