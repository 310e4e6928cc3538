#pragma once

#include <string>
#include <vector>

#include "knotcalc/chords.hpp"
#include "knotcalc/matrix.hpp"

namespace knotcalc {
namespace lieweights {

// Exact generator basis of a Lie algebra representation, normalized so that
// tr(T_a T_b) = delta_ab / 2. Every generator is traceless and Hermitian.
struct LieAlgebraRep {
  std::string name;
  int dim_rep = 0;
  std::vector<Matrix> generators;
  int algebra_dim() const { return static_cast<int>(generators.size()); }
};

// f^{abc} with [T_a, T_b] = i f^{abc} T_c, totally antisymmetric.
class StructureConstants {
 public:
  explicit StructureConstants(int n) : n_(n), f_(n * n * n) {}
  int dim() const { return n_; }
  Scalar& at(int a, int b, int c) { return f_[(a * n_ + b) * n_ + c]; }
  const Scalar& at(int a, int b, int c) const { return f_[(a * n_ + b) * n_ + c]; }

 private:
  int n_;
  std::vector<Scalar> f_;
};

LieAlgebraRep su2_fundamental();
// Orthonormalized generalized Gell-Mann basis; supported for 2 <= N <= 6
// (larger N needs radicals outside the scalar field).
LieAlgebraRep suN_fundamental(int N);

// f^{abc} = -2i tr([T_a, T_b] T_c). Throws if the rep violates the trace
// normalization.
StructureConstants structure_constants(const LieAlgebraRep& rep);

// Sum over one algebra index per chord of the trace of the generator product
// around the circle. Exact; proven rational for the shipped reps.
Rational weight(const chords::ChordDiagram& d, const LieAlgebraRep& rep);

// Sum_a T_a T_a, the quadratic Casimir insertion; a rational multiple of the
// identity for the shipped irreducible reps.
Matrix casimir_insertion(const LieAlgebraRep& rep);

struct FourTermViolation {
  chords::DiagramCombination combination;
  Rational value;
};

struct FourTermReport {
  int combinations_checked = 0;
  std::vector<FourTermViolation> violations;
  bool all_zero() const { return violations.empty(); }
};

// Evaluates every order-m four-term combination under the rep's weight
// system; all must vanish exactly.
FourTermReport check_4T(const LieAlgebraRep& rep, int m);

}  // namespace lieweights
}  // namespace knotcalc
