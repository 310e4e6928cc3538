#pragma once

#include <functional>
#include <string>

#include "knotcalc/chords.hpp"
#include "knotcalc/knotio.hpp"
#include "knotcalc/polynomial.hpp"

namespace knotcalc {
namespace vassiliev {

// A knot/link invariant with values in Q[z]. The evaluator must depend on
// the code only and be invariant under cyclic rotation of it.
struct BaseInvariant {
  std::string name;
  std::function<RatPoly(const knotio::Link&)> evaluate;
};

// Coefficients of V(K_*) = a V(K_+) + b V(K_-) + c V(K_0).
struct GraphExtensionConfig {
  RatPoly a, b, c;
};

// Conway polynomial via the skein relation
//   C(K_+) - C(K_-) = z C(K_0),  C(unknot) = 1,  C(split link) = 0.
// Throws if the recursion exceeds max_depth.
RatPoly conway(const knotio::Link& link, int max_depth = 64);
RatPoly conway(const knotio::GaussCode& code, int max_depth = 64);
BaseInvariant conway_invariant();

// Coefficient of z^2 in the Conway polynomial; knots only.
Rational v2(const knotio::GaussCode& code);
// Same as a pluggable constant-polynomial invariant.
BaseInvariant v2_invariant();

// V(G) = sum over all 3^|G| node replacements with monomial coefficients
// a^{i_+} b^{i_-} c^{i_0}.
RatPoly extend_to_graph(const BaseInvariant& V, const GraphExtensionConfig& cfg,
                        const knotio::SingularKnotDiagram& G, int node_bound = 8);

// The Vassiliev extension V(K_*) = V(K_+) - V(K_-), resolved recursively;
// equal to extend_to_graph with (1, -1, 0).
RatPoly vassiliev_extend(const BaseInvariant& V, const knotio::SingularKnotDiagram& s,
                         int node_bound = 8);

// Ascending-style singular knot whose chord diagram is d. Different variants
// give different embeddings of the same underlying graph.
knotio::SingularKnotDiagram realize(const chords::ChordDiagram& d, int variant = 0);

// Value of a type-k invariant on a k-chord diagram: vassiliev_extend on a
// realization; independent of the realization for genuine type-k invariants.
RatPoly symbol(const BaseInvariant& V, int k, const chords::ChordDiagram& d);

}  // namespace vassiliev
}  // namespace knotcalc
