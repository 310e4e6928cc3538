#pragma once

#include <complex>
#include <vector>

#include "knotcalc/chords.hpp"
#include "knotcalc/knotio.hpp"
#include "knotcalc/lieweights.hpp"

namespace knotcalc {
namespace kontsevich {

struct Strand {
  std::complex<double> z;      // section point
  std::complex<double> dz_dt;  // exact complex edge slope
  bool downward = false;       // knot orientation vs. global time
  double loop_param = 0;       // position along the polyline, for tracing
};

struct QuadratureConfig {
  int subdivisions = 64;        // cells per monotone height interval
  double critical_margin = 0.05;  // fraction of the minimal critical-height gap
  enum class Scheme { Midpoint, Trapezoid } scheme = Scheme::Midpoint;
  int threads = 1;
};

// All intersections of the polyline with the horizontal plane at height t.
// Throws when t lies inside the margin around a critical height.
std::vector<Strand> strands_at(const knotio::MorseEmbedding& e, double t,
                               double critical_margin = 0.05);

struct CoefficientResult {
  double value = 0;
  double imag_residual = 0;
};

// Iterated integral over the time simplex of prod d(z_i - z'_i)/(z_i - z'_i),
// restricted to level pairings tracing to the diagram d, signed by
// (-1)^{#downward endpoints} and normalized by 1/(2 pi i)^m. Orders 1 and 2
// only.
CoefficientResult raw_coefficient(const knotio::MorseEmbedding& e,
                                  const chords::ChordDiagram& d,
                                  const QuadratureConfig& cfg);

// Crossed-pair coefficient of the knot minus that of a max-matched unknot;
// converges to the degree-2 Vassiliev invariant.
double v2_numeric(const knotio::MorseEmbedding& knot, const knotio::MorseEmbedding& unknot,
                  const QuadratureConfig& cfg);

struct ExpansionTerm {
  int order = 0;
  double value = 0;
  double imag_residual = 0;
};

// Per-order contraction of diagram coefficients with Lie-algebra weights.
std::vector<ExpansionTerm> weighted_expansion(const knotio::MorseEmbedding& e,
                                              const lieweights::LieAlgebraRep& rep, int m_max,
                                              const QuadratureConfig& cfg);

// Shipped example embeddings.
knotio::MorseEmbedding planar_circle(int segments = 36);
knotio::MorseEmbedding trefoil_embedding();
knotio::MorseEmbedding matched_unknot_embedding();
knotio::MorseEmbedding figure_eight_embedding();

// Two-bridge plat over four rails; used to build the shipped embeddings.
// Letters are (position in 0..2, sign).
knotio::MorseEmbedding plat_embedding(const std::vector<std::pair<int, int>>& braid_word);

}  // namespace kontsevich
}  // namespace knotcalc
