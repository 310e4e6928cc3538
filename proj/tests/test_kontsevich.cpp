#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "knotcalc/kontsevich.hpp"
#include "knotcalc/vassiliev.hpp"
#include "support.hpp"

using namespace knotcalc;
using kontsevich::QuadratureConfig;

namespace {

knotio::MorseEmbedding flipped(const knotio::MorseEmbedding& e) {
  knotio::MorseEmbedding f = e;
  for (auto& v : f.vertices) v.t = 1.0 - v.t;
  return f;
}

knotio::MorseEmbedding jittered(const knotio::MorseEmbedding& e, double amplitude,
                                unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  knotio::MorseEmbedding f = e;
  for (auto& v : f.vertices) v.z += std::complex<double>(u(rng), u(rng));
  return f;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const chords::ChordDiagram kCrossed({{0, 2}, {1, 3}});
const chords::ChordDiagram kNested({{0, 1}, {2, 3}});

}  // namespace

TEST_CASE("strand sections of the planar circle") {
  auto e = kontsevich::planar_circle();
  auto crit = knotio::morse_validate(e);
  REQUIRE(crit.size() == 2);

  auto mid = kontsevich::strands_at(e, 0.5);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0].downward != mid[1].downward);
  CHECK(mid[0].loop_param != mid[1].loop_param);

  CHECK(kontsevich::strands_at(e, crit.back().t + 0.5).empty());
  CHECK(kontsevich::strands_at(e, crit.front().t - 0.5).empty());
  CHECK_THROWS_AS(kontsevich::strands_at(e, crit.back().t - 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(kontsevich::strands_at(e, 0.5, 0.6), std::invalid_argument);
}

TEST_CASE("trefoil plat has four strands in the braid region") {
  auto e = kontsevich::trefoil_embedding();
  auto s = kontsevich::strands_at(e, 0.5);
  REQUIRE(s.size() == 4);
  int down = 0;
  for (const auto& strand : s) down += strand.downward ? 1 : 0;
  CHECK(down == 2);
}

TEST_CASE("raw coefficients of the unknotted circle are near zero") {
  auto e = kontsevich::planar_circle();
  QuadratureConfig cfg;
  cfg.subdivisions = 24;
  auto single = kontsevich::raw_coefficient(e, chords::ChordDiagram({{0, 1}}), cfg);
  CHECK(std::abs(single.value) < 0.02);
  auto crossed = kontsevich::raw_coefficient(e, kCrossed, cfg);
  CHECK(std::abs(crossed.value) < 0.02);
  CHECK(crossed.imag_residual < 1e-3);

  chords::ChordDiagram cubic({{0, 3}, {1, 4}, {2, 5}});
  CHECK_THROWS_AS(kontsevich::raw_coefficient(e, cubic, cfg), std::invalid_argument);
}

TEST_CASE("self-subtraction is exactly zero") {
  auto e = kontsevich::trefoil_embedding();
  QuadratureConfig cfg;
  cfg.subdivisions = 8;
  CHECK(kontsevich::v2_numeric(e, e, cfg) == 0.0);
}

TEST_CASE("reference unknot must match the number of maxima") {
  QuadratureConfig cfg;
  cfg.subdivisions = 8;
  CHECK_THROWS_AS(kontsevich::v2_numeric(kontsevich::trefoil_embedding(),
                                         kontsevich::planar_circle(), cfg),
                  std::invalid_argument);
}

TEST_CASE("shipped embeddings converge to the expected values") {
  QuadratureConfig cfg;
  cfg.subdivisions = 16;
  auto unknot = kontsevich::matched_unknot_embedding();
  double tref = kontsevich::v2_numeric(kontsevich::trefoil_embedding(), unknot, cfg);
  double fig8 = kontsevich::v2_numeric(kontsevich::figure_eight_embedding(), unknot, cfg);
  CHECK(std::abs(tref - 1.0) < 0.05);
  CHECK(std::abs(fig8 + 1.0) < 0.05);
}

TEST_CASE("reflecting the time axis preserves the invariant") {
  QuadratureConfig cfg;
  cfg.subdivisions = 12;
  auto unknot = kontsevich::matched_unknot_embedding();
  double v = kontsevich::v2_numeric(kontsevich::trefoil_embedding(), unknot, cfg);
  double vf =
      kontsevich::v2_numeric(flipped(kontsevich::trefoil_embedding()), flipped(unknot), cfg);
  CHECK(std::abs(v - vf) < 0.05);
}

TEST_CASE("refinement deltas shrink under subdivision doubling") {
  auto knot = kontsevich::trefoil_embedding();
  auto unknot = kontsevich::matched_unknot_embedding();
  QuadratureConfig cfg;
  double v[3];
  int k = 0;
  for (int sub : {8, 16, 32}) {
    cfg.subdivisions = sub;
    v[k++] = kontsevich::v2_numeric(knot, unknot, cfg);
  }
  CHECK(std::abs(v[2] - v[1]) <= std::abs(v[1] - v[0]));
  CHECK(std::abs(v[2] - 1.0) < std::abs(v[0] - 1.0));
}

TEST_CASE("small geometric perturbations barely move the value") {
  QuadratureConfig cfg;
  cfg.subdivisions = 12;
  auto unknot = kontsevich::matched_unknot_embedding();
  double base = kontsevich::v2_numeric(kontsevich::trefoil_embedding(), unknot, cfg);
  double moved = kontsevich::v2_numeric(jittered(kontsevich::trefoil_embedding(), 2e-3, 99),
                                        jittered(unknot, 2e-3, 100), cfg);
  CHECK(std::abs(base - moved) < 0.05);
}

TEST_CASE("results are reproducible at a fixed thread count") {
  auto knot = kontsevich::trefoil_embedding();
  auto unknot = kontsevich::matched_unknot_embedding();
  QuadratureConfig one, four;
  one.subdivisions = four.subdivisions = 12;
  one.threads = 1;
  four.threads = 4;
  double a1 = kontsevich::v2_numeric(knot, unknot, one);
  double a2 = kontsevich::v2_numeric(knot, unknot, one);
  double b1 = kontsevich::v2_numeric(knot, unknot, four);
  double b2 = kontsevich::v2_numeric(knot, unknot, four);
  CHECK(a1 == a2);  // bit-for-bit at the same worker count
  CHECK(b1 == b2);
  CHECK(std::abs(a1 - b1) < 1e-9);  // partition only reorders the summation
}

TEST_CASE("weighted expansion") {
  QuadratureConfig cfg;
  cfg.subdivisions = 16;
  auto su2 = lieweights::su2_fundamental();

  auto circle = kontsevich::weighted_expansion(kontsevich::planar_circle(), su2, 2, cfg);
  REQUIRE(circle.size() == 2);
  CHECK(circle[0].order == 1);
  CHECK(std::abs(circle[0].value) < 0.03);

  lieweights::LieAlgebraRep null_rep;
  null_rep.name = "null";
  null_rep.dim_rep = 2;
  null_rep.generators.push_back(Matrix(2, 2));
  auto dead = kontsevich::weighted_expansion(kontsevich::trefoil_embedding(), null_rep, 2, cfg);
  for (const auto& term : dead) CHECK(term.value == 0.0);

  auto coarse = kontsevich::weighted_expansion(kontsevich::trefoil_embedding(), su2, 2, cfg);
  cfg.subdivisions = 32;
  auto fine = kontsevich::weighted_expansion(kontsevich::trefoil_embedding(), su2, 2, cfg);
  REQUIRE(coarse.size() == 2);
  REQUIRE(fine.size() == 2);
  for (int k = 0; k < 2; ++k) CHECK(std::abs(coarse[k].value - fine[k].value) < 0.02);

  CHECK_THROWS_AS(kontsevich::weighted_expansion(kontsevich::planar_circle(), su2, 3, cfg),
                  std::invalid_argument);
}

TEST_CASE("projection of the shipped embeddings gives the advertised knots") {
  auto code_of = [](const knotio::MorseEmbedding& e) {
    return testsupport::gauss_from_embedding(e);
  };
  CHECK(vassiliev::conway(code_of(kontsevich::trefoil_embedding())).to_string() == "1 + z^2");
  CHECK(vassiliev::conway(code_of(kontsevich::figure_eight_embedding())).to_string() ==
        "1 - z^2");
  CHECK(vassiliev::conway(code_of(kontsevich::matched_unknot_embedding())).to_string() == "1");
  CHECK(vassiliev::conway(code_of(kontsevich::planar_circle())).to_string() == "1");
}

TEST_CASE("shipped data files reproduce the builders") {
  auto same = [](const knotio::MorseEmbedding& a, const knotio::MorseEmbedding& b) {
    REQUIRE(a.size() == b.size());
    for (int k = 0; k < a.size(); ++k) {
      CHECK(std::abs(a.vertices[k].z - b.vertices[k].z) < 1e-12);
      CHECK(std::abs(a.vertices[k].t - b.vertices[k].t) < 1e-12);
    }
  };
  std::string dir = DATA_DIR;
  same(knotio::morse_from_json(slurp(dir + "/trefoil.json")), kontsevich::trefoil_embedding());
  same(knotio::morse_from_json(slurp(dir + "/matched_unknot.json")),
       kontsevich::matched_unknot_embedding());
  same(knotio::morse_from_json(slurp(dir + "/figure_eight.json")),
       kontsevich::figure_eight_embedding());
  same(knotio::morse_from_json(slurp(dir + "/planar_circle.json")),
       kontsevich::planar_circle());
}
