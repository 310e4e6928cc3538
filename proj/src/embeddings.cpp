#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "knotcalc/kontsevich.hpp"

namespace knotcalc {
namespace kontsevich {

namespace {

using knotio::MorseEmbedding;
using knotio::MorseVertex;
using std::complex;

void push(std::vector<MorseVertex>& out, const MorseVertex& v) {
  if (!out.empty() && std::abs(out.back().z - v.z) < 1e-9 && std::abs(out.back().t - v.t) < 1e-9)
    return;
  out.push_back(v);
}

}  // namespace

MorseEmbedding planar_circle(int segments) {
  if (segments < 4) throw std::invalid_argument("need at least 4 segments");
  MorseEmbedding e;
  for (int k = 0; k < segments; ++k) {
    double th = 2 * std::numbers::pi * k / segments + 0.3;  // offset keeps heights distinct
    e.vertices.push_back({complex<double>(std::sin(th), 0.0), 0.5 + 0.45 * std::cos(th)});
  }
  return e;
}

// Plat closure over four vertical rails at Re z = 0..3. Bottom cups join
// rails (0,1) and (2,3), staggered so every critical height is distinct;
// top caps likewise. Each braid letter swaps two adjacent rails across one
// time slice: the left-to-right arc detours in Im z (sign of the letter
// picks the side), the other arc runs straight, so the two projections to
// the (Re z, t) plane cross transversally away from any vertex.
MorseEmbedding plat_embedding(const std::vector<std::pair<int, int>>& word) {
  const double t_lo = 0.15, t_hi = 0.85;
  const int k = static_cast<int>(word.size());
  if (k == 0) throw std::invalid_argument("empty braid word");

  std::array<std::vector<MorseVertex>, 4> path;  // indexed by starting rail
  std::array<int, 4> occupant = {0, 1, 2, 3};    // occupant[rail] = strand
  for (int i = 0; i < 4; ++i) path[i].push_back({complex<double>(i, 0), t_lo});

  for (int e = 0; e < k; ++e) {
    auto [p, s] = word[e];
    if (p < 0 || p > 2 || (s != 1 && s != -1)) throw std::invalid_argument("bad braid letter");
    double ta = t_lo + (t_hi - t_lo) * e / k;
    double tb = t_lo + (t_hi - t_lo) * (e + 1) / k;
    double tm = 0.5 * (ta + tb);
    int a = occupant[p], b = occupant[p + 1];
    push(path[a], {complex<double>(p, 0), ta});
    push(path[a], {complex<double>(p + 0.57, s * 0.3), tm});
    push(path[a], {complex<double>(p + 1, 0), tb});
    push(path[b], {complex<double>(p + 1, 0), ta});
    push(path[b], {complex<double>(p + 0.5, 0), tm});
    push(path[b], {complex<double>(p, 0), tb});
    std::swap(occupant[p], occupant[p + 1]);
  }
  std::array<int, 4> end_rail{};  // end_rail[strand] = top rail
  for (int r = 0; r < 4; ++r) {
    push(path[occupant[r]], {complex<double>(r, 0), t_hi});
    end_rail[occupant[r]] = r;
  }

  // cup/cap extrema, one per rail pair, all at distinct heights
  // tight stagger keeps the minimal critical gap (and with it the absolute
  // margin cut) small, which keeps the excluded-mass bias below tolerance
  auto cup_vertex = [](int pair) {
    return MorseVertex{complex<double>(2 * pair + 0.5, 0), pair == 0 ? 0.0 : 0.03};
  };
  auto cap_vertex = [](int pair) {
    return MorseVertex{complex<double>(2 * pair + 0.5, 0), pair == 0 ? 1.0 : 0.97};
  };

  // walk the closure: up a strand, across a cap, down the strand ending at
  // the partner rail, across a cup, repeat
  MorseEmbedding out;
  std::array<bool, 4> used{};
  int rail = 0;
  do {
    int strand = -1;
    for (int i = 0; i < 4; ++i)
      if (!used[i] && path[i].front().z == complex<double>(rail, 0)) strand = i;
    if (strand < 0) throw std::invalid_argument("plat closure is not a single knot");
    used[strand] = true;
    for (const auto& v : path[strand]) push(out.vertices, v);
    int top = end_rail[strand];
    push(out.vertices, cap_vertex(top / 2));
    int partner_top = top ^ 1;
    int down = -1;
    for (int i = 0; i < 4; ++i)
      if (!used[i] && end_rail[i] == partner_top) down = i;
    if (down < 0) throw std::invalid_argument("plat closure is not a single knot");
    used[down] = true;
    for (auto it = path[down].rbegin(); it != path[down].rend(); ++it) push(out.vertices, *it);
    int bottom = static_cast<int>(path[down].front().z.real());
    push(out.vertices, cup_vertex(bottom / 2));
    rail = bottom ^ 1;
  } while (rail != 0);
  for (bool u : used)
    if (!u) throw std::invalid_argument("plat closure is not a single knot");
  return out;
}

MorseEmbedding trefoil_embedding() { return plat_embedding({{1, 1}, {1, 1}, {1, 1}}); }

MorseEmbedding matched_unknot_embedding() { return plat_embedding({{1, 1}}); }

MorseEmbedding figure_eight_embedding() {
  return plat_embedding({{1, 1}, {1, 1}, {0, -1}, {1, 1}});
}

}  // namespace kontsevich
}  // namespace knotcalc
