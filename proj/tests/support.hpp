#pragma once

// Test-side oracle: recover a Gauss code from a Morse embedding by projecting
// out the imaginary axis. Independent of the quadrature code, so embeddings
// and invariants can cross-check each other.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "knotcalc/knotio.hpp"

namespace testsupport {

struct PlanarPoint {
  double x, y;
};

inline double cross2(PlanarPoint a, PlanarPoint b) { return a.x * b.y - a.y * b.x; }

// Projects the closed polyline to the (Re z, t) plane, intersects all
// non-adjacent segment pairs, and reads over/under from Im z. Throws on
// degenerate projections (parallel overlaps, intersections at vertices,
// equal Im at a crossing).
inline knotcalc::knotio::GaussCode gauss_from_embedding(const knotcalc::knotio::MorseEmbedding& e) {
  using knotcalc::knotio::GaussEntry;
  using knotcalc::knotio::Pass;
  int n = e.size();
  auto pt = [&](int k) {
    const auto& v = e.at(k);
    return PlanarPoint{v.z.real(), v.t};
  };
  auto im = [&](int k) { return e.at(k).z.imag(); };

  struct Event {
    double param;   // position along the segment
    int crossing;   // crossing id
    bool over;
    int sign;
  };
  std::vector<std::vector<Event>> events(n);
  int crossing_id = 0;
  const double eps = 1e-9;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      if (l == k + 1 || (k == 0 && l == n - 1)) continue;  // adjacent segments
      PlanarPoint a = pt(k), b = pt(k + 1), c = pt(l), d = pt(l + 1);
      PlanarPoint ab{b.x - a.x, b.y - a.y}, cd{d.x - c.x, d.y - c.y};
      double denom = cross2(ab, cd);
      PlanarPoint ac{c.x - a.x, c.y - a.y};
      auto where = [&] {
        return " between segments " + std::to_string(k) + " [(" + std::to_string(a.x) + "," +
               std::to_string(a.y) + ")-(" + std::to_string(b.x) + "," + std::to_string(b.y) +
               ")] and " + std::to_string(l) + " [(" + std::to_string(c.x) + "," +
               std::to_string(c.y) + ")-(" + std::to_string(d.x) + "," + std::to_string(d.y) +
               ")]";
      };
      if (std::abs(denom) < 1e-12) {
        if (std::abs(cross2(ab, ac)) >= 1e-12) continue;  // parallel, different lines
        // same line: degenerate only if the segments overlap with positive length
        double len2 = ab.x * ab.x + ab.y * ab.y;
        double pc = (ac.x * ab.x + ac.y * ab.y) / len2;
        double pd_ = ((d.x - a.x) * ab.x + (d.y - a.y) * ab.y) / len2;
        if (std::max(std::min(pc, pd_), 0.0) < std::min(std::max(pc, pd_), 1.0) - eps)
          throw std::runtime_error("overlapping collinear segments" + where());
        continue;
      }
      double s = cross2(ac, cd) / denom;
      double u = cross2(ac, ab) / denom;
      if (s < -eps || s > 1 + eps || u < -eps || u > 1 + eps) continue;
      if (s < eps || s > 1 - eps || u < eps || u > 1 - eps) {
        // touching at a shared endpoint is fine; piercing a vertex is not
        if ((s < eps || s > 1 - eps) && (u < eps || u > 1 - eps)) continue;
        throw std::runtime_error("projection crossing at a vertex" + where());
      }
      double im_k = im(k) + s * (im(k + 1) - im(k));
      double im_l = im(l) + u * (im(l + 1) - im(l));
      if (std::abs(im_k - im_l) < 1e-9) throw std::runtime_error("strands meet in space");
      bool k_over = im_k > im_l;
      PlanarPoint over_dir = k_over ? ab : cd, under_dir = k_over ? cd : ab;
      int sign = cross2(over_dir, under_dir) > 0 ? +1 : -1;
      events[k].push_back({s, crossing_id, k_over, sign});
      events[l].push_back({u, crossing_id, !k_over, sign});
      ++crossing_id;
    }
  }

  knotcalc::knotio::GaussCode code;
  std::map<int, int> label_of;
  for (int k = 0; k < n; ++k) {
    std::sort(events[k].begin(), events[k].end(),
              [](const Event& a, const Event& b) { return a.param < b.param; });
    for (const auto& ev : events[k]) {
      auto [it, fresh] = label_of.emplace(ev.crossing, (int)label_of.size() + 1);
      (void)fresh;
      GaussEntry entry;
      entry.label = it->second;
      entry.sign = ev.sign;
      // tags record the positive-sign resolution of the shadow
      entry.pass = (ev.over == (ev.sign > 0)) ? Pass::Over : Pass::Under;
      code.entries.push_back(entry);
    }
  }
  return code;
}

}  // namespace testsupport
