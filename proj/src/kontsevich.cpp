#include "knotcalc/kontsevich.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace knotcalc {
namespace kontsevich {

namespace {

constexpr double kPi = std::numbers::pi;

double absolute_margin(const std::vector<knotio::CriticalPoint>& crit, double fraction) {
  if (fraction <= 0 || fraction >= 0.5)
    throw std::invalid_argument("critical margin must lie strictly between 0 and 1/2");
  double min_gap = crit[1].t - crit[0].t;
  for (size_t k = 2; k < crit.size(); ++k) min_gap = std::min(min_gap, crit[k].t - crit[k - 1].t);
  return fraction * min_gap;
}

std::vector<Strand> strands_at_impl(const knotio::MorseEmbedding& e, double t) {
  std::vector<Strand> out;
  int n = e.size();
  for (int k = 0; k < n; ++k) {
    const auto& v1 = e.at(k);
    const auto& v2 = e.at(k + 1);
    double lo = std::min(v1.t, v2.t), hi = std::max(v1.t, v2.t);
    if (!(lo <= t && t < hi)) continue;  // half-open: each level crossing counted once
    double s = (t - v1.t) / (v2.t - v1.t);
    Strand st;
    st.z = v1.z + s * (v2.z - v1.z);
    st.dz_dt = (v2.z - v1.z) / (v2.t - v1.t);
    st.downward = v2.t < v1.t;
    st.loop_param = k + s;
    out.push_back(st);
  }
  return out;
}

// One quadrature cell of a monotone strip, in graded coordinates. The map
// s(u) = u - sin(2 pi u)/(2 pi) has vanishing derivative at the strip ends,
// which tames the d log singularities next to the critical levels.
struct Cell {
  double t_mid, w_mid;  // midpoint node and its full weight
  double t_lo, w_lo;    // quarter-offset nodes used for the simplex diagonal
  double t_hi, w_hi;    // (w_lo, w_hi carry the Jacobian but not the u-width)
  double u_width;
};

// Integration strips split at every distinct vertex height, so each strip
// integrand is smooth; the margin is applied only at critical heights.
std::vector<std::pair<double, double>> strips(const knotio::MorseEmbedding& e,
                                              const std::vector<knotio::CriticalPoint>& crit,
                                              double margin_abs) {
  std::vector<double> breaks;
  for (const auto& v : e.vertices) breaks.push_back(v.t);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return b - a < 1e-9; }),
               breaks.end());
  // Clip each strip against the excluded zone around every critical height.
  // A zone is centered on a break, so it can only eat into a strip from one
  // end, but it may swallow thin strips (e.g. polygon facets near an
  // extremum) entirely.
  std::vector<std::pair<double, double>> out;
  for (size_t j = 0; j + 1 < breaks.size(); ++j) {
    double a = breaks[j], b = breaks[j + 1];
    for (const auto& c : crit) {
      double lo = c.t - margin_abs, hi = c.t + margin_abs;
      if (hi <= a || lo >= b) continue;
      if (lo <= a)
        a = hi;
      else
        b = lo;
    }
    if (a < b) out.push_back({a, b});
  }
  if (out.empty()) throw std::invalid_argument("critical margin too large for this embedding");
  return out;
}

std::vector<Cell> build_cells(const std::vector<std::pair<double, double>>& intervals,
                              const QuadratureConfig& cfg) {
  if (cfg.subdivisions < 1) throw std::invalid_argument("subdivisions must be positive");
  auto graded = [](double u) { return u - std::sin(2 * kPi * u) / (2 * kPi); };
  auto graded_d = [](double u) { return 1.0 - std::cos(2 * kPi * u); };
  std::vector<Cell> cells;
  int n = cfg.subdivisions;
  double h = 1.0 / n;
  for (auto [a, b] : intervals) {
    double len = b - a;
    for (int k = 0; k < n; ++k) {
      double um = (k + 0.5) * h;
      Cell c;
      c.u_width = h;
      if (cfg.scheme == QuadratureConfig::Scheme::Trapezoid) {
        // evaluate at cell ends instead of the midpoint; average below
        double u0 = k * h, u1 = (k + 1) * h;
        c.t_mid = a + len * graded(um);
        c.w_mid = len * 0.5 * (graded_d(u0) + graded_d(u1)) * h;
      } else {
        c.t_mid = a + len * graded(um);
        c.w_mid = len * graded_d(um) * h;
      }
      double ul = um - 0.25 * h, uh = um + 0.25 * h;
      c.t_lo = a + len * graded(ul);
      c.w_lo = len * graded_d(ul);
      c.t_hi = a + len * graded(uh);
      c.w_hi = len * graded_d(uh);
      cells.push_back(c);
    }
  }
  return cells;
}

// A level pairing: the d log factor for one unordered pair of strands,
// with the loop positions of its two endpoints and the downward sign.
struct LevelPair {
  std::complex<double> factor;
  double lp_a, lp_b;
  int sign;
};

std::vector<LevelPair> level_pairs(const std::vector<Strand>& strands) {
  std::vector<LevelPair> out;
  for (size_t i = 0; i < strands.size(); ++i)
    for (size_t j = i + 1; j < strands.size(); ++j) {
      LevelPair p;
      p.factor = (strands[i].dz_dt - strands[j].dz_dt) / (strands[i].z - strands[j].z);
      p.lp_a = strands[i].loop_param;
      p.lp_b = strands[j].loop_param;
      p.sign = ((strands[i].downward ? 1 : 0) + (strands[j].downward ? 1 : 0)) % 2 ? -1 : 1;
      out.push_back(p);
    }
  return out;
}

// Circular-order chord diagram of two level pairings (four distinct loop
// positions).
chords::ChordDiagram trace_diagram(const LevelPair& p, const LevelPair& q) {
  std::array<double, 4> lp = {p.lp_a, p.lp_b, q.lp_a, q.lp_b};
  std::array<int, 4> idx = {0, 1, 2, 3};
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lp[a] < lp[b]; });
  std::array<int, 4> pos{};  // pos[original endpoint] = circle position
  for (int k = 0; k < 4; ++k) pos[idx[k]] = k;
  std::vector<std::pair<int, int>> ch = {{std::min(pos[0], pos[1]), std::max(pos[0], pos[1])},
                                         {std::min(pos[2], pos[3]), std::max(pos[2], pos[3])}};
  return chords::canonical_form(chords::ChordDiagram(ch));
}

CoefficientResult order_one(const knotio::MorseEmbedding& e, const std::vector<Cell>& cells) {
  std::complex<double> total = 0;
  for (const auto& c : cells) {
    auto pairs = level_pairs(strands_at_impl(e, c.t_mid));
    std::complex<double> level = 0;
    for (const auto& p : pairs) level += double(p.sign) * p.factor;
    total += c.w_mid * level;
  }
  total /= std::complex<double>(0, 2 * kPi);
  return {total.real(), std::abs(total.imag())};
}

CoefficientResult order_two(const knotio::MorseEmbedding& e, const chords::ChordDiagram& target,
                            const std::vector<Cell>& cells, int threads) {
  size_t n = cells.size();
  std::vector<std::vector<LevelPair>> mid(n), lo(n), hi(n);
  for (size_t c = 0; c < n; ++c) {
    mid[c] = level_pairs(strands_at_impl(e, cells[c].t_mid));
    lo[c] = level_pairs(strands_at_impl(e, cells[c].t_lo));
    hi[c] = level_pairs(strands_at_impl(e, cells[c].t_hi));
  }
  auto combine = [&](const std::vector<LevelPair>& low, const std::vector<LevelPair>& high) {
    std::complex<double> acc = 0;
    for (const auto& p : low)
      for (const auto& q : high)
        if (trace_diagram(p, q) == target) acc += double(p.sign * q.sign) * p.factor * q.factor;
    return acc;
  };
  int nthreads = std::max(1, threads);
  std::vector<std::complex<double>> partial(nthreads, 0.0);
  auto work = [&](int tid) {
    std::complex<double> acc = 0;
    for (size_t c1 = tid; c1 < n; c1 += nthreads) {
      // strict simplex part: lower node in cell c1, upper node above it
      for (size_t c2 = c1 + 1; c2 < n; ++c2)
        acc += cells[c1].w_mid * cells[c2].w_mid * combine(mid[c1], mid[c2]);
      // diagonal: half cell, quarter-offset nodes
      double w = 0.5 * cells[c1].u_width * cells[c1].u_width * cells[c1].w_lo * cells[c1].w_hi;
      acc += w * combine(lo[c1], hi[c1]);
    }
    partial[tid] = acc;
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }
  std::complex<double> total = 0;
  for (const auto& p : partial) total += p;
  total /= -4 * kPi * kPi;  // (2 pi i)^2
  return {total.real(), std::abs(total.imag())};
}

}  // namespace

std::vector<Strand> strands_at(const knotio::MorseEmbedding& e, double t, double critical_margin) {
  auto crit = knotio::morse_validate(e);
  double margin_abs = absolute_margin(crit, critical_margin);
  for (const auto& c : crit)
    if (std::abs(t - c.t) < margin_abs)
      throw std::invalid_argument("level is inside the margin of a critical height");
  return strands_at_impl(e, t);
}

CoefficientResult raw_coefficient(const knotio::MorseEmbedding& e, const chords::ChordDiagram& d,
                                  const QuadratureConfig& cfg) {
  auto crit = knotio::morse_validate(e);
  double margin_abs = absolute_margin(crit, cfg.critical_margin);
  auto cells = build_cells(strips(e, crit, margin_abs), cfg);
  if (d.order() == 1) return order_one(e, cells);
  if (d.order() == 2) return order_two(e, chords::canonical_form(d), cells, cfg.threads);
  throw std::invalid_argument("only orders 1 and 2 are implemented");
}

double v2_numeric(const knotio::MorseEmbedding& knot, const knotio::MorseEmbedding& unknot,
                  const QuadratureConfig& cfg) {
  auto count_maxima = [](const knotio::MorseEmbedding& e) {
    int n = 0;
    for (const auto& c : knotio::morse_validate(e)) n += c.is_max ? 1 : 0;
    return n;
  };
  if (count_maxima(knot) != count_maxima(unknot))
    throw std::invalid_argument("reference unknot must have the same number of maxima");
  auto d = chords::crossed_pair();
  return raw_coefficient(knot, d, cfg).value - raw_coefficient(unknot, d, cfg).value;
}

std::vector<ExpansionTerm> weighted_expansion(const knotio::MorseEmbedding& e,
                                              const lieweights::LieAlgebraRep& rep, int m_max,
                                              const QuadratureConfig& cfg) {
  if (m_max < 1 || m_max > 2)
    throw std::invalid_argument("expansion order must be 1 or 2");
  std::vector<ExpansionTerm> out;
  for (int m = 1; m <= m_max; ++m) {
    ExpansionTerm term;
    term.order = m;
    for (const auto& d : chords::enumerate_diagrams(m)) {
      auto c = raw_coefficient(e, d, cfg);
      double w = lieweights::weight(d, rep).convert_to<double>();
      term.value += c.value * w;
      term.imag_residual += c.imag_residual * std::abs(w);
    }
    out.push_back(term);
  }
  return out;
}

}  // namespace kontsevich
}  // namespace knotcalc
