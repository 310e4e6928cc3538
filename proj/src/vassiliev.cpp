#include "knotcalc/vassiliev.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace knotcalc {
namespace vassiliev {

using knotio::GaussCode;
using knotio::GaussEntry;
using knotio::Link;
using knotio::Pass;
using knotio::SingularKnotDiagram;

namespace {

// A pass is effectively on top when its tag and sign agree: the O/U tags
// record the over/under assignment of the positive-sign version of the
// crossing, so flipping the sign alone is a genuine crossing switch on a
// fixed shadow.
bool effectively_over(const GaussEntry& e) {
  return (e.pass == Pass::Over) == (e.sign > 0);
}

// Removes labels whose two occurrences are cyclically adjacent within one
// component (first Reidemeister move); repeats until none remain.
Link remove_curls(Link link) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& comp : link) {
      auto& es = comp.entries;
      int n = static_cast<int>(es.size());
      for (int i = 0; i < n && !changed; ++i) {
        int j = (i + 1) % n;
        if (n >= 2 && es[i].label == es[j].label) {
          if (j > i)
            es.erase(es.begin() + i, es.begin() + i + 2);
          else {
            es.pop_back();
            es.erase(es.begin());
          }
          changed = true;
        }
      }
    }
  }
  return link;
}

bool is_split(const Link& link) {
  int n = static_cast<int>(link.size());
  if (n <= 1) return false;
  // Union components sharing a crossing label; a diagram that falls apart is
  // a split link.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<int, int> owner;
  for (int c = 0; c < n; ++c)
    for (const auto& e : link[c].entries) {
      auto [it, inserted] = owner.emplace(e.label, c);
      if (!inserted) parent[find(it->second)] = find(c);
    }
  int root = find(0);
  for (int c = 1; c < n; ++c)
    if (find(c) != root) return true;
  return false;
}

// First label (in traversal order over components in sequence) whose first
// encounter is not effectively over, or 0 if the diagram is descending.
int first_ascending_label(const Link& link) {
  std::set<int> seen;
  for (const auto& comp : link)
    for (const auto& e : comp.entries) {
      if (seen.count(e.label)) continue;
      seen.insert(e.label);
      if (!effectively_over(e)) return e.label;
    }
  return 0;
}

RatPoly conway_impl(const Link& input, int depth, int max_depth) {
  if (depth > max_depth)
    throw std::runtime_error("conway: skein recursion depth exceeded");
  Link link = remove_curls(input);
  // Crossingless components are split unknots.
  int empty_components = 0;
  Link busy;
  for (auto& comp : link) {
    if (comp.entries.empty())
      ++empty_components;
    else
      busy.push_back(std::move(comp));
  }
  if (busy.empty())
    return (empty_components == 1) ? RatPoly(1) : RatPoly(0);
  if (empty_components > 0) return RatPoly(0);  // split off a round unknot
  if (is_split(busy)) return RatPoly(0);
  int label = first_ascending_label(busy);
  if (label == 0) {
    // Descending diagram: an unlink.
    return (busy.size() == 1) ? RatPoly(1) : RatPoly(0);
  }
  int sign = 0;
  for (const auto& comp : busy)
    for (const auto& e : comp.entries)
      if (e.label == label) sign = e.sign;
  Link switched = knotio::switch_crossing(busy, label);
  Link smoothed = knotio::smooth_crossing(busy, label);
  RatPoly z = RatPoly::monomial(1);
  RatPoly rest = conway_impl(switched, depth + 1, max_depth);
  RatPoly smooth_part = z * conway_impl(smoothed, depth + 1, max_depth);
  return (sign > 0) ? rest + smooth_part : rest - smooth_part;
}

}  // namespace

RatPoly conway(const Link& link, int max_depth) {
  knotio::validate(link);
  return conway_impl(link, 0, max_depth);
}

RatPoly conway(const GaussCode& code, int max_depth) { return conway(Link{code}, max_depth); }

BaseInvariant conway_invariant() {
  return {"conway", [](const Link& link) { return conway(link); }};
}

Rational v2(const GaussCode& code) {
  return conway(code).coeff(2);
}

BaseInvariant v2_invariant() {
  return {"v2", [](const Link& link) { return RatPoly(conway(link).coeff(2)); }};
}

namespace {

// Resolves one node to a crossing of the given sign (the shadow fixes the
// over/under tags) and drops it from the node set.
SingularKnotDiagram resolve_to_sign(const SingularKnotDiagram& s, int label, int sign) {
  SingularKnotDiagram out = s;
  out.node_set.erase(label);
  for (auto& e : out.base.entries)
    if (e.label == label) e.sign = sign;
  return out;
}

// Resolves one node to the oriented smoothing. The smoothing may split the
// diagram into a link, so remaining nodes are resolved first by the callers.
Link resolve_to_smoothing(const Link& link, int label) {
  return knotio::smooth_crossing(link, label);
}

}  // namespace

RatPoly extend_to_graph(const BaseInvariant& V, const GraphExtensionConfig& cfg,
                        const SingularKnotDiagram& G, int node_bound) {
  if (G.node_count() > node_bound)
    throw std::invalid_argument("extend_to_graph: node count " +
                                std::to_string(G.node_count()) + " exceeds bound " +
                                std::to_string(node_bound));
  std::vector<int> nodes(G.node_set.begin(), G.node_set.end());
  int g = static_cast<int>(nodes.size());
  RatPoly total;
  std::vector<int> choice(g, 0);  // 0: +, 1: -, 2: smoothing
  while (true) {
    // Fix signs first on the single-component base, then smooth.
    SingularKnotDiagram resolved = G;
    for (int k = 0; k < g; ++k)
      if (choice[k] != 2) resolved = resolve_to_sign(resolved, nodes[k], choice[k] == 0 ? +1 : -1);
    Link link{resolved.base};
    RatPoly coeff = 1;
    for (int k = 0; k < g; ++k) {
      switch (choice[k]) {
        case 0: coeff = coeff * cfg.a; break;
        case 1: coeff = coeff * cfg.b; break;
        case 2:
          coeff = coeff * cfg.c;
          if (!coeff.is_zero()) link = resolve_to_smoothing(link, nodes[k]);
          break;
      }
    }
    if (!coeff.is_zero()) total += coeff * V.evaluate(link);
    int k = g - 1;
    while (k >= 0 && choice[k] == 2) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return total;
}

namespace {

RatPoly vassiliev_extend_impl(const BaseInvariant& V, const SingularKnotDiagram& s) {
  if (s.node_set.empty()) return V.evaluate(Link{s.base});
  int label = *s.node_set.begin();
  return vassiliev_extend_impl(V, resolve_to_sign(s, label, +1)) -
         vassiliev_extend_impl(V, resolve_to_sign(s, label, -1));
}

}  // namespace

RatPoly vassiliev_extend(const BaseInvariant& V, const SingularKnotDiagram& s, int node_bound) {
  if (s.node_count() > node_bound)
    throw std::invalid_argument("vassiliev_extend: node count exceeds bound");
  return vassiliev_extend_impl(V, s);
}

SingularKnotDiagram realize(const chords::ChordDiagram& d, int variant) {
  int m = d.order();
  // Walk the circle; each chord becomes a node label visited at its two
  // positions, first pass tagged over.
  std::vector<int> label_at(2 * m, 0);
  for (int c = 0; c < m; ++c) {
    label_at[d.chords()[c].first] = c + 1;
    label_at[d.chords()[c].second] = c + 1;
  }
  SingularKnotDiagram s;
  std::set<int> started;
  for (int p = 0; p < 2 * m; ++p) {
    int label = label_at[p];
    bool first = started.insert(label).second;
    s.base.entries.push_back({label, first ? Pass::Over : Pass::Under, +1});
  }
  for (int c = 1; c <= m; ++c) s.node_set.insert(c);
  if (variant != 0) {
    // A different embedding of the same graph: rotate the basepoint and add
    // a positive curl of ordinary crossings.
    if (!s.base.entries.empty())
      std::rotate(s.base.entries.begin(), s.base.entries.begin() + 1, s.base.entries.end());
    int curl = m + 1;
    s.base.entries.push_back({curl, Pass::Over, +1});
    s.base.entries.push_back({curl, Pass::Under, +1});
  }
  return s;
}

RatPoly symbol(const BaseInvariant& V, int k, const chords::ChordDiagram& d) {
  if (d.order() != k)
    throw std::invalid_argument("symbol: diagram order does not match invariant type");
  return vassiliev_extend(V, realize(d));
}

}  // namespace vassiliev
}  // namespace knotcalc
