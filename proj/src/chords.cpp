#include "knotcalc/chords.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace knotcalc {
namespace chords {

ChordDiagram::ChordDiagram(std::vector<std::pair<int, int>> chords) {
  int n = static_cast<int>(chords.size()) * 2;
  std::vector<bool> seen(n, false);
  for (auto& [a, b] : chords) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b)
      throw std::invalid_argument("chord diagram: positions must form a matching on 0..2m-1");
    if (seen[a] || seen[b])
      throw std::invalid_argument("chord diagram: position used twice");
    seen[a] = seen[b] = true;
  }
  std::sort(chords.begin(), chords.end());
  chords_ = std::move(chords);
}

int ChordDiagram::partner(int position) const {
  for (const auto& [a, b] : chords_) {
    if (a == position) return b;
    if (b == position) return a;
  }
  throw std::out_of_range("chord diagram: no such position");
}

ChordDiagram ChordDiagram::rotated(int shift) const {
  int n = 2 * order();
  if (n == 0) return *this;
  std::vector<std::pair<int, int>> out;
  out.reserve(chords_.size());
  for (const auto& [a, b] : chords_)
    out.emplace_back((a + shift) % n, (b + shift) % n);
  return ChordDiagram(std::move(out));
}

std::string ChordDiagram::to_string() const {
  std::ostringstream os;
  os << order() << ":";
  bool first = true;
  for (const auto& [a, b] : chords_) {
    os << (first ? " (" : "(") << a << "," << b << ")";
    first = false;
  }
  return os.str();
}

ChordDiagram ChordDiagram::from_string(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("chord diagram parse error: missing ':'");
  int m = std::stoi(text.substr(0, colon));
  std::vector<std::pair<int, int>> chords;
  size_t i = colon + 1;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    if (i >= text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("chord diagram parse error: expected '('");
    size_t comma = text.find(',', i);
    size_t close = text.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("chord diagram parse error: malformed pair");
    int a = std::stoi(text.substr(i + 1, comma - i - 1));
    int b = std::stoi(text.substr(comma + 1, close - comma - 1));
    chords.emplace_back(a, b);
    i = close + 1;
  }
  if (static_cast<int>(chords.size()) != m)
    throw std::invalid_argument("chord diagram parse error: order does not match chord count");
  return ChordDiagram(std::move(chords));
}

ChordDiagram canonical_form(const ChordDiagram& d) {
  int n = 2 * d.order();
  if (n == 0) return d;
  ChordDiagram best = d;
  for (int shift = 1; shift < n; ++shift) {
    ChordDiagram r = d.rotated(shift);
    if (r < best) best = r;
  }
  return best;
}

namespace {

void enumerate_matchings(std::vector<int>& partner, int n,
                         std::vector<std::pair<int, int>>& current,
                         const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (partner[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    emit(current);
    return;
  }
  for (int j = first + 1; j < n; ++j) {
    if (partner[j] >= 0) continue;
    partner[first] = j;
    partner[j] = first;
    current.emplace_back(first, j);
    enumerate_matchings(partner, n, current, emit);
    current.pop_back();
    partner[first] = partner[j] = -1;
  }
}

}  // namespace

std::set<ChordDiagram> enumerate_diagrams(int m) {
  if (m < 0) throw std::invalid_argument("enumerate_diagrams: m must be non-negative");
  std::set<ChordDiagram> out;
  if (m == 0) {
    out.insert(ChordDiagram{});
    return out;
  }
  std::vector<int> partner(2 * m, -1);
  std::vector<std::pair<int, int>> current;
  enumerate_matchings(partner, 2 * m, current,
                      [&](const std::vector<std::pair<int, int>>& chords) {
                        out.insert(canonical_form(ChordDiagram(chords)));
                      });
  return out;
}

ChordDiagram chord_diagram_of(const knotio::SingularKnotDiagram& s) {
  std::map<int, std::vector<int>> positions;
  int pos = 0;
  for (const auto& e : s.base.entries) {
    if (s.node_set.count(e.label)) positions[e.label].push_back(pos++);
  }
  std::vector<std::pair<int, int>> chords;
  for (const auto& [label, p] : positions) {
    if (p.size() != 2)
      throw std::invalid_argument("node label " + std::to_string(label) +
                                  " does not appear exactly twice");
    chords.emplace_back(p[0], p[1]);
  }
  return canonical_form(ChordDiagram(std::move(chords)));
}

void DiagramCombination::add(const ChordDiagram& d, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(canonical_form(d), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::string DiagramCombination::to_string() const {
  std::string out;
  for (const auto& [d, c] : terms) {
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) out += rational_to_string(a) + "*";
    out += "[" + d.to_string() + "]";
  }
  return out.empty() ? "0" : out;
}

namespace {

// Inserts a new chord into a diagram of order m-1: one end glued directly
// before or after the shared endpoint, the other in the middle of arc
// `fixed_arc`. Positions are renumbered along the circle.
ChordDiagram insert_chord(const ChordDiagram& d, int shared, bool after, int fixed_arc) {
  int n = 2 * d.order();
  // Build the circle sequence explicitly: tokens are old positions, plus
  // F (fixed end) and M (moving end).
  std::vector<int> seq;  // old position, or -1 = moving end, -2 = fixed end
  for (int p = 0; p < n; ++p) {
    // slot directly before token p
    if (!after && shared == p) seq.push_back(-1);
    seq.push_back(p);
    if (after && shared == p) seq.push_back(-1);
    if (fixed_arc == p) seq.push_back(-2);
  }
  std::vector<int> old_to_new(n, -1);
  int moving_pos = -1, fixed_pos = -1;
  for (size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] == -1) moving_pos = static_cast<int>(k);
    else if (seq[k] == -2) fixed_pos = static_cast<int>(k);
    else old_to_new[seq[k]] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> chords;
  for (const auto& [a, b] : d.chords())
    chords.emplace_back(old_to_new[a], old_to_new[b]);
  chords.emplace_back(moving_pos, fixed_pos);
  return ChordDiagram(std::move(chords));
}

}  // namespace

std::vector<DiagramCombination> four_term_relations(int m) {
  if (m < 2) throw std::invalid_argument("four_term_relations: m must be at least 2");
  std::set<DiagramCombination> seen;
  std::vector<DiagramCombination> out;
  for (const ChordDiagram& d : enumerate_diagrams(m - 1)) {
    int n = 2 * d.order();
    for (const auto& [x1, x2] : d.chords()) {
      for (int arc = 0; arc < n; ++arc) {
        DiagramCombination combo;
        combo.add(canonical_form(insert_chord(d, x1, true, arc)), 1);
        combo.add(canonical_form(insert_chord(d, x1, false, arc)), -1);
        combo.add(canonical_form(insert_chord(d, x2, true, arc)), 1);
        combo.add(canonical_form(insert_chord(d, x2, false, arc)), -1);
        if (combo.empty()) continue;
        // A combination and its negation express the same relation.
        DiagramCombination neg;
        for (const auto& [cd, c] : combo.terms) neg.add(cd, -c);
        if (seen.count(combo) || seen.count(neg)) continue;
        seen.insert(combo);
        out.push_back(std::move(combo));
      }
    }
  }
  return out;
}

bool has_isolated_chord(const ChordDiagram& d) {
  for (const auto& [a, b] : d.chords()) {
    bool crossed = false;
    for (const auto& [c, e] : d.chords()) {
      if (a == c && b == e) continue;
      bool c_in = (c > a && c < b);
      bool e_in = (e > a && e < b);
      if (c_in != e_in) {
        crossed = true;
        break;
      }
    }
    if (!crossed) return true;
  }
  return false;
}

std::set<ChordDiagram> isolated_chord_diagrams(int m) {
  if (m < 1) throw std::invalid_argument("isolated_chord_diagrams: m must be at least 1");
  std::set<ChordDiagram> out;
  for (const ChordDiagram& d : enumerate_diagrams(m))
    if (has_isolated_chord(d)) out.insert(d);
  return out;
}

ChordDiagram crossed_pair() {
  return canonical_form(ChordDiagram({{0, 2}, {1, 3}}));
}

ChordDiagram nested_pair() {
  return canonical_form(ChordDiagram({{0, 3}, {1, 2}}));
}

}  // namespace chords
}  // namespace knotcalc
