#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotcalc/knotio.hpp"
#include "knotcalc/scalar.hpp"

namespace knotcalc {
namespace chords {

// Perfect matching of 2m points on an oriented circle, stored as a sorted
// list of position pairs (a < b). Canonical form is the lexicographically
// least pair list over all rotations of the position labels.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  explicit ChordDiagram(std::vector<std::pair<int, int>> chords);

  int order() const { return static_cast<int>(chords_.size()); }
  const std::vector<std::pair<int, int>>& chords() const { return chords_; }
  // Chord partner of a circle position.
  int partner(int position) const;

  ChordDiagram rotated(int shift) const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.chords_ == b.chords_;
  }
  friend bool operator<(const ChordDiagram& a, const ChordDiagram& b) {
    return a.chords_ < b.chords_;
  }

  std::string to_string() const;  // "m: (a,b)(c,d)..."
  static ChordDiagram from_string(const std::string& text);

 private:
  std::vector<std::pair<int, int>> chords_;
};

ChordDiagram canonical_form(const ChordDiagram& d);

// All order-m diagrams modulo rotation, one canonical representative each.
std::set<ChordDiagram> enumerate_diagrams(int m);

// Chords connect the two circle positions of each node label, in Gauss
// traversal order; ordinary crossings are ignored.
ChordDiagram chord_diagram_of(const knotio::SingularKnotDiagram& s);

// Formal rational combination of canonical diagrams; zero coefficients are
// never stored.
struct DiagramCombination {
  std::map<ChordDiagram, Rational> terms;

  void add(const ChordDiagram& d, const Rational& coeff);
  bool empty() const { return terms.empty(); }
  friend bool operator==(const DiagramCombination&, const DiagramCombination&) = default;
  friend bool operator<(const DiagramCombination& a, const DiagramCombination& b) {
    return a.terms < b.terms;
  }
  std::string to_string() const;
};

// All four-term relations at order m: one end of a new chord slides past the
// two endpoints of an existing chord, with signs +1,-1,+1,-1 over the four
// placements. Combinations are canonicalized and deduplicated; fully
// cancelling combinations are dropped.
std::vector<DiagramCombination> four_term_relations(int m);

// Diagrams of order m containing at least one chord crossed by no other.
std::set<ChordDiagram> isolated_chord_diagrams(int m);
bool has_isolated_chord(const ChordDiagram& d);

// The order-2 diagrams by name.
ChordDiagram crossed_pair();  // chords interleave
ChordDiagram nested_pair();   // chords disjoint

}  // namespace chords
}  // namespace knotcalc
