#pragma once

#include <array>
#include <complex>
#include <set>
#include <string>
#include <vector>

namespace knotcalc {
namespace knotio {

enum class Pass { Over, Under };

struct GaussEntry {
  int label = 0;
  Pass pass = Pass::Over;
  int sign = +1;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

// One component of a knot or link as a cyclic sequence of crossing passes.
// Each label appears exactly twice in a diagram, once over and once under,
// with the same sign at both occurrences.
struct GaussCode {
  std::vector<GaussEntry> entries;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Link diagram: components sharing one crossing-label namespace.
using Link = std::vector<GaussCode>;

struct PDCode {
  std::vector<std::array<int, 4>> crossings;
};

// Knot diagram with a subset of crossings welded into rigid 4-valent nodes.
struct SingularKnotDiagram {
  GaussCode base;
  std::set<int> node_set;
  int node_count() const { return static_cast<int>(node_set.size()); }
};

struct MorseVertex {
  std::complex<double> z;
  double t = 0;
};

// Closed polyline knot in C x R; the last vertex connects back to the first.
// Critical heights must be pairwise distinct and t strictly monotone between
// critical vertices.
struct MorseEmbedding {
  std::vector<MorseVertex> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
  const MorseVertex& at(int k) const {
    int n = size();
    return vertices[((k % n) + n) % n];
  }
};

struct CriticalPoint {
  int index = 0;
  bool is_max = false;
  double t = 0;
};

GaussCode parse_gauss(const std::string& text);
std::string to_string(const GaussCode& code);
std::string to_string(const Link& link);
void validate(const GaussCode& code);  // throws std::invalid_argument
// Links pool one label namespace: a crossing's two passes may sit on
// different components, so only the whole diagram can be checked.
void validate(const Link& link);

PDCode parse_pd(const std::string& text);
void pd_validate(const PDCode& pd);  // throws std::invalid_argument

// Flips the sign of both occurrences of the label (and swaps over/under,
// leaving the underlying shadow unchanged).
GaussCode switch_crossing(const GaussCode& code, int label);
Link switch_crossing(const Link& link, int label);

// Oriented smoothing of a self-crossing splits one component in two;
// smoothing a crossing between two components merges them.
Link smooth_crossing(const GaussCode& code, int label);
Link smooth_crossing(const Link& link, int label);

SingularKnotDiagram make_node(const GaussCode& code, int label);
SingularKnotDiagram make_node(const SingularKnotDiagram& s, int label);

// Critical point report sorted by height; throws on duplicate critical
// heights, zero-length t-segments, or fewer than 4 vertices.
std::vector<CriticalPoint> morse_validate(const MorseEmbedding& e);

MorseEmbedding morse_from_json(const std::string& text);
std::string morse_to_json(const MorseEmbedding& e);

}  // namespace knotio
}  // namespace knotcalc
