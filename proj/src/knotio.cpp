#include "knotcalc/knotio.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotcalc {
namespace knotio {

namespace {

[[noreturn]] void parse_fail(size_t token_index, const std::string& what) {
  throw std::invalid_argument("gauss parse error at token " + std::to_string(token_index + 1) +
                              ": " + what);
}

}  // namespace

GaussCode parse_gauss(const std::string& text) {
  GaussCode code;
  std::istringstream in(text);
  std::string tok;
  size_t idx = 0;
  while (in >> tok) {
    GaussEntry e;
    if (tok.size() < 3) parse_fail(idx, "token '" + tok + "' too short");
    if (tok.front() == 'O')
      e.pass = Pass::Over;
    else if (tok.front() == 'U')
      e.pass = Pass::Under;
    else
      parse_fail(idx, "token must start with O or U");
    char sc = tok.back();
    if (sc == '+')
      e.sign = +1;
    else if (sc == '-')
      e.sign = -1;
    else
      parse_fail(idx, "token must end with + or -");
    std::string num = tok.substr(1, tok.size() - 2);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) {
          return ch >= '0' && ch <= '9';
        }))
      parse_fail(idx, "label must be a positive integer");
    e.label = std::stoi(num);
    if (e.label <= 0) parse_fail(idx, "label must be positive");
    code.entries.push_back(e);
    ++idx;
  }
  validate(code);
  return code;
}

void validate(const GaussCode& code) { validate(Link{code}); }

void validate(const Link& link) {
  std::vector<GaussEntry> pooled;
  for (const auto& comp : link)
    pooled.insert(pooled.end(), comp.entries.begin(), comp.entries.end());
  std::map<int, std::vector<size_t>> where;
  for (size_t k = 0; k < pooled.size(); ++k) where[pooled[k].label].push_back(k);
  for (const auto& [label, pos] : where) {
    if (pos.size() != 2)
      throw std::invalid_argument("gauss code invalid: label " + std::to_string(label) +
                                  " appears " + std::to_string(pos.size()) + " times");
    const GaussEntry& a = pooled[pos[0]];
    const GaussEntry& b = pooled[pos[1]];
    if (a.pass == b.pass)
      throw std::invalid_argument("gauss code invalid: label " + std::to_string(label) +
                                  " has duplicate " +
                                  (a.pass == Pass::Over ? std::string("over") : std::string("under")) +
                                  "-pass");
    if (a.sign != b.sign)
      throw std::invalid_argument("gauss code invalid: sign mismatch on label " +
                                  std::to_string(label));
  }
}

std::string to_string(const GaussCode& code) {
  std::string out;
  for (const auto& e : code.entries) {
    if (!out.empty()) out += ' ';
    out += (e.pass == Pass::Over) ? 'O' : 'U';
    out += std::to_string(e.label);
    out += (e.sign > 0) ? '+' : '-';
  }
  return out;
}

std::string to_string(const Link& link) {
  std::string out;
  for (const auto& c : link) {
    if (!out.empty()) out += " | ";
    out += c.entries.empty() ? std::string("(unknot)") : to_string(c);
  }
  return out;
}

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'X') throw std::invalid_argument("pd parse error: expected 'X' at position " +
                                                    std::to_string(i));
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(')
      throw std::invalid_argument("pd parse error: expected '(' after X");
    ++i;
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("pd parse error: expected edge label");
      tuple[k] = std::stoi(text.substr(start, i - start));
      if (tuple[k] <= 0) throw std::invalid_argument("pd parse error: edge labels are positive");
    }
    skip_ws();
    if (i >= text.size() || text[i] != ')')
      throw std::invalid_argument("pd parse error: expected ')'");
    ++i;
    pd.crossings.push_back(tuple);
    skip_ws();
  }
  pd_validate(pd);
  return pd;
}

void pd_validate(const PDCode& pd) {
  std::map<int, int> count;
  for (const auto& t : pd.crossings)
    for (int e : t) ++count[e];
  for (const auto& [edge, n] : count)
    if (n != 2)
      throw std::invalid_argument("pd code invalid: edge " + std::to_string(edge) + " appears " +
                                  std::to_string(n) + " times (expected 2)");
}

namespace {

struct Occurrence {
  int component = -1;
  int position = -1;
};

std::pair<Occurrence, Occurrence> find_label(const Link& link, int label) {
  Occurrence first, second;
  for (size_t c = 0; c < link.size(); ++c)
    for (size_t p = 0; p < link[c].entries.size(); ++p)
      if (link[c].entries[p].label == label) {
        if (first.component < 0)
          first = {static_cast<int>(c), static_cast<int>(p)};
        else
          second = {static_cast<int>(c), static_cast<int>(p)};
      }
  if (second.component < 0)
    throw std::invalid_argument("unknown crossing label " + std::to_string(label));
  return {first, second};
}

}  // namespace

Link switch_crossing(const Link& link, int label) {
  find_label(link, label);  // existence check
  Link out = link;
  for (auto& comp : out)
    for (auto& e : comp.entries)
      if (e.label == label) e.sign = -e.sign;
  return out;
}

GaussCode switch_crossing(const GaussCode& code, int label) {
  return switch_crossing(Link{code}, label)[0];
}

Link smooth_crossing(const Link& link, int label) {
  auto [a, b] = find_label(link, label);
  Link out;
  if (a.component == b.component) {
    // Self-crossing: the component splits in two.
    const auto& src = link[a.component].entries;
    int i = a.position, j = b.position;
    GaussCode inner, outer;
    for (int k = i + 1; k < j; ++k) inner.entries.push_back(src[k]);
    for (int k = j + 1; k < static_cast<int>(src.size()); ++k) outer.entries.push_back(src[k]);
    for (int k = 0; k < i; ++k) outer.entries.push_back(src[k]);
    for (size_t c = 0; c < link.size(); ++c)
      if (static_cast<int>(c) != a.component) out.push_back(link[c]);
    out.push_back(inner);
    out.push_back(outer);
  } else {
    // Crossing between two components: they merge.
    const auto& sa = link[a.component].entries;
    const auto& sb = link[b.component].entries;
    GaussCode merged;
    for (int k = 0; k < a.position; ++k) merged.entries.push_back(sa[k]);
    for (size_t k = 0; k < sb.size() - 1; ++k)
      merged.entries.push_back(sb[(b.position + 1 + k) % sb.size()]);
    for (size_t k = a.position + 1; k < sa.size(); ++k) merged.entries.push_back(sa[k]);
    for (size_t c = 0; c < link.size(); ++c)
      if (static_cast<int>(c) != a.component && static_cast<int>(c) != b.component)
        out.push_back(link[c]);
    out.push_back(merged);
  }
  return out;
}

Link smooth_crossing(const GaussCode& code, int label) {
  return smooth_crossing(Link{code}, label);
}

SingularKnotDiagram make_node(const GaussCode& code, int label) {
  return make_node(SingularKnotDiagram{code, {}}, label);
}

SingularKnotDiagram make_node(const SingularKnotDiagram& s, int label) {
  find_label(Link{s.base}, label);  // existence check
  if (s.node_set.count(label))
    throw std::invalid_argument("label " + std::to_string(label) + " is already a node");
  SingularKnotDiagram out = s;
  out.node_set.insert(label);
  return out;
}

std::vector<CriticalPoint> morse_validate(const MorseEmbedding& e) {
  int n = e.size();
  if (n < 4) throw std::invalid_argument("morse embedding needs at least 4 vertices");
  std::vector<CriticalPoint> crit;
  for (int k = 0; k < n; ++k) {
    double tp = e.at(k - 1).t, tc = e.at(k).t, tn = e.at(k + 1).t;
    if (tc == tn)
      throw std::invalid_argument("zero-length t-segment at vertex " + std::to_string(k));
    if (tc > tp && tc > tn) crit.push_back({k, true, tc});
    if (tc < tp && tc < tn) crit.push_back({k, false, tc});
  }
  std::sort(crit.begin(), crit.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.t < b.t; });
  for (size_t k = 1; k < crit.size(); ++k)
    if (crit[k].t == crit[k - 1].t)
      throw std::invalid_argument("duplicate critical height t=" + std::to_string(crit[k].t) +
                                  " at vertices " + std::to_string(crit[k - 1].index) + " and " +
                                  std::to_string(crit[k].index));
  int maxima = 0, minima = 0;
  for (const auto& c : crit) (c.is_max ? maxima : minima)++;
  if (maxima != minima)
    throw std::logic_error("critical point counts disagree");  // impossible for closed curves
  return crit;
}

MorseEmbedding morse_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("morse json: missing \"vertices\" array");
  MorseEmbedding e;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3)
      throw std::invalid_argument("morse json: each vertex must be [re, im, t]");
    e.vertices.push_back({{v[0].get<double>(), v[1].get<double>()}, v[2].get<double>()});
  }
  return e;
}

std::string morse_to_json(const MorseEmbedding& e) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : e.vertices)
    verts.push_back({v.z.real(), v.z.imag(), v.t});
  nlohmann::json j;
  j["vertices"] = verts;
  return j.dump(2);
}

}  // namespace knotio
}  // namespace knotcalc
