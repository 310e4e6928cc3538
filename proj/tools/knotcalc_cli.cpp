// knotcalc: batch front end for the chord-diagram / knot-invariant library.
//
// Subcommands: chords, weights, fourterm, invariant, graph, kontsevich,
// moments. Output is plain text by default, JSON with --format json.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotcalc/chords.hpp"
#include "knotcalc/gaussmoments.hpp"
#include "knotcalc/kontsevich.hpp"
#include "knotcalc/lieweights.hpp"
#include "knotcalc/vassiliev.hpp"

using namespace knotcalc;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct Output {
  bool json = false;
  std::ostringstream text;

  // JSON documents are assembled by hand so float formatting stays fixed
  // at 12 significant digits and field order is stable.
  std::vector<std::pair<std::string, std::string>> fields;

  void field(const std::string& key, const std::string& raw) { fields.push_back({key, raw}); }
  void string_field(const std::string& key, const std::string& value) {
    field(key, "\"" + json_escape(value) + "\"");
  }

  void emit() const {
    if (!json) {
      std::fputs(text.str().c_str(), stdout);
      return;
    }
    std::string doc = "{";
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) doc += ",";
      doc += "\"" + fields[i].first + "\":" + fields[i].second;
    }
    doc += "}\n";
    std::fputs(doc.c_str(), stdout);
  }
};

lieweights::LieAlgebraRep algebra_by_name(const std::string& name) {
  if (name.size() < 3 || name.substr(0, 2) != "su")
    throw std::invalid_argument("unknown algebra '" + name + "' (expected su2..su6)");
  int n = std::stoi(name.substr(2));
  return lieweights::suN_fundamental(n);
}

knotio::MorseEmbedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open embedding file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return knotio::morse_from_json(ss.str());
}

std::string rat(const Rational& r) { return rational_to_string(r); }

int run(int argc, char** argv) {
  CLI::App app{"knot invariants from chord diagrams: exact weight systems, "
               "skein-based invariants, numerical iterated integrals, and "
               "Gaussian moment calculus"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  int threads = 1;
  app.add_option("--threads", threads, "worker cap for numerical integration")
      ->check(CLI::PositiveNumber);

  // chords enumerate
  auto* chords_cmd = app.add_subcommand("chords", "chord diagram combinatorics");
  auto* enumerate_cmd = chords_cmd->add_subcommand("enumerate", "list order-m diagrams, one per line");
  int enum_m = 1;
  enumerate_cmd->add_option("--m", enum_m, "diagram order")->required()->check(CLI::PositiveNumber);

  // weights
  auto* weights_cmd = app.add_subcommand("weights", "evaluate a weight system on a diagram");
  std::string w_algebra = "su2", w_diagram;
  weights_cmd->add_option("--algebra", w_algebra, "su2..su6");
  weights_cmd->add_option("--diagram", w_diagram, "diagram text, e.g. \"2: (0,2)(1,3)\"")->required();

  // fourterm
  auto* fourterm_cmd = app.add_subcommand("fourterm", "check the four-term relations exactly");
  std::string ft_algebra = "su2";
  int ft_m = 3;
  fourterm_cmd->add_option("--algebra", ft_algebra, "su2..su6");
  fourterm_cmd->add_option("--m", ft_m, "diagram order")->check(CLI::Range(2, 6));

  // invariant conway|v2
  auto* invariant_cmd = app.add_subcommand("invariant", "evaluate a knot invariant on a Gauss code");
  std::string inv_which, inv_gauss;
  invariant_cmd->add_option("which", inv_which, "conway or v2")
      ->required()
      ->check(CLI::IsMember({"conway", "v2"}));
  invariant_cmd->add_option("--gauss", inv_gauss, "Gauss code, e.g. \"O1+ U2+ ...\"")->required();

  // graph extend
  auto* graph_cmd = app.add_subcommand("graph", "rigid-vertex graph extension of an invariant");
  auto* extend_cmd = graph_cmd->add_subcommand(
      "extend", "sum a^{i+} b^{i-} c^{i0} V(S) over all node resolutions");
  std::string g_gauss, g_nodes, g_a = "1", g_b = "-1", g_c = "0";
  extend_cmd->add_option("--gauss", g_gauss, "Gauss code of the base diagram")->required();
  extend_cmd->add_option("--nodes", g_nodes, "comma-separated crossing labels to weld")->required();
  extend_cmd->add_option("--a", g_a, "coefficient of the positive resolution");
  extend_cmd->add_option("--b", g_b, "coefficient of the negative resolution");
  extend_cmd->add_option("--c", g_c, "coefficient of the oriented smoothing");

  // kontsevich v2
  auto* kont_cmd = app.add_subcommand("kontsevich", "numerical iterated-integral coefficients");
  auto* kv2_cmd = kont_cmd->add_subcommand(
      "v2", "degree-2 coefficient of a knot minus a matched unknot");
  std::string k_knot, k_unknot;
  int k_subdiv = 64;
  double k_margin = 0.05;
  kv2_cmd->add_option("--knot", k_knot, "embedding JSON file")->required();
  kv2_cmd->add_option("--unknot", k_unknot, "matched unknot embedding JSON file")->required();
  kv2_cmd->add_option("--subdiv", k_subdiv, "quadrature cells per strip")->check(CLI::PositiveNumber);
  kv2_cmd->add_option("--margin", k_margin, "excluded fraction of the minimal critical gap");

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "Gaussian moment calculus, exact rationals");
  int mo_n = -1;
  std::string mo_poly;
  moments_cmd->add_option("--n", mo_n, "moment order: reduce x^n");
  moments_cmd->add_option("--poly", mo_poly, "polynomial prefactor, e.g. \"3x^4 - x^2 + 7\"");

  // --format / --threads may follow the subcommand
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  out.json = (format == "json");
  try {
    if (enumerate_cmd->parsed()) {
      auto ds = chords::enumerate_diagrams(enum_m);
      std::string arr = "[";
      for (const auto& d : ds) {
        out.text << d.to_string() << "\n";
        if (arr.size() > 1) arr += ",";
        arr += "\"" + json_escape(d.to_string()) + "\"";
      }
      out.field("diagrams", arr + "]");
    } else if (weights_cmd->parsed()) {
      auto rep = algebra_by_name(w_algebra);
      auto d = chords::ChordDiagram::from_string(w_diagram);
      Rational v = lieweights::weight(d, rep);
      out.text << rat(v) << "\n";
      out.string_field("value", rat(v));
    } else if (fourterm_cmd->parsed()) {
      auto rep = algebra_by_name(ft_algebra);
      auto report = lieweights::check_4T(rep, ft_m);
      if (report.all_zero())
        out.text << "all 4T combinations vanish: OK\n";
      else
        out.text << report.violations.size() << " of " << report.combinations_checked
                 << " 4T combinations violated\n";
      out.field("checked", std::to_string(report.combinations_checked));
      out.field("violations", std::to_string(report.violations.size()));
      out.field("ok", report.all_zero() ? "true" : "false");
      if (!report.all_zero()) {
        out.emit();
        return 1;
      }
    } else if (invariant_cmd->parsed()) {
      auto code = knotio::parse_gauss(inv_gauss);
      if (inv_which == "conway") {
        RatPoly p = vassiliev::conway(code);
        out.text << p.to_string("z") << "\n";
        out.string_field("value", p.to_string("z"));
      } else {
        Rational v = vassiliev::v2(code);
        out.text << rat(v) << "\n";
        out.string_field("value", rat(v));
      }
    } else if (extend_cmd->parsed()) {
      auto code = knotio::parse_gauss(g_gauss);
      knotio::SingularKnotDiagram g{code, {}};
      std::istringstream nodes(g_nodes);
      std::string tok;
      while (std::getline(nodes, tok, ','))
        g = knotio::make_node(g, std::stoi(tok));
      vassiliev::GraphExtensionConfig cfg{RatPoly(rational_from_string(g_a)),
                                          RatPoly(rational_from_string(g_b)),
                                          RatPoly(rational_from_string(g_c))};
      RatPoly p = vassiliev::extend_to_graph(vassiliev::conway_invariant(), cfg, g);
      out.text << p.to_string("z") << "\n";
      out.string_field("value", p.to_string("z"));
    } else if (kv2_cmd->parsed()) {
      auto knot = load_embedding(k_knot);
      auto unknot = load_embedding(k_unknot);
      kontsevich::QuadratureConfig cfg;
      cfg.critical_margin = k_margin;
      cfg.threads = threads;
      auto crossed = chords::crossed_pair();
      std::string refinement = "[";
      double prev = 0;
      out.text << "refinement:\n";
      for (int s = k_subdiv / 8; s <= k_subdiv; s *= 2) {
        if (s < 1) continue;
        cfg.subdivisions = s;
        double v = kontsevich::raw_coefficient(knot, crossed, cfg).value -
                   kontsevich::raw_coefficient(unknot, crossed, cfg).value;
        out.text << "  subdiv " << s << ": " << fmt_double(v);
        if (refinement.size() > 1) {
          out.text << "  (delta " << fmt_double(v - prev) << ")";
          refinement += ",";
        }
        out.text << "\n";
        refinement += "{\"subdiv\":" + std::to_string(s) + ",\"value\":" + fmt_double(v) + "}";
        prev = v;
      }
      cfg.subdivisions = k_subdiv;
      auto ck = kontsevich::raw_coefficient(knot, crossed, cfg);
      auto cu = kontsevich::raw_coefficient(unknot, crossed, cfg);
      double value = ck.value - cu.value;
      double resid = ck.imag_residual + cu.imag_residual;
      out.text << "value: " << fmt_double(value) << "\n";
      out.text << "imag_residual: " << fmt_double(resid) << "\n";
      out.field("value", fmt_double(value));
      out.field("imag_residual", fmt_double(resid));
      out.field("refinement", refinement + "]");
    } else if (moments_cmd->parsed()) {
      if ((mo_n >= 0) == !mo_poly.empty())
        throw CLI::ValidationError("moments", "give exactly one of --n or --poly");
      Rational v = (mo_n >= 0)
                       ? gaussmoments::moment(mo_n)
                       : gaussmoments::reduce(gaussmoments::parse_polynomial(mo_poly));
      out.text << rat(v) << "\n";
      out.string_field("value", rat(v));
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    if (out.json)
      std::printf("{\"error\":\"%s\"}\n", json_escape(e.what()).c_str());
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  out.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
