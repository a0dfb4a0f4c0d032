#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sokq/diagram.hpp"
#include "sokq/invariants.hpp"
#include "sokq/moves.hpp"
#include "sokq/parse.hpp"
#include "sokq/search.hpp"
#include "sokq/shortform.hpp"

using namespace sokq;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SokqError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Reads a presentation from .sokq, .json or .gauss input.
SokqPresentation load(const std::string& path) {
  std::string text = slurp(path);
  if (has_suffix(path, ".json")) return presentation_from_json(text);
  if (has_suffix(path, ".gauss")) return gauss_to_sokq(parse_gauss(text));
  return parse_presentation(text);
}

std::string chord_svg(const GaussCode& g) {
  const double r = 120, pad = 40;
  const int k = static_cast<int>(g.components.size());
  const double w = k * (2 * r + pad) + pad, h = 2 * r + 2 * pad;
  struct Point {
    double x, y;
  };
  std::map<int, std::vector<std::pair<Point, bool>>> ends;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (int c = 0; c < k; ++c) {
    const double cx = pad + r + c * (2 * r + pad), cy = pad + r;
    svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto& comp = g.components[c];
    for (size_t i = 0; i < comp.size(); ++i) {
      const double t = -M_PI / 2 + 2 * M_PI * i / comp.size();
      ends[comp[i].crossing].push_back({{cx + r * std::cos(t), cy + r * std::sin(t)}, comp[i].over});
    }
  }
  for (const auto& [id, e] : ends) {
    Sign s = Sign::Pos;
    for (const auto& comp : g.components)
      for (const auto& sym : comp)
        if (sym.crossing == id) s = sym.sign;
    const char* colour = s == Sign::Pos ? "#1f5fbf" : "#bf1f1f";
    svg << "  <line x1=\"" << e[0].first.x << "\" y1=\"" << e[0].first.y << "\" x2=\"" << e[1].first.x << "\" y2=\""
        << e[1].first.y << "\" stroke=\"" << colour << "\"/>\n";
    for (const auto& [pt, over] : e) {
      svg << "  <circle cx=\"" << pt.x << "\" cy=\"" << pt.y << "\" r=\"5\" stroke=\"" << colour << "\" fill=\""
          << (over ? colour : "white") << "\"/>\n";
      svg << "  <text x=\"" << pt.x + 7 << "\" y=\"" << pt.y - 7 << "\" font-size=\"12\">" << (over ? "O" : "U") << id
          << (s == Sign::Pos ? "+" : "-") << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

json words_json(const std::vector<CyclicWord>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed ordered knotlike quandle presentations"};
  app.require_subcommand(1);
  std::string mode_text = "virtual";
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_text, "virtual | welded | framed-virtual | framed-welded");
  };

  std::string file, file2, out_path, move_text, quandle_path;
  int depth = 6, max_crossings = 8, n = 0;
  bool with_loops = false;

  auto* parse_cmd = app.add_subcommand("parse", "Validate and print a presentation in canonical text");
  parse_cmd->add_option("file", file)->required();
  bool as_json = false;
  parse_cmd->add_flag("--json", as_json, "Print the JSON mirror instead");

  auto* normalize_cmd = app.add_subcommand("normalize", "Reduce a general presentation to short form");
  normalize_cmd->add_option("file", file)->required();
  bool rack = false;
  normalize_cmd->add_flag("--rack", rack, "Skip the quandle-only collapse");

  auto* validate_cmd = app.add_subcommand("validate", "Report knotlike, coherence and order checks");
  validate_cmd->add_option("file", file)->required();

  auto* gauss_cmd = app.add_subcommand("gauss", "Convert between Gauss codes and presentations");
  gauss_cmd->require_subcommand(1);
  auto* to_sokq = gauss_cmd->add_subcommand("to-sokq", "Gauss code to presentation");
  to_sokq->add_option("file", file)->required();
  auto* from_sokq = gauss_cmd->add_subcommand("from-sokq", "Presentation to Gauss code");
  from_sokq->add_option("file", file)->required();

  auto* moves_cmd = app.add_subcommand("moves", "List or apply formal Reidemeister moves");
  moves_cmd->require_subcommand(1);
  auto* list_cmd = moves_cmd->add_subcommand("list", "List applicable moves");
  list_cmd->add_option("file", file)->required();
  add_mode(list_cmd);
  auto* apply_cmd = moves_cmd->add_subcommand("apply", "Apply one move");
  apply_cmd->add_option("file", file)->required();
  apply_cmd->add_option("move", move_text, "e.g. \"R1E a\"")->required();

  auto* search_cmd = app.add_subcommand("search", "Bounded move search");
  search_cmd->require_subcommand(1);
  auto* connect_cmd = search_cmd->add_subcommand("connect", "Find a move path between two presentations");
  connect_cmd->add_option("a", file)->required();
  connect_cmd->add_option("b", file2)->required();
  auto* simplify_cmd = search_cmd->add_subcommand("simplify", "Search for the fewest crossings");
  simplify_cmd->add_option("file", file)->required();
  for (auto* sub : {connect_cmd, simplify_cmd}) {
    add_mode(sub);
    sub->add_option("--depth", depth, "Maximum path length");
    sub->add_option("--max-crossings", max_crossings, "Prune states with more relations");
  }

  auto* enum_cmd = app.add_subcommand("enum", "Canonical keys of all n-crossing diagrams");
  enum_cmd->add_option("n", n)->required();
  add_mode(enum_cmd);
  enum_cmd->add_flag("--loops", with_loops, "Count the crossingless loop for n = 0");

  auto* inv_cmd = app.add_subcommand("invariants", "Invariant report as JSON rows");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_option("--quandle", quandle_path, "Quandle table; defaults to the bundled library");

  auto* chord_cmd = app.add_subcommand("chord", "Chord diagram SVG for a Gauss code");
  chord_cmd->add_option("file", file)->required();
  chord_cmd->add_option("-o,--output", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const Mode mode = parse_mode(mode_text);
    if (*parse_cmd) {
      auto p = load(file);
      std::cout << (as_json ? presentation_to_json(p) : serialize_presentation(p)) << "\n";
    } else if (*normalize_cmd) {
      std::cout << serialize_short_form(to_short_form(parse_general_presentation(slurp(file)), rack)) << "\n";
    } else if (*validate_cmd) {
      auto p = parse_presentation_doc(slurp(file)).presentation;
      auto knotlike = validate_knotlike(p.sp);
      auto order = validate_order_info(p);
      std::vector<UnsignedRelation> unsigned_rels;
      for (const auto& r : p.sp.relations) unsigned_rels.push_back({r.output, r.input, r.op, r.triangle});
      json report;
      report["knotlike"] = knotlike.ok() ? "ok" : knotlike.describe();
      report["order"] = order.ok() ? "ok" : order.describe();
      try {
        report["coherent_signings"] = coherent_signings(p.sp.generators, unsigned_rels).size();
      } catch (const NoCoherentSigning& e) {
        report["coherent_signings"] = 0;
      }
      std::cout << report.dump(2) << "\n";
      return knotlike.ok() && order.ok() ? 0 : 1;
    } else if (*to_sokq) {
      std::cout << serialize_presentation(gauss_to_sokq(parse_gauss(slurp(file)))) << "\n";
    } else if (*from_sokq) {
      std::cout << serialize_gauss(sokq_to_gauss(load(file))) << "\n";
    } else if (*list_cmd) {
      for (const auto& m : applicable_moves(load(file), mode)) std::cout << to_string(m) << "\n";
    } else if (*apply_cmd) {
      std::cout << serialize_presentation(apply(load(file), parse_move(move_text))) << "\n";
    } else if (*connect_cmd || *simplify_cmd) {
      SearchOptions opts;
      opts.max_depth = depth;
      opts.max_crossings = max_crossings;
      if (*connect_cmd) {
        std::cout << search_result_json(connect(load(file), load(file2), mode, opts)) << "\n";
      } else {
        auto r = simplify(load(file), mode, opts);
        json j = json::parse(search_result_json(r));
        j["best"] = serialize_presentation(r.best);
        std::cout << j.dump() << "\n";
      }
    } else if (*enum_cmd) {
      EnumerateOptions opts;
      opts.include_loops = with_loops;
      for (const auto& k : enumerate_diagrams(n, mode, opts)) std::cout << k << "\n";
    } else if (*inv_cmd) {
      auto p = load(file);
      std::vector<FiniteQuandle> qs;
      if (quandle_path.empty())
        qs = bundled_quandles();
      else
        qs.push_back(parse_quandle_table(slurp(quandle_path)));
      json rows = json::array();
      for (const auto& q : qs)
        rows.push_back({{"invariant", "coloring_count"}, {"value", coloring_count(p, q)}, {"inputs", {file, q.name()}}});
      rows.push_back({{"invariant", "cyclic_class_order"}, {"value", words_json(cyclic_class_order(p))}, {"inputs", {file}}});
      rows.push_back({{"invariant", "writhe_per_component"}, {"value", writhe_per_component(p)}, {"inputs", {file}}});
      auto g = sokq_to_gauss(p);
      if (g.components.size() == 1) {
        rows.push_back({{"invariant", "odd_writhe"}, {"value", odd_writhe(g)}, {"inputs", {file}}});
        if (!p.sp.relations.empty())
          rows.push_back({{"invariant", "order_cycle"}, {"value", order_cycle(p).word}, {"inputs", {file}}});
      }
      std::cout << rows.dump(2) << "\n";
    } else if (*chord_cmd) {
      std::ofstream(out_path) << chord_svg(parse_gauss(slurp(file)));
    }
  } catch (const ParseError& e) {
    json err{{"error", "parse"}, {"message", e.what()}, {"line", e.span().line}, {"column", e.span().column}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "failure"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
