#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sokq/diagram.hpp"
#include "sokq/moves.hpp"
#include "sokq/parse.hpp"

namespace support {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sokq::GaussCode corpus_gauss(const std::string& name) {
  return sokq::parse_gauss(read_file(std::string(SOKQ_DATA_DIR) + "/" + name));
}

sokq::SokqPresentation corpus(const std::string& name) {
  if (name.ends_with(".gauss")) return sokq::gauss_to_sokq(corpus_gauss(name));
  return sokq::parse_presentation(read_file(std::string(SOKQ_DATA_DIR) + "/" + name));
}

std::vector<std::pair<std::string, sokq::SokqPresentation>> move_corpus() {
  std::vector<std::pair<std::string, sokq::SokqPresentation>> out;
  for (const char* name : {"unknot.sokq", "kink_pos.sokq", "kink_neg.sokq", "virtual_trefoil.sokq", "virtual_trefoil_twin.sokq",
                           "bigon_a.sokq", "bigon_b.sokq", "kishino.sokq", "kishino_twin.sokq", "trefoil.gauss",
                           "hopf.gauss", "trefoil_kink.gauss"})
    out.emplace_back(name, corpus(name));
  return out;
}

std::vector<std::pair<std::string, sokq::SokqPresentation>> r3_corpus() {
  std::vector<std::pair<std::string, sokq::SokqPresentation>> out;
  out.emplace_back("link3.sokq", corpus("link3.sokq"));
  for (const char* name : {"trefoil.gauss", "hopf.gauss", "virtual_trefoil.sokq", "bigon_a.sokq"}) {
    int kept = 0;
    for (const auto& m : sokq::applicable_moves_of(corpus(name), sokq::MoveKind::R2Intro)) {
      auto p = sokq::apply(corpus(name), m);
      if (sokq::applicable_moves_of(p, sokq::MoveKind::R3).empty()) continue;
      out.emplace_back(std::string(name) + " + " + sokq::to_string(m), p);
      if (++kept == 6) break;
    }
  }
  return out;
}

const std::vector<std::string>& general_corpus() {
  static const std::vector<std::string> texts = {
      "gens: a b\nrels: a |> b ~ b, b |> a ~ a",
      "gens: x y z\nrels: (x |> y) |> z ~ x, y <| z ~ y",
      "gens: a b c\nrels: a |> (b |> c) ~ a",
      "gens: a b c d\nrels: a |> (b <| (c |> d)) ~ c",
      "gens: a b\nrels: a ~ b",
      "gens: a b c\nrels: a |> b ~ c, c |> a ~ b, b |> c ~ a",
      "gens: a b c\nrels: a |> b ~ c, a |> b ~ a",
      "gens: a b\nrels: (a |> b) |> a ~ b |> a",
      "gens: p q r\nrels: p <| (q <| r) ~ r, q |> p ~ q",
      "gens: a b c\nrels: ((a |> b) <| c) |> a ~ b",
      "gens: a\nrels: a |> a ~ a",
      "gens: a b c d\nrels: a |> b ~ c, a |> b ~ d, c |> d ~ a",
  };
  return texts;
}

sokq::SignedPresentation as_signed(const sokq::ShortPresentation& sp) {
  sokq::SignedPresentation out;
  out.generators = sp.generators;
  for (const auto& r : sp.relations) out.relations.push_back({r.output, r.input, r.op, r.triangle, sokq::Sign::Pos});
  return out;
}

}  // namespace support
