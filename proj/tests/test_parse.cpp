#include "doctest.h"
#include "sokq/parse.hpp"
#include "support.hpp"

using namespace sokq;

TEST_CASE("bundled texts parse and validate") {
  for (const char* name : {"virtual_trefoil.sokq", "virtual_trefoil_twin.sokq", "kishino.sokq", "kishino_twin.sokq",
                           "link3.sokq", "bigon_a.sokq", "bigon_b.sokq"}) {
    CAPTURE(name);
    auto p = support::corpus(name);
    CHECK_NOTHROW(require_valid(p));
  }
  auto vt = support::corpus("virtual_trefoil.sokq");
  CHECK(vt.sp.generators == std::vector<std::string>{"a", "b"});
  CHECK(vt.sp.relations.size() == 2);
  CHECK(vt.order.classes.at("a") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("crossingless unknot") {
  auto p = parse_presentation("gens: a  rels:  order: ([]a)");
  CHECK(p.sp.generators == std::vector<std::string>{"a"});
  CHECK(p.sp.relations.empty());
  CHECK(p.order.cyclic.count("a") == 1);
  CHECK(p == support::corpus("unknot.sokq"));
}

TEST_CASE("serialization is a fixed point") {
  for (const auto& [name, p] : support::move_corpus()) {
    CAPTURE(name);
    auto text = serialize_presentation(p);
    auto again = parse_presentation(text);
    CHECK(serialize_presentation(again) == text);
    CHECK(derived_class_order(again).size() == derived_class_order(p).size());
  }
  CHECK(serialize_presentation(SokqPresentation{}) == "gens:\nrels:\norder:");
}

TEST_CASE("json mirror round trip") {
  for (const auto& [name, p] : support::move_corpus()) {
    CAPTURE(name);
    auto back = presentation_from_json(presentation_to_json(p));
    CHECK(serialize_presentation(back) == serialize_presentation(p));
  }
}

TEST_CASE("unicode operation tokens") {
  auto ascii = parse_presentation("gens: a b\nrels: b ~ a <|- a\n a ~ b <|- a\norder: ([a b]a []b)");
  auto uni = parse_presentation("gens: a b\nrels: b ∼ a ◁− a\n a ~ b ◁- a\norder: ([a b]a []b)");
  CHECK(ascii == uni);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_presentation("gens: a\nrels: a ~ a |>? a\norder: ([a]a)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
  }
  CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a ~ a |>+ q\norder: ([q]a)"), SokqError);
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrels: a ~ b\norder: ([]a)"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a b\nrels: b ~ a <|- a\n a ~ b <|- a\norder: ([a]a [b]b)"),
                  SemanticError);
}

TEST_CASE("token spans point at source text") {
  const std::string text = "gens: a\nrels: a ~ a |>+ a\norder: ([a]a)";
  auto doc = parse_presentation_doc(text);
  REQUIRE_FALSE(doc.token_spans.empty());
  for (const auto& s : doc.token_spans) CHECK(s.offset + s.length <= text.size());
}

TEST_CASE("gauss text") {
  auto g = support::corpus_gauss("trefoil.gauss");
  CHECK(g.components.size() == 1);
  CHECK(g.crossing_count() == 3);
  CHECK(parse_gauss(serialize_gauss(g)) == g);
  auto two = parse_gauss("U1+ O2+ ; U2+ O1+");
  CHECK(two.components.size() == 2);
  CHECK(parse_gauss("()").components.size() == 1);
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), GaussPairingError);
  CHECK_THROWS_AS(parse_gauss("O1+ X1+"), ParseError);
}

TEST_CASE("general presentations") {
  auto gp = parse_general_presentation("gens: x y z w\nrels: x |> (y |> z) ~ w");
  REQUIRE(gp.relations.size() == 1);
  CHECK(gp.relations[0].first.length() == 3);
  CHECK(gp.relations[0].second.length() == 0);
}
