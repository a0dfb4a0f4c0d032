#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "sokq/diagram.hpp"
#include "sokq/invariants.hpp"
#include "sokq/moves.hpp"
#include "sokq/parse.hpp"
#include "sokq/search.hpp"
#include "support.hpp"

using namespace sokq;

namespace {

int count_kind(const std::vector<MoveInstance>& ms, MoveKind k) {
  return static_cast<int>(std::count_if(ms.begin(), ms.end(), [&](const MoveInstance& m) { return m.kind == k; }));
}

std::set<std::pair<std::string, std::string>> relation_set(const SokqPresentation& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : p.sp.relations) {
    auto c = canonicalize_relation(r);
    out.insert({c.output, c.input + " " + to_string(c.triangle) + to_string(c.sign) + " " + c.op});
  }
  return out;
}

}  // namespace

TEST_CASE("move text round trip") {
  for (const char* text : {"R1I a@2 +before", "R1I b@0 -after", "R1E a", "R2I a@1 z@0 +par", "R2I a@0 a@3 -anti",
                           "R2E a b", "R3 t u v +-+", "FH a@0"}) {
    CAPTURE(text);
    CHECK(to_string(parse_move(text)) == text);
  }
  CHECK_THROWS(parse_move("R4 a"));
  CHECK_THROWS(parse_move("R1I a +before"));
}

TEST_CASE("relation deltas") {
  CHECK(relation_delta(MoveKind::R1Intro) == 1);
  CHECK(relation_delta(MoveKind::R1Elim) == -1);
  CHECK(relation_delta(MoveKind::R2Intro) == 2);
  CHECK(relation_delta(MoveKind::R2Elim) == -2);
  CHECK(relation_delta(MoveKind::R3) == 0);
  CHECK(relation_delta(MoveKind::FH) == 0);
}

TEST_CASE("moves available on small diagrams") {
  auto unknot = support::corpus("unknot.sokq");
  auto ms = applicable_moves(unknot, Mode::Virtual);
  CHECK(count_kind(ms, MoveKind::R1Intro) == 4);
  CHECK(count_kind(ms, MoveKind::R2Intro) > 0);
  CHECK(count_kind(ms, MoveKind::R1Intro) + count_kind(ms, MoveKind::R2Intro) == static_cast<int>(ms.size()));

  auto kink = support::corpus("kink_pos.sokq");
  CHECK(count_kind(applicable_moves(kink, Mode::Virtual), MoveKind::R1Elim) == 1);
  CHECK(apply(kink, parse_move("R1E a")).sp.relations.empty());

  auto bigon = support::corpus("bigon_a.sokq");
  CHECK(count_kind(applicable_moves(bigon, Mode::Welded), MoveKind::FH) > 0);
  CHECK(count_kind(applicable_moves(bigon, Mode::Virtual), MoveKind::FH) == 0);
  CHECK(count_kind(applicable_moves(kink, Mode::FramedVirtual), MoveKind::R1Elim) == 0);
  CHECK(count_kind(applicable_moves(unknot, Mode::FramedWelded), MoveKind::R1Intro) == 0);
}

TEST_CASE("applicable moves are sorted and unique") {
  for (const auto& [name, p] : support::move_corpus()) {
    auto ms = applicable_moves(p, Mode::Welded);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
  }
}

TEST_CASE("introducing a kink splits the arc") {
  auto unknot = support::corpus("unknot.sokq");
  auto p = apply(unknot, parse_move("R1I a@0 +before"));
  CHECK_NOTHROW(require_valid(p));
  REQUIRE(p.sp.relations.size() == 1);
  CHECK(p.sp.generators.size() == 1);
  CHECK(roles(p.sp.relations[0]).op == "a");

  auto vt = support::corpus("virtual_trefoil.sokq");
  auto q = apply(vt, parse_move("R1I b@0 +before"));
  CHECK_NOTHROW(require_valid(q));
  CHECK(q.sp.generators.size() == 3);
  const auto& added = q.sp.relations.back();
  CHECK(added.sign == Sign::Pos);
  // The new piece before the kink is the operator and the inbound operand.
  CHECK(roles(added).inbound == roles(added).op);
  CHECK(roles(added).outbound == "b");
  CHECK_THROWS_AS(apply(vt, parse_move("R1I b@4 +before")), NotApplicable);
}

TEST_CASE("third move on three closed strands") {
  // Top strand z is a closed loop over the other two; the middle strand y
  // closes through its own crossing; the bottom strand runs x then t.
  for (const auto& order : {std::vector<std::string>{"y", "t"}, std::vector<std::string>{"t", "y"}}) {
    auto p = make_presentation({"x", "t", "y", "z"},
                               {Relation{"y", "y", "z", Triangle::Right, Sign::Pos},
                                Relation{"x", "t", "z", Triangle::Right, Sign::Pos},
                                Relation{"t", "x", "y", Triangle::Right, Sign::Pos}},
                               {{"z", order}, {"y", {"x"}}});
    REQUIRE_NOTHROW(require_valid(p));
    auto r3 = applicable_moves_of(p, MoveKind::R3);
    if (r3.empty()) continue;
    auto q = apply(p, r3.front());
    CHECK_NOTHROW(require_valid(q));
    auto expected = make_presentation({"x", "t", "y", "z"},
                                      {Relation{"y", "y", "z", Triangle::Right, Sign::Pos},
                                       Relation{"x", "t", "y", Triangle::Right, Sign::Pos},
                                       Relation{"t", "x", "z", Triangle::Right, Sign::Pos}},
                                      {});
    CHECK(relation_set(q) == relation_set(expected));
  }
  auto any = [](const std::vector<std::string>& order) {
    auto p = make_presentation({"x", "t", "y", "z"},
                               {Relation{"y", "y", "z", Triangle::Right, Sign::Pos},
                                Relation{"x", "t", "z", Triangle::Right, Sign::Pos},
                                Relation{"t", "x", "y", Triangle::Right, Sign::Pos}},
                               {{"z", order}, {"y", {"x"}}});
    return applicable_moves_of(p, MoveKind::R3).size();
  };
  CHECK(any({"y", "t"}) + any({"t", "y"}) > 0);
}

TEST_CASE("every applicable move applies, keeps colorings and can be undone") {
  for (const auto& [name, p] : support::move_corpus()) {
    CAPTURE(name);
    const std::string before = canonical_key(p);
    std::vector<std::uint64_t> colors;
    for (const auto& q : bundled_quandles())
      if (q.size() <= 3) colors.push_back(oracle::brute_colorings(p.sp, q.size(), q.table()));
    for (const auto& m : applicable_moves(p, Mode::Welded, MoveOptions{6, true})) {
      CAPTURE(to_string(m));
      auto after = apply(p, m);
      REQUIRE_NOTHROW(require_valid(after));
      CHECK(after.sp.relations.size() == p.sp.relations.size() + relation_delta(m.kind));
      size_t i = 0;
      for (const auto& q : bundled_quandles())
        if (q.size() <= 3) CHECK(oracle::brute_colorings(after.sp, q.size(), q.table()) == colors[i++]);
      auto back = apply(after, invert(m, p));
      CHECK(canonical_key(back) == before);
    }
  }
}

TEST_CASE("moves commute with gauss-level moves") {
  for (const auto& [name, p] : support::move_corpus()) {
    CAPTURE(name);
    auto g = sokq_to_gauss(p);
    for (auto kind : {MoveKind::R1Intro, MoveKind::R1Elim, MoveKind::R2Intro, MoveKind::R2Elim, MoveKind::R3,
                      MoveKind::FH}) {
      CAPTURE(static_cast<int>(kind));
      if (kind == MoveKind::R2Intro && p.sp.relations.size() > 3) continue;
      std::set<std::string> ours;
      for (const auto& m : applicable_moves_of(p, kind)) ours.insert(oracle::gauss_key(sokq_to_gauss(apply(p, m))));
      CHECK(ours == oracle::gauss_moves(g, kind));
    }
  }
}

TEST_CASE("third moves commute with gauss-level moves") {
  size_t nonempty = 0;
  for (const auto& [name, p] : support::r3_corpus()) {
    CAPTURE(name);
    auto g = sokq_to_gauss(p);
    for (auto kind : {MoveKind::R1Elim, MoveKind::R2Elim, MoveKind::R3, MoveKind::FH}) {
      CAPTURE(static_cast<int>(kind));
      std::set<std::string> ours;
      for (const auto& m : applicable_moves_of(p, kind)) {
        auto q = apply(p, m);
        REQUIRE_NOTHROW(require_valid(q));
        ours.insert(oracle::gauss_key(sokq_to_gauss(q)));
      }
      CHECK(ours == oracle::gauss_moves(g, kind));
      if (kind == MoveKind::R3) nonempty += !ours.empty();
    }
  }
  CHECK(nonempty >= 10);
}
