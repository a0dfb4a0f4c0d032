#include "doctest.h"
#include "oracle/oracle.hpp"
#include "sokq/parse.hpp"
#include "sokq/quandle.hpp"
#include "support.hpp"

using namespace sokq;

TEST_CASE("dihedral and trivial tables pass the axioms") {
  auto d3 = FiniteQuandle::from_table(3, {0, 2, 1, 2, 1, 0, 1, 0, 2});
  CHECK(d3.size() == 3);
  CHECK(d3.right(0, 1) == 2);
  CHECK(FiniteQuandle::dihedral(3).table() == d3.table());
  auto t2 = FiniteQuandle::from_table(2, {0, 0, 1, 1});
  CHECK(t2.table() == FiniteQuandle::trivial(2).table());
}

TEST_CASE("axiom violations name the axiom") {
  try {
    FiniteQuandle::from_table(2, {0, 0, 0, 1});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "qii");
  }
  try {
    FiniteQuandle::from_table(2, {1, 1, 0, 0});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "qi");
  }
  CHECK_NOTHROW(FiniteQuandle::from_table(2, {1, 1, 0, 0}, true));
}

TEST_CASE("left operation inverts right") {
  for (const auto& q : bundled_quandles())
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) {
        CHECK(q.left(q.right(x, y), y) == x);
        CHECK(q.right(q.left(x, y), y) == x);
      }
}

TEST_CASE("axiom checker agrees with the oracle on all 2-element tables") {
  for (int code = 0; code < 16; ++code) {
    std::vector<int> t{code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
    for (bool rack : {false, true}) {
      bool accepted = true;
      try {
        FiniteQuandle::from_table(2, t, rack);
      } catch (const AxiomViolation&) {
        accepted = false;
      }
      CHECK(accepted == oracle::satisfies_axioms(2, t, rack));
    }
  }
}

TEST_CASE("axiom checker agrees with the oracle on all 3-element tables") {
  int accepted_count = 0;
  std::vector<int> t(9, 0);
  for (int code = 0; code < 19683; ++code) {
    for (int k = 0, c = code; k < 9; ++k, c /= 3) t[k] = c % 3;
    bool accepted = true;
    try {
      FiniteQuandle::from_table(3, t);
    } catch (const AxiomViolation&) {
      accepted = false;
    }
    accepted_count += accepted;
    CHECK(accepted == oracle::satisfies_axioms(3, t, false));
  }
  // Trivial, dihedral, and three labelings of the one with two fixed columns.
  CHECK(accepted_count == 5);
}

TEST_CASE("bundled library") {
  const auto& qs = bundled_quandles();
  CHECK(qs.size() == 7);
  for (const auto& q : qs) CHECK(oracle::satisfies_axioms(q.size(), q.table(), q.is_rack()));
}

TEST_CASE("table text round trip") {
  auto q = parse_quandle_table(support::read_file(std::string(SOKQ_DATA_DIR) + "/dihedral3.quandle"));
  CHECK(q.table() == FiniteQuandle::dihedral(3).table());
  CHECK(parse_quandle_table(serialize_quandle_table(q)).table() == q.table());
  CHECK_THROWS_AS(parse_quandle_table("quandle 2\n0 0\n0 1\n"), AxiomViolation);
  CHECK_THROWS_AS(parse_quandle_table("quandle 2\n0 1\n"), ParseError);
}
