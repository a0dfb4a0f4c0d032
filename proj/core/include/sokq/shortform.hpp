#pragma once

// Normalization of finitely presented quandles to short form: every relation
// x ~ y <> z, with no redundant duplicates.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sokq/core.hpp"

namespace sokq {

/// Expression tree over generators with ▷ / ◁.
struct Term {
  std::string generator;  // set for leaves
  Triangle op = Triangle::Right;
  std::shared_ptr<const Term> left;
  std::shared_ptr<const Term> right;

  bool is_leaf() const { return !left; }

  static Term leaf(std::string g);
  static Term node(Term l, Triangle op, Term r);
};

/// Fully left-associated word: ((head <>1 g1) <>2 g2) ...
struct Word {
  std::string head;
  std::vector<std::pair<Triangle, std::string>> tail;

  int length() const { return static_cast<int>(tail.size()); }
  friend bool operator==(const Word&, const Word&) = default;
};

struct GeneralPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;
};

/// Unsigned short-form presentation.
struct ShortPresentation {
  std::vector<std::string> generators;
  std::vector<UnsignedRelation> relations;

  friend bool operator==(const ShortPresentation&, const ShortPresentation&) = default;
};

Word left_associate(const Term& t);

/// Shortens every relation, leftmost pair first, reusing an existing
/// z ~ x1 <> x2 when present. Generator-to-generator relations merge toward
/// the earlier-declared generator. Ends with dedup().
ShortPresentation to_short_form(const GeneralPresentation& gp, bool rack = false);

/// Merges generators forced equal by repeated right-hand sides, drops
/// rewritten duplicates, and (quandles only) collapses x~y▷y / x~y◁y pairs.
ShortPresentation dedup(const ShortPresentation& sp, bool rack = false);

struct ShortFormViolation {
  int bullet = 0;  // 1..5
  std::string detail;
};

/// Mechanical check of the five short-form conditions; empty means OK.
std::vector<ShortFormViolation> check_short_form(const ShortPresentation& sp, bool rack = false);

std::string to_string(const Word& w);

}  // namespace sokq
