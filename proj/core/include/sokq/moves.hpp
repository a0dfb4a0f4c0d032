#pragma once

// Formal Reidemeister moves on SOKQ presentations.
//
// Crossings are named by the inbound operand of their relation. Positions
// index the gaps of a class: 0 is before the first entry. A closed-loop arc
// with n entries has max(n, 1) distinct gaps.
//
// Text form (one move per token group):
//   R1I a@2 +before | -before | +after | -after
//   R1E a
//   R2I a@1 z@0 +par | +anti | -par | -anti
//   R2E a b
//   R3 t u v +++            (strand T/M/B orientation case)
//   FH a@0

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sokq/core.hpp"

namespace sokq {

enum class MoveKind { R1Intro, R1Elim, R2Intro, R2Elim, R3, FH };

class NotApplicable : public SokqError {
 public:
  using SokqError::SokqError;
};

struct MoveInstance {
  MoveKind kind = MoveKind::R1Intro;
  // R1Intro, R2Intro: arc that receives the under passes. FH: the class.
  std::string arc;
  int index = 0;
  // R1Intro: sign of the kink. R2Intro: sign of the first under pass.
  Sign sign = Sign::Pos;
  // R1Intro: over pass precedes the under pass along the arc.
  // R2Intro: over passes are inserted in the same order as the under passes.
  bool first = true;
  // R2Intro: the over-arc and its insertion gap.
  std::string over_arc;
  int over_index = 0;
  // R1Elim: 1 crossing. R2Elim: 2 crossings, first one met first.
  // R3: top/middle, top/bottom, middle/bottom crossings.
  std::vector<std::string> crossings;
  // R3: orientation of the top, middle and bottom strands (+1 or -1).
  int sigma_t = 1, sigma_m = 1, sigma_b = 1;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
  friend auto operator<=>(const MoveInstance&, const MoveInstance&) = default;
};

std::string to_string(const MoveInstance& m);
MoveInstance parse_move(const std::string& text);

/// Relation count change caused by a move of this kind.
int relation_delta(MoveKind k);

struct MoveOptions {
  // Caps the number of (arc, over-arc) pairs for R2 introductions; 0 means
  // all pairs.
  std::size_t r2_pair_cap = 0;
  bool include_intro = true;
};

/// Sorted and duplicate free. Framed modes drop R1; welded modes add FH.
std::vector<MoveInstance> applicable_moves(const SokqPresentation& p, Mode mode, const MoveOptions& opts = {});

/// Only instances of one kind.
std::vector<MoveInstance> applicable_moves_of(const SokqPresentation& p, MoveKind kind);

/// Throws NotApplicable when the instance does not match p.
SokqPresentation apply(const SokqPresentation& p, const MoveInstance& m);

/// A move that undoes `m` on apply(before, m), up to canonical equality.
MoveInstance invert(const MoveInstance& m, const SokqPresentation& before);

struct MovePath {
  std::vector<std::pair<MoveInstance, std::string>> steps;  // move, resulting key
};

}  // namespace sokq
