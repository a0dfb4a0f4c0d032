#pragma once

// Domain types for signed ordered knotlike quandle (SOKQ) presentations.
//
// A relation `output ~ input <op,sign> operator` stands for one crossing of a
// virtual link diagram. The (triangle, sign) pair decides which operand is the
// arc running into the crossing (inbound) and which runs out of it
// (outbound). Generators are arcs; the order information records, for each
// arc, the inbound operands of the crossings it passes over, in the order
// they are met.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sokq {

enum class Triangle { Right, Left };
enum class Sign { Pos, Neg };
enum class Mode { Virtual, Welded, FramedVirtual, FramedWelded };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }
inline Triangle flip(Triangle t) { return t == Triangle::Right ? Triangle::Left : Triangle::Right; }
inline int sign_value(Sign s) { return s == Sign::Pos ? 1 : -1; }

inline bool is_framed(Mode m) { return m == Mode::FramedVirtual || m == Mode::FramedWelded; }
inline bool is_welded(Mode m) { return m == Mode::Welded || m == Mode::FramedWelded; }

/// Any structurally malformed input (unknown generator, broken reference).
class SokqError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoCoherentSigning : public SokqError {
 public:
  using SokqError::SokqError;
};

struct Relation {
  std::string output;
  std::string input;
  std::string op;
  Triangle triangle = Triangle::Right;
  Sign sign = Sign::Pos;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Roles {
  std::string inbound;
  std::string outbound;
  std::string op;

  friend bool operator==(const Roles&, const Roles&) = default;
};

/// Inbound is the input operand exactly when (triangle, sign) is (▷,+) or (◁,−).
Roles roles(const Relation& r);

/// Rewrites the relation so that Pos pairs with ▷ and Neg with ◁; afterwards
/// the input operand is always the inbound one.
Relation canonicalize_relation(const Relation& r);

bool is_canonical(const Relation& r);

struct SignedPresentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  friend bool operator==(const SignedPresentation&, const SignedPresentation&) = default;
};

struct OrderInfo {
  // Class contents per generator, in undercrossing order along the arc.
  std::map<std::string, std::vector<std::string>> classes;
  // Generators whose class is cyclically ordered (closed-loop arcs).
  std::set<std::string> cyclic;

  friend bool operator==(const OrderInfo&, const OrderInfo&) = default;
};

struct SokqPresentation {
  SignedPresentation sp;
  OrderInfo order;

  friend bool operator==(const SokqPresentation&, const SokqPresentation&) = default;
};

/// Per-generator incidence: which relation (by index) has it inbound,
/// outbound, and as operator.
struct RoleIndex {
  struct Entry {
    std::vector<int> inbound;
    std::vector<int> outbound;
    std::vector<int> as_operator;
  };
  std::map<std::string, Entry> by_generator;

  const Entry& at(const std::string& g) const;
  /// Generator appearing in no inbound/outbound position.
  bool is_loop(const std::string& g) const;
};

RoleIndex build_role_index(const SignedPresentation& sp);

struct RoleViolation {
  std::string generator;
  int inbound = 0;
  int outbound = 0;
  int as_operator = 0;
};

struct KnotlikeReport {
  std::vector<RoleViolation> violations;
  std::vector<std::string> problems;  // unknown generators, duplicates

  bool ok() const { return violations.empty() && problems.empty(); }
  std::string describe() const;
};

KnotlikeReport validate_knotlike(const SignedPresentation& sp);

struct Report {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::string describe() const;
};

/// Class contents must match the inbound operands grouped by operator, and
/// the cyclic flags must mark exactly the closed-loop arcs.
Report validate_order_info(const SokqPresentation& p);

/// Throws SokqError with the combined report if either validator fails.
void require_valid(const SokqPresentation& p);

using CyclicWord = std::vector<std::string>;

/// Successor orbits (a -> outbound of the relation with inbound a); loops form
/// singleton components. Components are listed in generator order.
std::vector<CyclicWord> derived_class_order(const SignedPresentation& sp);
std::vector<CyclicWord> derived_class_order(const SokqPresentation& p);

/// Flips every sign. Roles swap, so every component reverses direction and
/// class contents are rebuilt from the new inbound operands.
SokqPresentation reflect(const SokqPresentation& p);

struct UnsignedRelation {
  std::string output;
  std::string input;
  std::string op;
  Triangle triangle = Triangle::Right;

  friend bool operator==(const UnsignedRelation&, const UnsignedRelation&) = default;
};

/// All sign vectors making the relations knotlike, found by propagating one
/// sign choice per linked group of relations. Throws NoCoherentSigning.
std::vector<SignedPresentation> coherent_signings(const std::vector<std::string>& generators,
                                                  const std::vector<UnsignedRelation>& rels);

/// Assembles a presentation from relations (canonicalized) and class
/// contents; missing classes become empty and cyclic flags are derived.
SokqPresentation make_presentation(std::vector<std::string> generators,
                                   std::vector<Relation> relations,
                                   std::map<std::string, std::vector<std::string>> classes);

/// Index of the relation whose inbound operand is `g`, if any.
std::optional<int> relation_with_inbound(const SignedPresentation& sp, const std::string& g);

std::string to_string(Sign s);
std::string to_string(Triangle t);
std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

}  // namespace sokq
