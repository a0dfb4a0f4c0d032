#pragma once

// Text formats.
//
// Presentation (.sokq):
//   gens: a b
//   rels: b ~ a <|- a   a <|- a ~ b ...
//   order: ([a b]a []b) (...)
// Operation tokens |>+ |>- <|+ <|- (Unicode ▷ ◁ accepted). Exactly one side of
// `~` is a bare identifier. One parenthesized group per component lists the
// classes in cyclic order: `[contents]label`, or `{contents}label` for a
// closed-loop arc. `#` starts a comment.
//
// Gauss code (.gauss): `O1+ U2- ...`, components separated by `;`, an empty
// component written `()`.
//
// Quandle table (.quandle): header `quandle n` (or `rack n`), then n*n
// integers, row-major, entry (i, j) = i ▷ j.

#include <cstddef>
#include <string>
#include <vector>

#include "sokq/core.hpp"
#include "sokq/gauss.hpp"
#include "sokq/quandle.hpp"
#include "sokq/shortform.hpp"

namespace sokq {

struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public SokqError {
 public:
  ParseError(const std::string& message, Span span);

  const Span& span() const { return span_; }

 private:
  Span span_;
};

/// Well-formed text whose presentation fails a validator.
class SemanticError : public SokqError {
 public:
  using SokqError::SokqError;
};

struct PresentationDoc {
  SokqPresentation presentation;
  std::vector<Span> token_spans;
};

PresentationDoc parse_presentation_doc(const std::string& text);
SokqPresentation parse_presentation(const std::string& text);

/// Canonical text: components rotated to their smallest label and sorted,
/// relations listed by the position of their inbound operand in the order
/// section, generators in component order.
std::string serialize_presentation(const SokqPresentation& p);

/// JSON mirror: {"gens": [...], "rels": [[out, in, op, tri, sign], ...],
/// "order": [[{"label", "class", "cyclic"}, ...], ...]}.
std::string presentation_to_json(const SokqPresentation& p);
SokqPresentation presentation_from_json(const std::string& text);

/// General presentations allow nested, parenthesized terms on both sides of
/// `~`; operation signs are optional and ignored. No order section.
GeneralPresentation parse_general_presentation(const std::string& text);
std::string serialize_short_form(const ShortPresentation& sp);

GaussCode parse_gauss(const std::string& text);
std::string serialize_gauss(const GaussCode& g);

FiniteQuandle parse_quandle_table(const std::string& text);
std::string serialize_quandle_table(const FiniteQuandle& q);

std::string relation_text(const Relation& r);

}  // namespace sokq
