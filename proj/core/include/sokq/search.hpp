#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "sokq/core.hpp"
#include "sokq/moves.hpp"

namespace sokq {

/// Relabels arcs a, b, c, ... along the component order and basepoints that
/// minimize the key. Equal keys iff the presentations agree up to renaming
/// and rotation of closed-loop classes.
struct Canonical {
  SokqPresentation presentation;
  std::string key;
};

Canonical canonicalize(const SokqPresentation& p);
std::string canonical_key(const SokqPresentation& p);

/// As canonical_key, with each class read as a set.
std::string skq_key(const SokqPresentation& p);

/// First move of `kind` on `from` whose result has canonical key `target`.
std::optional<MoveInstance> find_move(const SokqPresentation& from, MoveKind kind, const std::string& target);

struct SearchOptions {
  int max_depth = 6;
  int max_crossings = 8;
  /// Defaults to $SOKQ_MAX_STATES, else two million.
  std::size_t max_states = 0;
  std::size_t r2_pair_cap = 0;
};

enum class SearchStatus { Found, NotFound };

/// Moves in `path` act on canonical presentations: starting from
/// canonicalize(p1), each step is applied and the result canonicalized.
struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  int depth = 0;
  MovePath path;
  std::size_t states_explored = 0;
  SokqPresentation best;  // simplify only
};

SearchResult connect(const SokqPresentation& p1, const SokqPresentation& p2, Mode mode, const SearchOptions& opts = {});
SearchResult simplify(const SokqPresentation& p, Mode mode, const SearchOptions& opts = {});

/// Replays a path from canonicalize(start). Throws NotApplicable or
/// SokqError when a step does not land on its recorded key.
SokqPresentation replay(const SokqPresentation& start, const MovePath& path);

std::string search_result_json(const SearchResult& r);

/// Keys of all n-crossing diagrams. Welded modes collapse class orders.
struct EnumerateOptions {
  int cap = 4;
  bool include_loops = false;
};

std::set<std::string> enumerate_diagrams(int n, Mode mode, const EnumerateOptions& opts = {});

}  // namespace sokq
