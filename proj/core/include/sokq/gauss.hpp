#pragma once

// Signed Gauss codes: per component, the cyclic sequence of over/under
// passes met while travelling along it. Virtual crossings never appear.

#include <string>
#include <vector>

#include "sokq/core.hpp"

namespace sokq {

struct GaussSymbol {
  bool over = false;
  int crossing = 0;
  Sign sign = Sign::Pos;

  friend bool operator==(const GaussSymbol&, const GaussSymbol&) = default;
};

struct GaussCode {
  std::vector<std::vector<GaussSymbol>> components;

  int crossing_count() const;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

class GaussPairingError : public SokqError {
 public:
  using SokqError::SokqError;
};

/// Every crossing id must occur exactly once over and once under, with the
/// same sign at both passes.
void check_pairing(const GaussCode& g);

/// Renumbers crossings 1..n by first appearance.
GaussCode normalize_gauss(const GaussCode& g);

/// Minimum over component orderings and rotations of the normalized code,
/// rendered as text. Equal keys iff the codes describe the same diagram.
std::string gauss_canonical_key(const GaussCode& g);

}  // namespace sokq
