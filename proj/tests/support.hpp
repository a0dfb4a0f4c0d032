#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sokq/core.hpp"
#include "sokq/gauss.hpp"
#include "sokq/shortform.hpp"

namespace support {

std::string read_file(const std::string& path);

/// Loads data/<name>; .gauss files are converted.
sokq::SokqPresentation corpus(const std::string& name);
sokq::GaussCode corpus_gauss(const std::string& name);

/// Small presentations used for move sweeps.
std::vector<std::pair<std::string, sokq::SokqPresentation>> move_corpus();

/// Diagrams one R2 introduction away from small corpus entries that admit a
/// third move, plus the three-component link.
std::vector<std::pair<std::string, sokq::SokqPresentation>> r3_corpus();

/// General presentation texts with nested terms, for short-form checks.
const std::vector<std::string>& general_corpus();

/// Short presentation as a signed one (signs are irrelevant to colorings).
sokq::SignedPresentation as_signed(const sokq::ShortPresentation& sp);

inline std::mt19937& rng() {
  static std::mt19937 gen(20261016);
  return gen;
}

}  // namespace support
