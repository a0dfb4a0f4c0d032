#pragma once

#include <string>

#include "sokq/core.hpp"
#include "sokq/gauss.hpp"

namespace sokq {

/// a, b, ..., z, a1, b1, ...
std::string default_label(int index);

/// Arcs run between consecutive under passes. Arcs are named a, b, c, ...
/// component by component, starting with the arc that contains the first
/// symbol of the component. A component with no under pass is one closed
/// arc.
SokqPresentation gauss_to_sokq(const GaussCode& g);

/// Walks each component from its smallest label, emitting every arc's over
/// passes in class order followed by its terminal under pass. The result is
/// normalized (crossings numbered by first appearance).
GaussCode sokq_to_gauss(const SokqPresentation& p);

}  // namespace sokq
