#pragma once

#include <cstdint>
#include <vector>

#include "sokq/core.hpp"
#include "sokq/gauss.hpp"
#include "sokq/quandle.hpp"

namespace sokq {

class NotAKnot : public SokqError {
 public:
  using SokqError::SokqError;
};

/// Assignments of quandle elements to generators satisfying every relation.
/// Signs play no part.
std::uint64_t coloring_count(const SignedPresentation& sp, const FiniteQuandle& q);
std::uint64_t coloring_count(const SokqPresentation& p, const FiniteQuandle& q);

/// Successor orbits, each rotated to its smallest label, sorted.
std::vector<CyclicWord> cyclic_class_order(const SokqPresentation& p);

/// Arcs numbered 1..n from the canonical basepoint; the class contents read
/// in arc order, rotated to start at 1.
struct OrderCycle {
  std::vector<int> word;

  friend bool operator==(const OrderCycle&, const OrderCycle&) = default;
};

OrderCycle order_cycle(const SokqPresentation& p);

/// Cyclic-word equality.
bool same_cycle(const OrderCycle& a, const OrderCycle& b);

int odd_writhe(const GaussCode& g);

/// One entry per component of cyclic_class_order.
std::vector<int> writhe_per_component(const SokqPresentation& p);

}  // namespace sokq
