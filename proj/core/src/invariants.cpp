#include "sokq/invariants.hpp"

#include <algorithm>
#include <map>

#include "sokq/search.hpp"

namespace sokq {

namespace {

struct Constraint {
  int out, in, op;
  Triangle tri;
};

class Colorer {
 public:
  Colorer(const SignedPresentation& sp, const FiniteQuandle& q) : q_(q) {
    std::map<std::string, int> id;
    for (const auto& g : sp.generators) id.emplace(g, static_cast<int>(id.size()));
    n_ = static_cast<int>(id.size());
    for (const auto& r : sp.relations) cons_.push_back({id.at(r.output), id.at(r.input), id.at(r.op), r.triangle});
  }

  std::uint64_t count() { return search(std::vector<int>(n_, -1)); }

 private:
  // Forces every value implied by two known operands; false on a clash.
  bool propagate(std::vector<int>& v) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : cons_) {
        if (v[c.op] < 0) continue;
        if (v[c.in] >= 0) {
          int want = q_.apply(c.tri, v[c.in], v[c.op]);
          if (v[c.out] < 0) {
            v[c.out] = want;
            changed = true;
          } else if (v[c.out] != want) {
            return false;
          }
        } else if (v[c.out] >= 0) {
          v[c.in] = q_.apply(flip(c.tri), v[c.out], v[c.op]);
          changed = true;
        }
      }
    }
    return true;
  }

  std::uint64_t search(std::vector<int> v) const {
    if (!propagate(v)) return 0;
    auto free = std::find(v.begin(), v.end(), -1);
    if (free == v.end()) return 1;
    const auto at = free - v.begin();
    std::uint64_t total = 0;
    for (int x = 0; x < q_.size(); ++x) {
      v[at] = x;
      total += search(v);
    }
    return total;
  }

  const FiniteQuandle& q_;
  int n_ = 0;
  std::vector<Constraint> cons_;
};

}  // namespace

std::uint64_t coloring_count(const SignedPresentation& sp, const FiniteQuandle& q) { return Colorer(sp, q).count(); }

std::uint64_t coloring_count(const SokqPresentation& p, const FiniteQuandle& q) { return coloring_count(p.sp, q); }

std::vector<CyclicWord> cyclic_class_order(const SokqPresentation& p) {
  auto comps = derived_class_order(p);
  for (auto& c : comps) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

OrderCycle order_cycle(const SokqPresentation& p) {
  auto comps = derived_class_order(p);
  if (comps.size() != 1) throw NotAKnot("order cycle needs a single component");
  if (p.sp.relations.empty()) throw NotAKnot("order cycle needs at least one crossing");
  SokqPresentation c = canonicalize(p).presentation;
  std::map<std::string, int> number;
  for (const auto& g : c.sp.generators) number.emplace(g, static_cast<int>(number.size()) + 1);
  OrderCycle oc;
  for (const auto& g : c.sp.generators)
    for (const auto& x : c.order.classes.at(g)) oc.word.push_back(number.at(x));
  std::rotate(oc.word.begin(), std::min_element(oc.word.begin(), oc.word.end()), oc.word.end());
  return oc;
}

bool same_cycle(const OrderCycle& a, const OrderCycle& b) {
  if (a.word.size() != b.word.size()) return false;
  auto rotated = b.word;
  for (size_t r = 0; r < std::max<size_t>(rotated.size(), 1); ++r) {
    if (rotated == a.word) return true;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return false;
}

int odd_writhe(const GaussCode& g) {
  if (g.components.size() != 1) throw NotAKnot("odd writhe needs a single component");
  const auto& comp = g.components[0];
  std::map<int, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) at[comp[i].crossing].push_back(i);
  int total = 0;
  for (const auto& [id, pos] : at) {
    if ((pos[1] - pos[0] - 1) % 2 != 0) total += sign_value(comp[pos[0]].sign);
  }
  return total;
}

std::vector<int> writhe_per_component(const SokqPresentation& p) {
  std::map<std::string, int> sign_in;
  for (const auto& r : p.sp.relations) sign_in[roles(r).inbound] = sign_value(r.sign);
  std::vector<int> out;
  for (const auto& comp : cyclic_class_order(p)) {
    int w = 0;
    for (const auto& g : comp) {
      auto it = sign_in.find(g);
      if (it != sign_in.end()) w += it->second;
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace sokq
