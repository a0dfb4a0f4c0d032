#include "sokq/diagram.hpp"

#include <algorithm>
#include <map>

namespace sokq {

std::string default_label(int index) {
  std::string s(1, static_cast<char>('a' + index % 26));
  if (index >= 26) s += std::to_string(index / 26);
  return s;
}

SokqPresentation gauss_to_sokq(const GaussCode& code) {
  check_pairing(code);
  struct CrossingArcs {
    std::string inbound, outbound, over;
    Sign sign = Sign::Pos;
  };
  std::map<int, CrossingArcs> crossings;
  std::vector<std::string> gens;
  // Over passes per arc, as crossing ids in travel order.
  std::map<std::string, std::vector<int>> over_passes;
  int next_label = 0;

  for (const auto& comp : code.components) {
    const int len = static_cast<int>(comp.size());
    std::vector<int> unders;
    for (int i = 0; i < len; ++i)
      if (!comp[i].over) unders.push_back(i);
    if (unders.empty()) {
      std::string arc = default_label(next_label++);
      gens.push_back(arc);
      auto& passes = over_passes[arc];
      for (const auto& s : comp) {
        passes.push_back(s.crossing);
        crossings[s.crossing].over = arc;
        crossings[s.crossing].sign = s.sign;
      }
      continue;
    }
    const int m = static_cast<int>(unders.size());
    std::vector<std::string> arcs;
    for (int j = 0; j < m; ++j) {
      arcs.push_back(default_label(next_label++));
      gens.push_back(arcs.back());
    }
    for (int j = 0; j < m; ++j) {
      // Arc j ends at unders[j] and starts after the previous under pass.
      int from = (j == 0 ? unders[m - 1] - len : unders[j - 1]) + 1;
      auto& passes = over_passes[arcs[j]];
      for (int i = from; i < unders[j]; ++i) {
        const auto& s = comp[(i + len) % len];
        passes.push_back(s.crossing);
        crossings[s.crossing].over = arcs[j];
      }
      const auto& u = comp[unders[j]];
      crossings[u.crossing].inbound = arcs[j];
      crossings[u.crossing].outbound = arcs[(j + 1) % m];
      crossings[u.crossing].sign = u.sign;
    }
  }

  std::vector<Relation> rels;
  for (const auto& [id, c] : crossings) {
    Triangle t = c.sign == Sign::Pos ? Triangle::Right : Triangle::Left;
    rels.push_back(Relation{c.outbound, c.inbound, c.over, t, c.sign});
  }
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& [arc, passes] : over_passes) {
    auto& cls = classes[arc];
    for (int id : passes) cls.push_back(crossings.at(id).inbound);
  }
  return make_presentation(std::move(gens), std::move(rels), std::move(classes));
}

GaussCode sokq_to_gauss(const SokqPresentation& p) {
  auto comps = derived_class_order(p);
  for (auto& c : comps) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(comps.begin(), comps.end());

  std::map<std::string, int> rel_of_inbound;
  for (int i = 0; i < static_cast<int>(p.sp.relations.size()); ++i) rel_of_inbound[roles(p.sp.relations[i]).inbound] = i;
  std::map<int, int> id_of_relation;
  auto crossing_id = [&](int rel) {
    auto [it, fresh] = id_of_relation.try_emplace(rel, static_cast<int>(id_of_relation.size()) + 1);
    return it->second;
  };

  GaussCode g;
  for (const auto& comp : comps) {
    std::vector<GaussSymbol> seq;
    for (const auto& arc : comp) {
      for (const auto& x : p.order.classes.at(arc)) {
        int rel = rel_of_inbound.at(x);
        seq.push_back(GaussSymbol{true, crossing_id(rel), p.sp.relations[rel].sign});
      }
      auto end = rel_of_inbound.find(arc);
      if (end != rel_of_inbound.end()) {
        seq.push_back(GaussSymbol{false, crossing_id(end->second), p.sp.relations[end->second].sign});
      }
    }
    g.components.push_back(std::move(seq));
  }
  return g;
}

}  // namespace sokq
