#include "sokq/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sokq {

Roles roles(const Relation& r) {
  bool input_inbound = (r.triangle == Triangle::Right) == (r.sign == Sign::Pos);
  if (input_inbound) return {r.input, r.output, r.op};
  return {r.output, r.input, r.op};
}

bool is_canonical(const Relation& r) {
  return (r.sign == Sign::Pos) == (r.triangle == Triangle::Right);
}

Relation canonicalize_relation(const Relation& r) {
  if (is_canonical(r)) return r;
  // y ~ x <> z  is equivalent to  x ~ y <>bar z
  return Relation{r.input, r.output, r.op, flip(r.triangle), r.sign};
}

const RoleIndex::Entry& RoleIndex::at(const std::string& g) const {
  auto it = by_generator.find(g);
  if (it == by_generator.end()) throw SokqError("unknown generator '" + g + "'");
  return it->second;
}

bool RoleIndex::is_loop(const std::string& g) const {
  const auto& e = at(g);
  return e.inbound.empty() && e.outbound.empty();
}

RoleIndex build_role_index(const SignedPresentation& sp) {
  RoleIndex index;
  for (const auto& g : sp.generators) index.by_generator[g];
  auto entry = [&](const std::string& g) -> RoleIndex::Entry& {
    auto it = index.by_generator.find(g);
    if (it == index.by_generator.end()) throw SokqError("relation references undeclared generator '" + g + "'");
    return it->second;
  };
  for (int i = 0; i < static_cast<int>(sp.relations.size()); ++i) {
    Roles ro = roles(sp.relations[i]);
    entry(ro.inbound).inbound.push_back(i);
    entry(ro.outbound).outbound.push_back(i);
    entry(ro.op).as_operator.push_back(i);
  }
  return index;
}

std::string KnotlikeReport::describe() const {
  std::ostringstream out;
  for (const auto& p : problems) out << p << "\n";
  for (const auto& v : violations) {
    out << "generator " << v.generator << ": inbound " << v.inbound << ", outbound " << v.outbound
        << ", operator " << v.as_operator << "\n";
  }
  return out.str();
}

std::string Report::describe() const {
  std::ostringstream out;
  for (const auto& p : problems) out << p << "\n";
  return out.str();
}

KnotlikeReport validate_knotlike(const SignedPresentation& sp) {
  KnotlikeReport report;
  std::set<std::string> seen;
  for (const auto& g : sp.generators) {
    if (g.empty()) report.problems.push_back("empty generator label");
    if (!seen.insert(g).second) report.problems.push_back("duplicate generator '" + g + "'");
  }
  std::map<std::string, RoleViolation> counts;
  for (const auto& g : sp.generators) counts[g].generator = g;
  for (const auto& r : sp.relations) {
    for (const auto* g : {&r.output, &r.input, &r.op}) {
      if (!seen.count(*g)) report.problems.push_back("relation references undeclared generator '" + *g + "'");
    }
    Roles ro = roles(r);
    if (counts.count(ro.inbound)) ++counts[ro.inbound].inbound;
    if (counts.count(ro.outbound)) ++counts[ro.outbound].outbound;
    if (counts.count(ro.op)) ++counts[ro.op].as_operator;
  }
  for (const auto& g : sp.generators) {
    const auto& c = counts[g];
    bool threaded = c.inbound == 1 && c.outbound == 1;
    bool loop = c.inbound == 0 && c.outbound == 0;
    if (!threaded && !loop) report.violations.push_back(c);
  }
  return report;
}

Report validate_order_info(const SokqPresentation& p) {
  Report report;
  RoleIndex index;
  try {
    index = build_role_index(p.sp);
  } catch (const SokqError& e) {
    report.problems.push_back(e.what());
    return report;
  }
  for (const auto& [label, contents] : p.order.classes) {
    if (!index.by_generator.count(label)) report.problems.push_back("order class for undeclared generator '" + label + "'");
  }
  for (const auto& g : p.order.cyclic) {
    if (!index.by_generator.count(g)) report.problems.push_back("cyclic flag on undeclared generator '" + g + "'");
  }
  for (const auto& g : p.sp.generators) {
    std::vector<std::string> expected;
    for (int ri : index.at(g).as_operator) expected.push_back(roles(p.sp.relations[ri]).inbound);
    auto it = p.order.classes.find(g);
    if (it == p.order.classes.end()) {
      report.problems.push_back("generator '" + g + "' has no order class");
      continue;
    }
    std::vector<std::string> actual = it->second;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) {
      std::string msg = "class of '" + g + "' should contain {";
      for (const auto& e : expected) msg += " " + e;
      msg += " } (inbound operands of relations with operator " + g + ")";
      report.problems.push_back(msg);
    }
    bool loop = index.is_loop(g);
    if (loop != (p.order.cyclic.count(g) > 0)) {
      report.problems.push_back(std::string("cyclic flag of '") + g + "' should be " + (loop ? "set" : "clear"));
    }
  }
  return report;
}

void require_valid(const SokqPresentation& p) {
  auto k = validate_knotlike(p.sp);
  if (!k.ok()) throw SokqError("presentation is not knotlike:\n" + k.describe());
  auto o = validate_order_info(p);
  if (!o.ok()) throw SokqError("order information is inconsistent:\n" + o.describe());
}

std::vector<CyclicWord> derived_class_order(const SignedPresentation& sp) {
  RoleIndex index = build_role_index(sp);
  std::map<std::string, std::string> successor;
  for (const auto& r : sp.relations) {
    Roles ro = roles(r);
    successor[ro.inbound] = ro.outbound;
  }
  std::vector<CyclicWord> out;
  std::set<std::string> done;
  for (const auto& g : sp.generators) {
    if (done.count(g)) continue;
    CyclicWord word;
    if (index.is_loop(g)) {
      word.push_back(g);
      done.insert(g);
    } else {
      std::string cur = g;
      while (!done.count(cur)) {
        done.insert(cur);
        word.push_back(cur);
        auto it = successor.find(cur);
        if (it == successor.end()) throw SokqError("generator '" + cur + "' has no successor");
        cur = it->second;
      }
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::vector<CyclicWord> derived_class_order(const SokqPresentation& p) { return derived_class_order(p.sp); }

std::optional<int> relation_with_inbound(const SignedPresentation& sp, const std::string& g) {
  for (int i = 0; i < static_cast<int>(sp.relations.size()); ++i) {
    if (roles(sp.relations[i]).inbound == g) return i;
  }
  return std::nullopt;
}

SokqPresentation reflect(const SokqPresentation& p) {
  // Old outbound operand of the crossing whose old inbound operand is x.
  std::map<std::string, std::string> outbound_of;
  std::vector<Relation> rels;
  for (const auto& r : p.sp.relations) {
    Roles ro = roles(r);
    outbound_of[ro.inbound] = ro.outbound;
    Relation f = r;
    f.sign = flip(r.sign);
    rels.push_back(canonicalize_relation(f));
  }
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& [label, contents] : p.order.classes) {
    std::vector<std::string> rebuilt;
    for (auto it = contents.rbegin(); it != contents.rend(); ++it) rebuilt.push_back(outbound_of.at(*it));
    classes[label] = std::move(rebuilt);
  }
  return make_presentation(p.sp.generators, std::move(rels), std::move(classes));
}

SokqPresentation make_presentation(std::vector<std::string> generators, std::vector<Relation> relations,
                                   std::map<std::string, std::vector<std::string>> classes) {
  SokqPresentation p;
  p.sp.generators = std::move(generators);
  for (auto& r : relations) p.sp.relations.push_back(canonicalize_relation(r));
  for (const auto& g : p.sp.generators) p.order.classes[g];
  for (auto& [label, contents] : classes) p.order.classes[label] = std::move(contents);
  RoleIndex index = build_role_index(p.sp);
  for (const auto& g : p.sp.generators) {
    if (index.is_loop(g)) p.order.cyclic.insert(g);
  }
  return p;
}

std::vector<SignedPresentation> coherent_signings(const std::vector<std::string>& generators,
                                                  const std::vector<UnsignedRelation>& rels) {
  const int n = static_cast<int>(rels.size());
  // Operand occurrences per generator: (relation, is_input_slot).
  std::map<std::string, std::vector<std::pair<int, bool>>> slots;
  for (int i = 0; i < n; ++i) {
    slots[rels[i].output].push_back({i, false});
    slots[rels[i].input].push_back({i, true});
  }
  // orient[i] == 1 means the input operand of relation i is inbound.
  struct Edge {
    int other;
    int parity;  // orient[i] xor orient[other] must equal parity
  };
  std::vector<std::vector<Edge>> graph(n);
  for (const auto& [g, occ] : slots) {
    if (occ.size() != 2) {
      throw NoCoherentSigning("generator '" + g + "' occurs " + std::to_string(occ.size()) +
                              " times as an operand; a knotlike presentation needs exactly 2");
    }
    auto [r1, in1] = occ[0];
    auto [r2, in2] = occ[1];
    if (r1 == r2) continue;  // output == input: one slot inbound, one outbound whatever the sign
    int parity = 1 ^ static_cast<int>(in1) ^ static_cast<int>(in2);
    graph[r1].push_back({r2, parity});
    graph[r2].push_back({r1, parity});
  }
  std::vector<int> group(n, -1), orient(n, 0);
  int groups = 0;
  for (int s = 0; s < n; ++s) {
    if (group[s] >= 0) continue;
    group[s] = groups;
    orient[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int r = queue.front();
      queue.pop_front();
      for (const auto& e : graph[r]) {
        int want = orient[r] ^ e.parity;
        if (group[e.other] < 0) {
          group[e.other] = groups;
          orient[e.other] = want;
          queue.push_back(e.other);
        } else if (orient[e.other] != want) {
          throw NoCoherentSigning("sign propagation reaches a contradiction at relation " + std::to_string(e.other + 1));
        }
      }
    }
    ++groups;
  }
  if (groups > 24) throw SokqError("too many independent sign groups to enumerate");
  std::vector<SignedPresentation> out;
  for (long mask = 0; mask < (1L << groups); ++mask) {
    SignedPresentation sp;
    sp.generators = generators;
    for (int i = 0; i < n; ++i) {
      int o = orient[i] ^ static_cast<int>((mask >> group[i]) & 1);
      bool right = rels[i].triangle == Triangle::Right;
      // input inbound <=> (right, pos) or (left, neg)
      Sign s = (o == 1) == right ? Sign::Pos : Sign::Neg;
      sp.relations.push_back(Relation{rels[i].output, rels[i].input, rels[i].op, rels[i].triangle, s});
    }
    auto report = validate_knotlike(sp);
    if (!report.ok()) throw NoCoherentSigning("propagated signing is not knotlike:\n" + report.describe());
    out.push_back(std::move(sp));
  }
  return out;
}

std::string to_string(Sign s) { return s == Sign::Pos ? "+" : "-"; }
std::string to_string(Triangle t) { return t == Triangle::Right ? "|>" : "<|"; }

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Virtual: return "virtual";
    case Mode::Welded: return "welded";
    case Mode::FramedVirtual: return "framed-virtual";
    case Mode::FramedWelded: return "framed-welded";
  }
  return "virtual";
}

Mode parse_mode(const std::string& text) {
  if (text == "virtual") return Mode::Virtual;
  if (text == "welded") return Mode::Welded;
  if (text == "framed-virtual") return Mode::FramedVirtual;
  if (text == "framed-welded") return Mode::FramedWelded;
  throw SokqError("unknown mode '" + text + "' (expected virtual, welded, framed-virtual or framed-welded)");
}

}  // namespace sokq
