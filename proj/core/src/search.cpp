#include "sokq/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "json.hpp"
#include "sokq/diagram.hpp"

namespace sokq {

namespace {

constexpr int kEnd = -1, kLoop = -2, kCycle = -3, kArcEnd = -4, kPos = -5, kNeg = -6;

// Integer view of a presentation: generator indices, successor orbits,
// inbound signs, operator of each inbound and class contents.
struct Shape {
  std::vector<std::string> names;
  std::vector<std::vector<int>> comps;
  std::vector<bool> loop;
  std::vector<int> sign;   // per generator, 0 when it is never inbound
  std::vector<int> op;     // per generator, -1 when it is never inbound
  std::vector<std::vector<int>> classes;
};

Shape shape_of(const SokqPresentation& p) {
  Shape s;
  s.names = p.sp.generators;
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(s.names.size()); ++i) id[s.names[i]] = i;
  s.sign.assign(s.names.size(), 0);
  s.op.assign(s.names.size(), -1);
  for (const auto& r : p.sp.relations) {
    Roles ro = roles(r);
    int g = id.at(ro.inbound);
    s.sign[g] = sign_value(r.sign);
    s.op[g] = id.at(ro.op);
  }
  s.classes.resize(s.names.size());
  for (const auto& [g, cls] : p.order.classes)
    for (const auto& x : cls) s.classes[id.at(g)].push_back(id.at(x));
  for (const auto& word : derived_class_order(p)) {
    std::vector<int> c;
    for (const auto& g : word) c.push_back(id.at(g));
    s.loop.push_back(s.sign[c.front()] == 0);
    s.comps.push_back(std::move(c));
  }
  return s;
}

void min_rotation(std::vector<int>& v) {
  if (v.empty()) return;
  std::vector<int> best = v;
  for (size_t r = 1; r < v.size(); ++r) {
    std::vector<int> cand(v.begin() + r, v.end());
    cand.insert(cand.end(), v.begin(), v.begin() + r);
    if (cand < best) best = std::move(cand);
  }
  v = std::move(best);
}

std::vector<int> class_code(const Shape& s, const std::vector<int>& label, int g, bool sorted) {
  std::vector<int> c;
  for (int x : s.classes[g]) c.push_back(label[x]);
  if (sorted) std::sort(c.begin(), c.end());
  return c;
}

struct Best {
  std::vector<int> code;
  std::vector<int> label;
  bool have = false;
};

void search_labelings(const Shape& s, bool sorted, Best& best) {
  const size_t k = s.comps.size();
  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> label(s.names.size());
  do {
    std::vector<size_t> rot(k, 0);
    while (true) {
      int next = 0;
      for (size_t i : perm) {
        const auto& c = s.comps[i];
        for (size_t j = 0; j < c.size(); ++j) label[c[(j + rot[i]) % c.size()]] = next++;
      }
      std::vector<int> code;
      for (size_t i : perm) {
        const auto& c = s.comps[i];
        if (s.loop[i]) {
          code.push_back(kLoop);
          auto cls = class_code(s, label, c[0], sorted);
          if (!sorted) min_rotation(cls);
          code.insert(code.end(), cls.begin(), cls.end());
        } else {
          code.push_back(kCycle);
          for (size_t j = 0; j < c.size(); ++j) {
            int g = c[(j + rot[i]) % c.size()];
            code.push_back(s.sign[g] > 0 ? kPos : kNeg);
            auto cls = class_code(s, label, g, sorted);
            code.insert(code.end(), cls.begin(), cls.end());
            code.push_back(kArcEnd);
          }
        }
        code.push_back(kEnd);
      }
      if (!best.have || code < best.code) {
        best.code = std::move(code);
        best.label = label;
        best.have = true;
      }
      size_t i = 0;
      for (; i < k; ++i) {
        if (++rot[i] < s.comps[i].size()) break;
        rot[i] = 0;
      }
      if (i == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::string render(const std::vector<int>& code) {
  std::string out;
  bool first_in_class = true, loop = false;
  for (int t : code) {
    switch (t) {
      case kLoop:
        out += "{";
        loop = true;
        first_in_class = true;
        break;
      case kCycle:
        out += "(";
        loop = false;
        break;
      case kPos:
      case kNeg:
        out += t == kPos ? "+[" : "-[";
        first_in_class = true;
        break;
      case kArcEnd: out += "]"; break;
      case kEnd: out += loop ? "}" : ")"; break;
      default:
        if (!first_in_class) out += ",";
        first_in_class = false;
        out += std::to_string(t + 1);
    }
  }
  return out;
}

std::string key_of(const SokqPresentation& p, bool sorted) {
  Shape s = shape_of(p);
  Best best;
  search_labelings(s, sorted, best);
  return render(best.code);
}

MoveKind inverse_kind(MoveKind k) {
  switch (k) {
    case MoveKind::R1Intro: return MoveKind::R1Elim;
    case MoveKind::R1Elim: return MoveKind::R1Intro;
    case MoveKind::R2Intro: return MoveKind::R2Elim;
    case MoveKind::R2Elim: return MoveKind::R2Intro;
    default: return k;
  }
}

std::size_t state_cap(const SearchOptions& opts) {
  if (opts.max_states) return opts.max_states;
  if (const char* env = std::getenv("SOKQ_MAX_STATES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return 2'000'000;
}

struct Node {
  std::string parent;
  MoveInstance move;
};

struct Side {
  std::map<std::string, Node> seen;
  std::map<std::string, SokqPresentation> states;
  std::vector<std::string> frontier;
  int depth = 0;

  void root(const Canonical& c) {
    seen[c.key] = Node{};
    states[c.key] = c.presentation;
    frontier = {c.key};
  }
};

// Smaller presentations first: reductions tend to meet sooner.
void order_frontier(Side& side) {
  std::vector<std::pair<size_t, std::string>> sized;
  for (auto& k : side.frontier) sized.emplace_back(side.states.at(k).sp.relations.size(), std::move(k));
  std::sort(sized.begin(), sized.end());
  side.frontier.clear();
  for (auto& [n, k] : sized) side.frontier.push_back(std::move(k));
}

// Walks parent pointers from `key` back to the root; steps come out in root
// to `key` order.
MovePath path_to(const Side& side, std::string key) {
  MovePath path;
  while (!side.seen.at(key).parent.empty()) {
    const Node& n = side.seen.at(key);
    path.steps.emplace_back(n.move, key);
    key = n.parent;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

}  // namespace

Canonical canonicalize(const SokqPresentation& p) {
  Shape s = shape_of(p);
  Best best;
  search_labelings(s, false, best);
  const int n = static_cast<int>(s.names.size());
  std::vector<std::string> names(n);
  std::vector<int> by_label(n);
  for (int g = 0; g < n; ++g) {
    names[g] = default_label(best.label[g]);
    by_label[best.label[g]] = g;
  }
  std::vector<int> succ(n, -1);
  for (const auto& c : s.comps)
    for (size_t j = 0; j < c.size(); ++j) succ[c[j]] = c[(j + 1) % c.size()];

  std::vector<std::string> gens;
  std::vector<Relation> rels;
  std::map<std::string, std::vector<std::string>> classes;
  for (int l = 0; l < n; ++l) {
    int g = by_label[l];
    gens.push_back(names[g]);
    std::vector<int> cls;
    for (int x : s.classes[g]) cls.push_back(best.label[x]);
    if (s.sign[g] == 0) min_rotation(cls);
    auto& out = classes[names[g]];
    for (int x : cls) out.push_back(default_label(x));
    if (s.sign[g] != 0) {
      Sign sg = s.sign[g] > 0 ? Sign::Pos : Sign::Neg;
      rels.push_back(Relation{names[succ[g]], names[g], names[s.op[g]], sg == Sign::Pos ? Triangle::Right : Triangle::Left, sg});
    }
  }
  return Canonical{make_presentation(std::move(gens), std::move(rels), std::move(classes)), render(best.code)};
}

std::string canonical_key(const SokqPresentation& p) { return key_of(p, false); }

std::string skq_key(const SokqPresentation& p) { return key_of(p, true); }

std::optional<MoveInstance> find_move(const SokqPresentation& from, MoveKind kind, const std::string& target) {
  for (const auto& m : applicable_moves_of(from, kind)) {
    if (canonical_key(apply(from, m)) == target) return m;
  }
  return std::nullopt;
}

SearchResult connect(const SokqPresentation& p1, const SokqPresentation& p2, Mode mode, const SearchOptions& opts) {
  SearchResult result;
  Canonical c1 = canonicalize(p1), c2 = canonicalize(p2);
  if (c1.key == c2.key) {
    result.status = SearchStatus::Found;
    return result;
  }
  const std::size_t cap = state_cap(opts);
  MoveOptions mopts;
  mopts.r2_pair_cap = opts.r2_pair_cap;
  Side fwd, bwd;
  fwd.root(c1);
  bwd.root(c2);
  std::string meet;
  while (meet.empty() && fwd.depth + bwd.depth < opts.max_depth && !fwd.frontier.empty() && !bwd.frontier.empty()) {
    const bool forward = fwd.frontier.size() <= bwd.frontier.size();
    Side& side = forward ? fwd : bwd;
    const Side& other = forward ? bwd : fwd;
    order_frontier(side);
    std::vector<std::string> next;
    for (const auto& key : side.frontier) {
      const SokqPresentation state = side.states.at(key);
      mopts.include_intro = static_cast<int>(state.sp.relations.size()) < opts.max_crossings;
      for (const auto& m : applicable_moves(state, mode, mopts)) {
        SokqPresentation q = apply(state, m);
        if (static_cast<int>(q.sp.relations.size()) > opts.max_crossings) continue;
        Canonical c = canonicalize(q);
        ++result.states_explored;
        if (side.seen.count(c.key)) continue;
        side.seen[c.key] = Node{key, m};
        side.states[c.key] = std::move(c.presentation);
        next.push_back(c.key);
        if (other.seen.count(c.key)) {
          meet = c.key;
          break;
        }
        if (result.states_explored >= cap) return result;
      }
      if (!meet.empty()) break;
    }
    side.frontier = std::move(next);
    ++side.depth;
  }
  if (meet.empty()) return result;

  result.path = path_to(fwd, meet);
  std::string cur = meet;
  while (!bwd.seen.at(cur).parent.empty()) {
    const Node& n = bwd.seen.at(cur);
    auto inv = find_move(bwd.states.at(cur), inverse_kind(n.move.kind), n.parent);
    if (!inv) throw SokqError("could not invert " + to_string(n.move));
    result.path.steps.emplace_back(*inv, n.parent);
    cur = n.parent;
  }
  result.status = SearchStatus::Found;
  result.depth = static_cast<int>(result.path.steps.size());
  return result;
}

SearchResult simplify(const SokqPresentation& p, Mode mode, const SearchOptions& opts) {
  SearchResult result;
  const std::size_t cap = state_cap(opts);
  Canonical c0 = canonicalize(p);
  const int start_size = static_cast<int>(c0.presentation.sp.relations.size());
  std::pair<size_t, std::string> best{start_size, c0.key};
  result.best = c0.presentation;
  // Widen the crossing allowance one step at a time; most reductions need no
  // growth and the narrow passes are cheap.
  for (int allowance = std::min(start_size, opts.max_crossings); allowance <= opts.max_crossings; ++allowance) {
    Side side;
    side.root(c0);
    auto done = [&] { return best.first == 0 || result.states_explored >= cap; };
    bool improved = false;
    while (!done() && side.depth < opts.max_depth && !side.frontier.empty()) {
      order_frontier(side);
      std::vector<std::string> next;
      for (const auto& key : side.frontier) {
        const SokqPresentation state = side.states.at(key);
        MoveOptions mopts;
        mopts.r2_pair_cap = opts.r2_pair_cap;
        mopts.include_intro = static_cast<int>(state.sp.relations.size()) < allowance;
        for (const auto& m : applicable_moves(state, mode, mopts)) {
          SokqPresentation q = apply(state, m);
          if (static_cast<int>(q.sp.relations.size()) > allowance) continue;
          Canonical c = canonicalize(q);
          ++result.states_explored;
          if (side.seen.count(c.key)) continue;
          side.seen[c.key] = Node{key, m};
          std::pair<size_t, std::string> score{c.presentation.sp.relations.size(), c.key};
          if (score < best) {
            best = score;
            improved = true;
          }
          side.states[c.key] = std::move(c.presentation);
          next.push_back(c.key);
          if (done()) break;
        }
        if (done()) break;
      }
      side.frontier = std::move(next);
      ++side.depth;
    }
    if (improved) {
      result.path = path_to(side, best.second);
      result.best = side.states.at(best.second);
    }
    if (best.first == 0 || result.states_explored >= cap) break;
  }
  result.status = SearchStatus::Found;
  result.depth = static_cast<int>(result.path.steps.size());
  return result;
}

SokqPresentation replay(const SokqPresentation& start, const MovePath& path) {
  SokqPresentation s = canonicalize(start).presentation;
  for (const auto& [m, key] : path.steps) {
    Canonical c = canonicalize(apply(s, m));
    if (c.key != key) throw SokqError("step " + to_string(m) + " reached " + c.key + ", expected " + key);
    s = std::move(c.presentation);
  }
  return s;
}

std::string search_result_json(const SearchResult& r) {
  nlohmann::json j;
  j["status"] = r.status == SearchStatus::Found ? "found" : "not_found";
  j["depth"] = r.depth;
  j["path"] = nlohmann::json::array();
  for (const auto& [m, key] : r.path.steps) j["path"].push_back(to_string(m));
  j["states_explored"] = r.states_explored;
  return j.dump();
}

std::set<std::string> enumerate_diagrams(int n, Mode mode, const EnumerateOptions& opts) {
  if (n < 0 || n > opts.cap) throw SokqError("enumeration is capped at " + std::to_string(opts.cap) + " crossings");
  std::set<std::string> keys;
  const bool welded = is_welded(mode);
  auto key = [&](const SokqPresentation& p) { return welded ? skq_key(p) : canonical_key(p); };
  if (n == 0) {
    if (opts.include_loops) keys.insert(key(make_presentation({"a"}, {}, {})));
    return keys;
  }
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) gens.push_back(default_label(i));
  int powers = 1;
  for (int i = 0; i < n; ++i) powers *= n;

  std::vector<int> succ(n);
  std::iota(succ.begin(), succ.end(), 0);
  do {
    for (int code = 0; code < powers; ++code) {
      std::vector<int> op(n);
      for (int i = 0, c = code; i < n; ++i, c /= n) op[i] = c % n;
      std::vector<std::vector<int>> members(n);
      for (int i = 0; i < n; ++i) members[op[i]].push_back(i);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Relation> rels;
        for (int i = 0; i < n; ++i) {
          Sign s = (mask >> i) & 1 ? Sign::Neg : Sign::Pos;
          rels.push_back(Relation{gens[succ[i]], gens[i], gens[op[i]], s == Sign::Pos ? Triangle::Right : Triangle::Left, s});
        }
        // Walk every combination of intra-class orders.
        auto orders = members;
        while (true) {
          std::map<std::string, std::vector<std::string>> classes;
          for (int z = 0; z < n; ++z)
            for (int i : orders[z]) classes[gens[z]].push_back(gens[i]);
          keys.insert(key(make_presentation(gens, rels, classes)));
          if (welded) break;
          int z = 0;
          for (; z < n; ++z)
            if (std::next_permutation(orders[z].begin(), orders[z].end())) break;
          if (z == n) break;
        }
      }
    }
  } while (std::next_permutation(succ.begin(), succ.end()));
  return keys;
}

}  // namespace sokq
