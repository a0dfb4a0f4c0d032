#include "sokq/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sokq/search.hpp"

namespace sokq {

namespace {

// Arc-level view: every arc records the crossing it starts at, the crossing
// it ends at (both -1 for a closed loop) and the crossings it passes over.
// Crossing ids are relation indices plus any minted ones.
struct Arc {
  int start = -1;
  int end = -1;
  std::vector<int> over;

  bool loop() const { return start < 0; }
};

struct Work {
  std::vector<std::string> order;
  std::map<std::string, Arc> arcs;
  std::vector<Sign> sign;
  std::vector<bool> alive;
};

struct Index {
  std::map<int, std::string> start, end, over;
  std::map<int, int> pos;
};

Work from_presentation(const SokqPresentation& p) {
  Work w;
  w.order = p.sp.generators;
  for (const auto& g : w.order) w.arcs[g];
  std::map<std::string, int> by_inbound;
  for (int i = 0; i < static_cast<int>(p.sp.relations.size()); ++i) {
    Roles r = roles(p.sp.relations[i]);
    w.arcs.at(r.inbound).end = i;
    w.arcs.at(r.outbound).start = i;
    by_inbound[r.inbound] = i;
    w.sign.push_back(p.sp.relations[i].sign);
    w.alive.push_back(true);
  }
  for (const auto& [g, cls] : p.order.classes)
    for (const auto& x : cls) w.arcs.at(g).over.push_back(by_inbound.at(x));
  return w;
}

Index index_of(const Work& w) {
  Index ix;
  for (const auto& [name, a] : w.arcs) {
    if (a.start >= 0) ix.start[a.start] = name;
    if (a.end >= 0) ix.end[a.end] = name;
    for (int k = 0; k < static_cast<int>(a.over.size()); ++k) {
      ix.over[a.over[k]] = name;
      ix.pos[a.over[k]] = k;
    }
  }
  return ix;
}

SokqPresentation to_presentation(const Work& w) {
  Index ix = index_of(w);
  std::vector<Relation> rels;
  for (int c = 0; c < static_cast<int>(w.sign.size()); ++c) {
    if (!w.alive[c]) continue;
    Triangle t = w.sign[c] == Sign::Pos ? Triangle::Right : Triangle::Left;
    rels.push_back(Relation{ix.start.at(c), ix.end.at(c), ix.over.at(c), t, w.sign[c]});
  }
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& [name, a] : w.arcs) {
    auto& cls = classes[name];
    for (int c : a.over) cls.push_back(ix.end.at(c));
  }
  return make_presentation(w.order, std::move(rels), std::move(classes));
}

int new_crossing(Work& w, Sign s) {
  w.sign.push_back(s);
  w.alive.push_back(true);
  return static_cast<int>(w.sign.size()) - 1;
}

std::string mint(const Work& w, const std::string& name) {
  std::string base = name.substr(0, name.find('.'));
  for (int k = 1;; ++k) {
    std::string candidate = base + "." + std::to_string(k);
    if (!w.arcs.count(candidate)) return candidate;
  }
}

struct Event {
  int pos;
  bool under;
  int crossing;
};

// Inserts passes into an arc. Each under pass cuts the arc; the piece that
// ends where the old arc ended (for a loop: the piece holding the old
// basepoint) keeps the name, earlier pieces get minted names.
void splice(Work& w, const std::string& name, const std::vector<Event>& events) {
  const Arc old = w.arcs.at(name);
  const int n = static_cast<int>(old.over.size());
  struct Item {
    bool under;
    int c;
  };
  std::vector<Item> seq;
  for (int p = 0; p <= n; ++p) {
    for (const auto& e : events)
      if (e.pos == p) seq.push_back({e.under, e.crossing});
    if (p < n) seq.push_back({false, old.over[p]});
  }
  std::vector<int> u;
  for (int k = 0; k < static_cast<int>(seq.size()); ++k)
    if (seq[k].under) u.push_back(k);
  if (u.empty()) {
    auto& a = w.arcs.at(name);
    a.over.clear();
    for (const auto& it : seq) a.over.push_back(it.c);
    return;
  }
  const int m = static_cast<int>(u.size());
  std::vector<Arc> pieces;
  if (!old.loop()) {
    pieces.resize(m + 1);
    int k = 0;
    for (const auto& it : seq) {
      if (it.under) {
        pieces[k].end = it.c;
        pieces[k + 1].start = it.c;
        ++k;
      } else {
        pieces[k].over.push_back(it.c);
      }
    }
    pieces.front().start = old.start;
    pieces.back().end = old.end;
  } else {
    const int len = static_cast<int>(seq.size());
    pieces.resize(m);
    for (int j = 0; j < m; ++j) {
      int from = u[j], to = u[(j + 1) % m];
      pieces[j].start = seq[from].c;
      pieces[j].end = seq[to].c;
      for (int k = (from + 1) % len; k != to; k = (k + 1) % len) pieces[j].over.push_back(seq[k].c);
    }
  }
  std::vector<std::string> names;
  for (size_t j = 0; j + 1 < pieces.size(); ++j) {
    std::string nm = mint(w, name);
    w.arcs[nm] = pieces[j];
    names.push_back(nm);
  }
  w.arcs[name] = pieces.back();
  auto at = std::find(w.order.begin(), w.order.end(), name);
  w.order.insert(at, names.begin(), names.end());
}

// Deletes crossings and joins the arcs they separated. A joined chain keeps
// the name of its last arc; a chain that closes up becomes a loop named after
// the arc leaving the smallest removed crossing.
void excise(Work& w, const std::set<int>& gone) {
  for (auto& [name, a] : w.arcs) std::erase_if(a.over, [&](int c) { return gone.count(c) > 0; });
  Index ix = index_of(w);
  std::set<std::string> dead, handled;
  const auto snapshot = w.arcs;
  for (const auto& name : w.order) {
    const Arc& a = snapshot.at(name);
    if (a.loop() || gone.count(a.start) || !gone.count(a.end)) continue;
    std::vector<std::string> chain{name};
    while (gone.count(snapshot.at(chain.back()).end)) chain.push_back(ix.start.at(snapshot.at(chain.back()).end));
    Arc merged;
    merged.start = a.start;
    merged.end = snapshot.at(chain.back()).end;
    for (const auto& piece : chain) {
      const auto& o = snapshot.at(piece).over;
      merged.over.insert(merged.over.end(), o.begin(), o.end());
    }
    for (size_t k = 0; k + 1 < chain.size(); ++k) dead.insert(chain[k]);
    handled.insert(chain.begin(), chain.end());
    w.arcs[chain.back()] = merged;
  }
  for (int c : gone) {
    auto it = ix.start.find(c);
    if (it == ix.start.end()) continue;
    const std::string& first = it->second;
    if (handled.count(first)) continue;
    Arc merged;
    std::string cur = first;
    do {
      const auto& o = snapshot.at(cur).over;
      merged.over.insert(merged.over.end(), o.begin(), o.end());
      if (cur != first) dead.insert(cur);
      handled.insert(cur);
      cur = ix.start.at(snapshot.at(cur).end);
    } while (cur != first);
    w.arcs[first] = merged;
  }
  for (const auto& d : dead) w.arcs.erase(d);
  std::erase_if(w.order, [&](const std::string& g) { return dead.count(g) > 0; });
  for (int c : gone) w.alive[c] = false;
}

int gap_count(const Arc& a) {
  const int n = static_cast<int>(a.over.size());
  return a.loop() ? std::max(n, 1) : n + 1;
}

const Arc& arc_at(const Work& w, const std::string& name) {
  auto it = w.arcs.find(name);
  if (it == w.arcs.end()) throw NotApplicable("no arc named " + name);
  return it->second;
}

int crossing_at(const Work& w, const std::string& inbound) {
  const Arc& a = arc_at(w, inbound);
  if (a.end < 0) throw NotApplicable(inbound + " is not the inbound operand of any relation");
  return a.end;
}

bool r1_elim_ok(const Work& w, const Index& ix, int c) {
  const std::string& x = ix.end.at(c);
  const std::string& y = ix.start.at(c);
  const std::string& z = ix.over.at(c);
  if (z == x && w.arcs.at(x).over.back() == c) return true;
  return z == y && w.arcs.at(y).over.front() == c;
}

bool r2_elim_ok(const Work& w, const Index& ix, int c1, int c2) {
  if (c1 == c2 || w.sign[c1] == w.sign[c2]) return false;
  const Arc& y = w.arcs.at(ix.start.at(c1));
  if (y.end != c2 || !y.over.empty()) return false;
  const std::string& z = ix.over.at(c1);
  if (ix.over.at(c2) != z) return false;
  const Arc& za = w.arcs.at(z);
  const int n = static_cast<int>(za.over.size());
  const int d = ix.pos.at(c1) - ix.pos.at(c2);
  if (d == 1 || d == -1) return true;
  return za.loop() && (d == n - 1 || d == 1 - n);
}

std::optional<int> r3_check(const Work& w, const Index& ix, int tm, int tb, int st, int sm, int sb) {
  if (tm == tb) return std::nullopt;
  const std::string& t = ix.over.at(tm);
  if (ix.over.at(tb) != t) return std::nullopt;
  const Arc& ta = w.arcs.at(t);
  const int n = static_cast<int>(ta.over.size());
  auto next = [&](int p) { return p + 1 < n ? p + 1 : (ta.loop() ? 0 : -1); };
  const int p1 = ix.pos.at(tm), p2 = ix.pos.at(tb);
  if (st > 0 ? next(p1) != p2 : next(p2) != p1) return std::nullopt;
  const Arc& m_in = w.arcs.at(ix.end.at(tm));
  const Arc& m_out = w.arcs.at(ix.start.at(tm));
  int mb;
  if (sm > 0) {
    if (m_out.over.empty()) return std::nullopt;
    mb = m_out.over.front();
  } else {
    if (m_in.over.empty()) return std::nullopt;
    mb = m_in.over.back();
  }
  if (mb == tm || mb == tb) return std::nullopt;
  const Arc& b2 = w.arcs.at(ix.start.at(sb > 0 ? tb : mb));
  if (b2.end != (sb > 0 ? mb : tb) || !b2.over.empty()) return std::nullopt;
  const int s_tm = sign_value(w.sign[tm]), s_tb = sign_value(w.sign[tb]), s_mb = sign_value(w.sign[mb]);
  if (st * s_tb != sm * s_mb || sm * s_tm != sb * s_tb) return std::nullopt;
  return mb;
}

void r3_rewrite(Work& w, const Index& ix, int tm, int tb, int mb, int sm, int sb) {
  auto& t = w.arcs.at(ix.over.at(tm)).over;
  std::swap(t[ix.pos.at(tm)], t[ix.pos.at(tb)]);
  auto& m_in = w.arcs.at(ix.end.at(tm)).over;
  auto& m_out = w.arcs.at(ix.start.at(tm)).over;
  if (sm > 0) {
    m_out.erase(m_out.begin());
    m_in.push_back(mb);
  } else {
    m_in.pop_back();
    m_out.insert(m_out.begin(), mb);
  }
  const int first = sb > 0 ? tb : mb, second = sb > 0 ? mb : tb;
  const std::string b1 = ix.end.at(first), b2 = ix.start.at(first), b3 = ix.start.at(second);
  w.arcs.at(b1).end = second;
  w.arcs.at(b3).start = first;
  w.arcs.at(b2).start = second;
  w.arcs.at(b2).end = first;
}

std::vector<int> fh_indices(const Arc& a) {
  const int n = static_cast<int>(a.over.size());
  std::vector<int> ks;
  if (n < 2) return ks;
  int count = a.loop() ? (n == 2 ? 1 : n) : n - 1;
  for (int k = 0; k < count; ++k) ks.push_back(k);
  return ks;
}

char sign_char(Sign s) { return s == Sign::Pos ? '+' : '-'; }
char sigma_char(int s) { return s > 0 ? '+' : '-'; }

void add_r1_intro(const Work& w, std::vector<MoveInstance>& out) {
  for (const auto& g : w.order) {
    const int gaps = gap_count(w.arcs.at(g));
    for (int i = 0; i < gaps; ++i)
      for (Sign s : {Sign::Pos, Sign::Neg})
        for (bool first : {true, false}) {
          MoveInstance m;
          m.kind = MoveKind::R1Intro;
          m.arc = g;
          m.index = i;
          m.sign = s;
          m.first = first;
          out.push_back(m);
        }
  }
}

void add_r1_elim(const Work& w, const Index& ix, std::vector<MoveInstance>& out) {
  for (const auto& [name, a] : w.arcs)
    if (a.end >= 0 && r1_elim_ok(w, ix, a.end)) {
      MoveInstance m;
      m.kind = MoveKind::R1Elim;
      m.crossings = {name};
      out.push_back(m);
    }
}

void add_r2_intro(const Work& w, std::size_t cap, std::vector<MoveInstance>& out) {
  std::size_t pairs = 0;
  for (const auto& a : w.order)
    for (const auto& z : w.order) {
      if (cap && pairs++ >= cap) return;
      const Arc& aa = w.arcs.at(a);
      const int gaps_a = gap_count(aa);
      const int gaps_z = a == z ? static_cast<int>(aa.over.size()) + (aa.loop() ? 1 : 2) : gap_count(w.arcs.at(z));
      for (int i = 0; i < gaps_a; ++i)
        for (int j = 0; j < gaps_z; ++j)
          for (Sign s : {Sign::Pos, Sign::Neg})
            for (bool first : {true, false}) {
              MoveInstance m;
              m.kind = MoveKind::R2Intro;
              m.arc = a;
              m.index = i;
              m.over_arc = z;
              m.over_index = j;
              m.sign = s;
              m.first = first;
              out.push_back(m);
            }
    }
}

void add_r2_elim(const Work& w, const Index& ix, std::vector<MoveInstance>& out) {
  for (const auto& [name, a] : w.arcs) {
    if (a.end < 0) continue;
    const int c1 = a.end;
    const int c2 = w.arcs.at(ix.start.at(c1)).end;
    if (c2 < 0 || !r2_elim_ok(w, ix, c1, c2)) continue;
    MoveInstance m;
    m.kind = MoveKind::R2Elim;
    m.crossings = {name, ix.end.at(c2)};
    out.push_back(m);
  }
}

void add_r3(const Work& w, const Index& ix, std::vector<MoveInstance>& out) {
  for (const auto& [name, t] : w.arcs) {
    const int n = static_cast<int>(t.over.size());
    if (n < 2) continue;
    const int count = t.loop() ? n : n - 1;
    for (int k = 0; k < count; ++k) {
      const int e1 = t.over[k], e2 = t.over[(k + 1) % n];
      for (auto [tm, tb, st] : {std::tuple{e1, e2, 1}, std::tuple{e2, e1, -1}})
        for (int sm : {1, -1})
          for (int sb : {1, -1}) {
            auto mb = r3_check(w, ix, tm, tb, st, sm, sb);
            if (!mb) continue;
            MoveInstance m;
            m.kind = MoveKind::R3;
            m.crossings = {ix.end.at(tm), ix.end.at(tb), ix.end.at(*mb)};
            m.sigma_t = st;
            m.sigma_m = sm;
            m.sigma_b = sb;
            out.push_back(m);
          }
    }
  }
}

void add_fh(const Work& w, std::vector<MoveInstance>& out) {
  for (const auto& [name, a] : w.arcs)
    for (int k : fh_indices(a)) {
      MoveInstance m;
      m.kind = MoveKind::FH;
      m.arc = name;
      m.index = k;
      out.push_back(m);
    }
}

void finish(std::vector<MoveInstance>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
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

}  // namespace

int relation_delta(MoveKind k) {
  switch (k) {
    case MoveKind::R1Intro: return 1;
    case MoveKind::R1Elim: return -1;
    case MoveKind::R2Intro: return 2;
    case MoveKind::R2Elim: return -2;
    default: return 0;
  }
}

std::vector<MoveInstance> applicable_moves_of(const SokqPresentation& p, MoveKind kind) {
  Work w = from_presentation(p);
  Index ix = index_of(w);
  std::vector<MoveInstance> out;
  switch (kind) {
    case MoveKind::R1Intro: add_r1_intro(w, out); break;
    case MoveKind::R1Elim: add_r1_elim(w, ix, out); break;
    case MoveKind::R2Intro: add_r2_intro(w, 0, out); break;
    case MoveKind::R2Elim: add_r2_elim(w, ix, out); break;
    case MoveKind::R3: add_r3(w, ix, out); break;
    case MoveKind::FH: add_fh(w, out); break;
  }
  finish(out);
  return out;
}

std::vector<MoveInstance> applicable_moves(const SokqPresentation& p, Mode mode, const MoveOptions& opts) {
  Work w = from_presentation(p);
  Index ix = index_of(w);
  std::vector<MoveInstance> out;
  if (!is_framed(mode)) {
    if (opts.include_intro) add_r1_intro(w, out);
    add_r1_elim(w, ix, out);
  }
  if (opts.include_intro) add_r2_intro(w, opts.r2_pair_cap, out);
  add_r2_elim(w, ix, out);
  add_r3(w, ix, out);
  if (is_welded(mode)) add_fh(w, out);
  finish(out);
  return out;
}

SokqPresentation apply(const SokqPresentation& p, const MoveInstance& m) {
  Work w = from_presentation(p);
  switch (m.kind) {
    case MoveKind::R1Intro: {
      const Arc& a = arc_at(w, m.arc);
      if (m.index < 0 || m.index >= gap_count(a)) throw NotApplicable("R1 split position out of range");
      int c = new_crossing(w, m.sign);
      if (m.first)
        splice(w, m.arc, {{m.index, false, c}, {m.index, true, c}});
      else
        splice(w, m.arc, {{m.index, true, c}, {m.index, false, c}});
      break;
    }
    case MoveKind::R1Elim: {
      if (m.crossings.size() != 1) throw NotApplicable("R1 elimination names one crossing");
      int c = crossing_at(w, m.crossings[0]);
      if (!r1_elim_ok(w, index_of(w), c)) throw NotApplicable("crossing " + m.crossings[0] + " is not a removable kink");
      excise(w, {c});
      break;
    }
    case MoveKind::R2Intro: {
      const Arc& a = arc_at(w, m.arc);
      const Arc& z = arc_at(w, m.over_arc);
      const bool same = m.arc == m.over_arc;
      const int n = static_cast<int>(a.over.size());
      const int gaps_z = same ? n + (a.loop() ? 1 : 2) : gap_count(z);
      if (m.index < 0 || m.index >= gap_count(a) || m.over_index < 0 || m.over_index >= gaps_z)
        throw NotApplicable("R2 position out of range");
      int c1 = new_crossing(w, m.sign);
      int c2 = new_crossing(w, flip(m.sign));
      int o1 = m.first ? c1 : c2, o2 = m.first ? c2 : c1;
      const int i = m.index, j = m.over_index;
      std::vector<Event> unders{{i, true, c1}, {i, true, c2}};
      if (!same) {
        splice(w, m.arc, unders);
        splice(w, m.over_arc, {{j, false, o1}, {j, false, o2}});
      } else if (j <= i) {
        splice(w, m.arc, {{j, false, o1}, {j, false, o2}, unders[0], unders[1]});
      } else if (j == i + 1) {
        splice(w, m.arc, {unders[0], unders[1], {i, false, o1}, {i, false, o2}});
      } else {
        splice(w, m.arc, {unders[0], unders[1], {j - 1, false, o1}, {j - 1, false, o2}});
      }
      break;
    }
    case MoveKind::R2Elim: {
      if (m.crossings.size() != 2) throw NotApplicable("R2 elimination names two crossings");
      int c1 = crossing_at(w, m.crossings[0]), c2 = crossing_at(w, m.crossings[1]);
      if (!r2_elim_ok(w, index_of(w), c1, c2)) throw NotApplicable("crossings do not form a removable bigon");
      excise(w, {c1, c2});
      break;
    }
    case MoveKind::R3: {
      if (m.crossings.size() != 3) throw NotApplicable("R3 names three crossings");
      int tm = crossing_at(w, m.crossings[0]), tb = crossing_at(w, m.crossings[1]), mb = crossing_at(w, m.crossings[2]);
      Index ix = index_of(w);
      auto found = r3_check(w, ix, tm, tb, m.sigma_t, m.sigma_m, m.sigma_b);
      if (!found || *found != mb) throw NotApplicable("crossings do not form an R3 triangle");
      r3_rewrite(w, ix, tm, tb, mb, m.sigma_m, m.sigma_b);
      break;
    }
    case MoveKind::FH: {
      const Arc& a = arc_at(w, m.arc);
      auto ks = fh_indices(a);
      if (std::find(ks.begin(), ks.end(), m.index) == ks.end()) throw NotApplicable("no adjacent pair at that index");
      auto& o = w.arcs.at(m.arc).over;
      std::swap(o[m.index], o[(m.index + 1) % o.size()]);
      break;
    }
  }
  return to_presentation(w);
}

MoveInstance invert(const MoveInstance& m, const SokqPresentation& before) {
  if (m.kind == MoveKind::FH) return m;
  SokqPresentation after = apply(before, m);
  const std::string target = canonical_key(before);
  if (m.kind == MoveKind::R3) {
    Work w = from_presentation(after);
    Work old = from_presentation(before);
    // Crossing ids survive the rewrite; only the inbound labels move.
    Index ix = index_of(w);
    MoveInstance inv = m;
    for (int k = 0; k < 3; ++k) inv.crossings[k] = ix.end.at(crossing_at(old, m.crossings[k]));
    inv.sigma_t = -m.sigma_t;
    inv.sigma_m = -m.sigma_m;
    inv.sigma_b = -m.sigma_b;
    try {
      if (canonical_key(apply(after, inv)) == target) return inv;
    } catch (const NotApplicable&) {
    }
  }
  auto found = find_move(after, inverse_kind(m.kind), target);
  if (!found) throw SokqError("no inverse found for " + to_string(m));
  return *found;
}

std::string to_string(const MoveInstance& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::R1Intro:
      os << "R1I " << m.arc << '@' << m.index << ' ' << sign_char(m.sign) << (m.first ? "before" : "after");
      break;
    case MoveKind::R1Elim: os << "R1E " << m.crossings.at(0); break;
    case MoveKind::R2Intro:
      os << "R2I " << m.arc << '@' << m.index << ' ' << m.over_arc << '@' << m.over_index << ' ' << sign_char(m.sign)
         << (m.first ? "par" : "anti");
      break;
    case MoveKind::R2Elim: os << "R2E " << m.crossings.at(0) << ' ' << m.crossings.at(1); break;
    case MoveKind::R3:
      os << "R3 " << m.crossings.at(0) << ' ' << m.crossings.at(1) << ' ' << m.crossings.at(2) << ' '
         << sigma_char(m.sigma_t) << sigma_char(m.sigma_m) << sigma_char(m.sigma_b);
      break;
    case MoveKind::FH: os << "FH " << m.arc << '@' << m.index; break;
  }
  return os.str();
}

namespace {

std::pair<std::string, int> split_at(const std::string& tok) {
  auto at = tok.rfind('@');
  if (at == std::string::npos || at == 0) throw SokqError("expected label@index, got '" + tok + "'");
  try {
    size_t used = 0;
    int idx = std::stoi(tok.substr(at + 1), &used);
    if (used != tok.size() - at - 1) throw std::invalid_argument("trailing");
    return {tok.substr(0, at), idx};
  } catch (const std::logic_error&) {
    throw SokqError("bad index in '" + tok + "'");
  }
}

std::pair<Sign, std::string> split_sign(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) throw SokqError("expected a signed keyword, got '" + tok + "'");
  return {tok[0] == '+' ? Sign::Pos : Sign::Neg, tok.substr(1)};
}

}  // namespace

MoveInstance parse_move(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> t;
  for (std::string s; is >> s;) t.push_back(s);
  if (t.empty()) throw SokqError("empty move");
  MoveInstance m;
  auto need = [&](size_t n) {
    if (t.size() != n) throw SokqError("move '" + text + "' needs " + std::to_string(n - 1) + " arguments");
  };
  if (t[0] == "R1I") {
    need(3);
    m.kind = MoveKind::R1Intro;
    std::tie(m.arc, m.index) = split_at(t[1]);
    auto [s, word] = split_sign(t[2]);
    if (word != "before" && word != "after") throw SokqError("kink must be before or after");
    m.sign = s;
    m.first = word == "before";
  } else if (t[0] == "R1E") {
    need(2);
    m.kind = MoveKind::R1Elim;
    m.crossings = {t[1]};
  } else if (t[0] == "R2I") {
    need(4);
    m.kind = MoveKind::R2Intro;
    std::tie(m.arc, m.index) = split_at(t[1]);
    std::tie(m.over_arc, m.over_index) = split_at(t[2]);
    auto [s, word] = split_sign(t[3]);
    if (word != "par" && word != "anti") throw SokqError("chirality must be par or anti");
    m.sign = s;
    m.first = word == "par";
  } else if (t[0] == "R2E") {
    need(3);
    m.kind = MoveKind::R2Elim;
    m.crossings = {t[1], t[2]};
  } else if (t[0] == "R3") {
    need(5);
    m.kind = MoveKind::R3;
    m.crossings = {t[1], t[2], t[3]};
    const auto& c = t[4];
    if (c.size() != 3 || c.find_first_not_of("+-") != std::string::npos) throw SokqError("R3 case is three of + or -");
    m.sigma_t = c[0] == '+' ? 1 : -1;
    m.sigma_m = c[1] == '+' ? 1 : -1;
    m.sigma_b = c[2] == '+' ? 1 : -1;
  } else if (t[0] == "FH") {
    need(2);
    m.kind = MoveKind::FH;
    std::tie(m.arc, m.index) = split_at(t[1]);
  } else {
    throw SokqError("unknown move '" + t[0] + "'");
  }
  return m;
}

}  // namespace sokq
