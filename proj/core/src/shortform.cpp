#include "sokq/shortform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sokq {

Term Term::leaf(std::string g) {
  Term t;
  t.generator = std::move(g);
  return t;
}

Term Term::node(Term l, Triangle op, Term r) {
  Term t;
  t.op = op;
  t.left = std::make_shared<const Term>(std::move(l));
  t.right = std::make_shared<const Term>(std::move(r));
  return t;
}

namespace {

// x <> W for a left-associated W = W' <>k zk:
//   x <> (W' <>k zk) = ((x <>k-bar zk) <> W') <>k zk
Word act(Word x, Triangle op, const Word& w) {
  if (w.tail.empty()) {
    x.tail.emplace_back(op, w.head);
    return x;
  }
  auto [last_op, last_gen] = w.tail.back();
  Word rest = w;
  rest.tail.pop_back();
  x.tail.emplace_back(flip(last_op), last_gen);
  Word y = act(std::move(x), op, rest);
  y.tail.emplace_back(last_op, last_gen);
  return y;
}

// Relation in the x ~ y ▷ z orientation; y ~ x ◁ z is the same relation.
std::tuple<std::string, std::string, std::string> right_form(const UnsignedRelation& r) {
  if (r.triangle == Triangle::Right) return {r.output, r.input, r.op};
  return {r.input, r.output, r.op};
}

void rename_everywhere(ShortPresentation& sp, const std::string& from, const std::string& to) {
  for (auto& r : sp.relations) {
    for (auto* g : {&r.output, &r.input, &r.op}) {
      if (*g == from) *g = to;
    }
  }
  sp.generators.erase(std::remove(sp.generators.begin(), sp.generators.end(), from), sp.generators.end());
}

// Keeps whichever of a, b is declared first; returns {kept, dropped}.
std::pair<std::string, std::string> merge_order(const std::vector<std::string>& gens, const std::string& a,
                                                const std::string& b) {
  auto pa = std::find(gens.begin(), gens.end(), a);
  auto pb = std::find(gens.begin(), gens.end(), b);
  if (pa <= pb) return {a, b};
  return {b, a};
}

// One pass; returns true if anything changed.
bool dedup_step(ShortPresentation& sp, bool rack) {
  const int n = static_cast<int>(sp.relations.size());
  for (int i = 0; i < n; ++i) {
    auto [oi, ii, zi] = right_form(sp.relations[i]);
    for (int j = i + 1; j < n; ++j) {
      auto [oj, ij, zj] = right_form(sp.relations[j]);
      if (zi != zj) continue;
      if (oi == oj && ii == ij) {
        sp.relations.erase(sp.relations.begin() + j);
        return true;
      }
      if (ii == ij) {  // x ~ y ▷ z and x' ~ y ▷ z force x = x'
        auto [keep, drop] = merge_order(sp.generators, oi, oj);
        sp.relations.erase(sp.relations.begin() + j);
        rename_everywhere(sp, drop, keep);
        return true;
      }
      if (oi == oj) {  // x ~ y ▷ z and x ~ y' ▷ z force y = y'
        auto [keep, drop] = merge_order(sp.generators, ii, ij);
        sp.relations.erase(sp.relations.begin() + j);
        rename_everywhere(sp, drop, keep);
        return true;
      }
      // x ~ y ▷ y and x ~ y ◁ y (right form: y ~ x ▷ y) say the same in a quandle
      if (!rack && oi == ij && ii == oj && zi == ii && oi != ii) {
        sp.relations.erase(sp.relations.begin() + j);
        return true;
      }
      if (!rack && oi == ij && ii == oj && zi == oi && oi != ii) {
        sp.relations.erase(sp.relations.begin() + j);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Word left_associate(const Term& t) {
  if (t.is_leaf()) return Word{t.generator, {}};
  Word l = left_associate(*t.left);
  Word r = left_associate(*t.right);
  return act(std::move(l), t.op, r);
}

ShortPresentation dedup(const ShortPresentation& sp, bool rack) {
  ShortPresentation out = sp;
  while (dedup_step(out, rack)) {
  }
  return out;
}

ShortPresentation to_short_form(const GeneralPresentation& gp, bool rack) {
  ShortPresentation sp;
  sp.generators = gp.generators;
  std::set<std::string> used(gp.generators.begin(), gp.generators.end());
  std::map<std::string, std::string> alias;
  auto resolve = [&](std::string g) {
    while (alias.count(g)) g = alias.at(g);
    return g;
  };
  int counter = 0;
  auto fresh = [&] {
    std::string name;
    do name = "u" + std::to_string(++counter);
    while (used.count(name));
    used.insert(name);
    sp.generators.push_back(name);
    return name;
  };
  // z with z ~ x <> y already present (in either written orientation).
  auto lookup = [&](const std::string& x, Triangle op, const std::string& y) -> std::string {
    for (const auto& r : sp.relations) {
      if (r.op != y) continue;
      if (r.triangle == op && r.input == x) return r.output;
      if (r.triangle != op && r.output == x) return r.input;
    }
    return {};
  };
  auto shorten = [&](Word& w, int target) {
    while (w.length() > target) {
      auto [op, second] = w.tail.front();
      std::string z = lookup(w.head, op, second);
      if (z.empty()) {
        z = fresh();
        sp.relations.push_back(UnsignedRelation{z, w.head, second, op});
      }
      w.head = z;
      w.tail.erase(w.tail.begin());
    }
  };
  auto resolve_word = [&](Word w) {
    w.head = resolve(w.head);
    for (auto& [op, g] : w.tail) g = resolve(g);
    return w;
  };
  for (const auto& [lhs0, rhs0] : gp.relations) {
    Word lhs = resolve_word(lhs0);
    Word rhs = resolve_word(rhs0);
    if (lhs.length() == 0 && rhs.length() == 0) {
      if (lhs.head == rhs.head) continue;
      auto [keep, drop] = merge_order(sp.generators, lhs.head, rhs.head);
      alias[drop] = keep;
      rename_everywhere(sp, drop, keep);
      continue;
    }
    if (lhs.length() > 0 && rhs.length() == 0) std::swap(lhs, rhs);
    shorten(lhs, 0);
    shorten(rhs, 1);
    lhs.head = resolve(lhs.head);
    sp.relations.push_back(UnsignedRelation{lhs.head, rhs.head, rhs.tail[0].second, rhs.tail[0].first});
  }
  return dedup(sp, rack);
}

std::vector<ShortFormViolation> check_short_form(const ShortPresentation& sp, bool rack) {
  std::vector<ShortFormViolation> out;
  std::set<std::string> gens(sp.generators.begin(), sp.generators.end());
  auto text = [](const UnsignedRelation& r) {
    return r.output + " ~ " + r.input + " " + to_string(r.triangle) + " " + r.op;
  };
  for (const auto& r : sp.relations) {
    for (const auto* g : {&r.output, &r.input, &r.op}) {
      if (!gens.count(*g)) out.push_back({1, "undeclared generator '" + *g + "' in " + text(r)});
    }
  }
  const size_t n = sp.relations.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = sp.relations[i];
      const auto& b = sp.relations[j];
      std::string pair = text(a) + " / " + text(b);
      if (i < j && a == b) out.push_back({2, "repeated relation " + text(a)});
      if (i < j && a.triangle == b.triangle && a.op == b.op && a.input == b.input && a.output != b.output)
        out.push_back({2, pair});
      if (i < j && a.triangle == b.triangle && a.op == b.op && a.output == b.output && a.input != b.input)
        out.push_back({3, pair});
      if (a.triangle == Triangle::Right && b.triangle == Triangle::Left && a.op == b.op && b.output == a.input &&
          b.input == a.output)
        out.push_back({4, pair});
      if (!rack && a.triangle == Triangle::Right && b.triangle == Triangle::Left && a.output == b.output &&
          a.input == b.input && a.op == a.input && b.op == b.input)
        out.push_back({5, pair});
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string s = w.head;
  for (const auto& [op, g] : w.tail) s += " " + to_string(op) + " " + g;
  return s;
}

}  // namespace sokq
