#include "sokq/gauss.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sokq {

int GaussCode::crossing_count() const {
  int symbols = 0;
  for (const auto& c : components) symbols += static_cast<int>(c.size());
  return symbols / 2;
}

void check_pairing(const GaussCode& g) {
  struct Seen {
    int over = 0;
    int under = 0;
    std::vector<Sign> signs;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : g.components) {
    for (const auto& s : comp) {
      if (s.crossing <= 0) throw GaussPairingError("crossing ids must be positive");
      auto& e = seen[s.crossing];
      (s.over ? e.over : e.under)++;
      e.signs.push_back(s.sign);
    }
  }
  for (const auto& [id, e] : seen) {
    if (e.over != 1 || e.under != 1) {
      throw GaussPairingError("crossing " + std::to_string(id) + " appears " + std::to_string(e.over) + " time(s) over and " +
                              std::to_string(e.under) + " time(s) under");
    }
    if (e.signs[0] != e.signs[1]) throw GaussPairingError("crossing " + std::to_string(id) + " has mismatched signs");
  }
}

GaussCode normalize_gauss(const GaussCode& g) {
  std::map<int, int> renumber;
  GaussCode out;
  for (const auto& comp : g.components) {
    std::vector<GaussSymbol> c;
    for (auto s : comp) {
      auto [it, fresh] = renumber.try_emplace(s.crossing, static_cast<int>(renumber.size()) + 1);
      s.crossing = it->second;
      c.push_back(s);
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

namespace {

// Component boundaries encode as -1, empty components as -2; a symbol as
// 4 * id + 2 * over + negative.
std::vector<int> encode(const std::vector<const std::vector<GaussSymbol>*>& order, const std::vector<int>& rotation) {
  std::vector<int> out;
  std::map<int, int> renumber;
  for (size_t k = 0; k < order.size(); ++k) {
    const auto& comp = *order[k];
    if (comp.empty()) out.push_back(-2);
    for (size_t i = 0; i < comp.size(); ++i) {
      const auto& s = comp[(i + rotation[k]) % comp.size()];
      auto [it, fresh] = renumber.try_emplace(s.crossing, static_cast<int>(renumber.size()) + 1);
      out.push_back(4 * it->second + (s.over ? 2 : 0) + (s.sign == Sign::Neg ? 1 : 0));
    }
    out.push_back(-1);
  }
  return out;
}

std::string render(const std::vector<int>& code) {
  std::string text;
  bool fresh_component = true;
  for (int t : code) {
    if (t == -1) {
      text += " ; ";
      fresh_component = true;
      continue;
    }
    if (!fresh_component) text += " ";
    fresh_component = false;
    if (t == -2) {
      text += "()";
      continue;
    }
    text += (t & 2) ? "O" : "U";
    text += std::to_string(t / 4);
    text += (t & 1) ? "-" : "+";
  }
  if (!text.empty()) text.resize(text.size() - 3);
  return text;
}

}  // namespace

std::string gauss_canonical_key(const GaussCode& g) {
  const size_t k = g.components.size();
  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  bool have = false;
  do {
    std::vector<const std::vector<GaussSymbol>*> order;
    for (size_t i : perm) order.push_back(&g.components[i]);
    std::vector<int> rotation(k, 0);
    while (true) {
      auto code = encode(order, rotation);
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
      size_t i = 0;
      for (; i < k; ++i) {
        int len = static_cast<int>(order[i]->size());
        if (++rotation[i] < std::max(len, 1)) break;
        rotation[i] = 0;
      }
      if (i == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return render(best);
}

}  // namespace sokq
