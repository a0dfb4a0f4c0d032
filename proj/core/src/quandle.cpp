#include "sokq/quandle.hpp"

namespace sokq {

namespace {

std::string witness_text(const std::array<int, 3>& w) {
  return "(" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::array<int, 3> witness)
    : SokqError("axiom " + axiom + " fails at " + witness_text(witness)), axiom_(std::move(axiom)), witness_(witness) {}

FiniteQuandle FiniteQuandle::from_table(int n, std::vector<int> table, bool rack, std::string name) {
  if (n <= 0) throw SokqError("quandle size must be positive");
  if (static_cast<int>(table.size()) != n * n) {
    throw SokqError("quandle table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n));
  }
  for (int v : table) {
    if (v < 0 || v >= n) throw SokqError("quandle entry " + std::to_string(v) + " out of range");
  }
  auto at = [&](int i, int j) { return table[i * n + j]; };
  if (!rack) {
    for (int i = 0; i < n; ++i) {
      if (at(i, i) != i) throw AxiomViolation("qi", {i, i, at(i, i)});
    }
  }
  std::vector<int> inverse(n * n, -1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      int v = at(i, j);
      if (inverse[v * n + j] >= 0) throw AxiomViolation("qii", {inverse[v * n + j], i, j});
      inverse[v * n + j] = i;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) throw AxiomViolation("qiii", {a, b, c});
      }
    }
  }
  FiniteQuandle q;
  q.n_ = n;
  q.rack_ = rack;
  q.name_ = std::move(name);
  q.table_ = std::move(table);
  q.inverse_ = std::move(inverse);
  return q;
}

FiniteQuandle FiniteQuandle::trivial(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = i;
  return from_table(n, std::move(t), false, "trivial-" + std::to_string(n));
}

FiniteQuandle FiniteQuandle::dihedral(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = ((2 * j - i) % n + n) % n;
  return from_table(n, std::move(t), false, "dihedral-" + std::to_string(n));
}

const std::vector<FiniteQuandle>& bundled_quandles() {
  static const std::vector<FiniteQuandle> library = [] {
    std::vector<FiniteQuandle> qs;
    for (int n = 1; n <= 4; ++n) qs.push_back(FiniteQuandle::trivial(n));
    for (int n = 3; n <= 5; ++n) qs.push_back(FiniteQuandle::dihedral(n));
    return qs;
  }();
  return library;
}

}  // namespace sokq
