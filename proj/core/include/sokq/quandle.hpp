#pragma once

#include <array>
#include <string>
#include <vector>

#include "sokq/core.hpp"

namespace sokq {

class AxiomViolation : public SokqError {
 public:
  AxiomViolation(std::string axiom, std::array<int, 3> witness);

  const std::string& axiom() const { return axiom_; }
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::array<int, 3> witness_;
};

/// Operation table over 0..n-1 with entry(i, j) = i ▷ j. Racks skip (qi).
class FiniteQuandle {
 public:
  /// Checks (qi) (unless `rack`), (qii) and (qiii); throws AxiomViolation.
  static FiniteQuandle from_table(int n, std::vector<int> table, bool rack = false, std::string name = {});

  static FiniteQuandle trivial(int n);
  static FiniteQuandle dihedral(int n);

  int size() const { return n_; }
  bool is_rack() const { return rack_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& table() const { return table_; }

  int right(int i, int j) const { return table_[i * n_ + j]; }
  int left(int i, int j) const { return inverse_[i * n_ + j]; }
  int apply(Triangle t, int i, int j) const { return t == Triangle::Right ? right(i, j) : left(i, j); }

 private:
  int n_ = 0;
  bool rack_ = false;
  std::string name_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Trivial quandles of size 1..4 and dihedral quandles of size 3, 4, 5,
/// axiom-checked on construction.
const std::vector<FiniteQuandle>& bundled_quandles();

}  // namespace sokq
