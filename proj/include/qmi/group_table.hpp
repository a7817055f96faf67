#pragma once

#include <cstddef>
#include <vector>

namespace qmi {

// Finite group given by its multiplication table: table[a][b] = index of a*b.
class FiniteGroupTable {
 public:
  // Validates closure, associativity, identity and inverses; throws Error("InvalidGroup").
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table);

  static FiniteGroupTable cyclic(std::size_t n);
  static FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h);
  // Closure of the given permutations of {0..m-1}; element 0 is the identity
  // and elements are numbered in breadth-first order from the generators.
  static FiniteGroupTable from_permutations(const std::vector<std::vector<std::size_t>>& generators);
  static FiniteGroupTable symmetric3();
  static FiniteGroupTable dihedral4();
  // {+-1, +-i, +-j, +-k} in the Hamilton quaternions.
  static FiniteGroupTable quaternion8();

  std::size_t size() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const FiniteGroupTable& x, const FiniteGroupTable& y) { return x.table_ == y.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

}  // namespace qmi
