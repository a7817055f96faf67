#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qmi/lattice.hpp"

namespace qmi {

// Is the lattice a ring with 1? Checks 1 in L and closure on basis products.
bool is_order(const Lattice4& lattice, const QuatAlgebra& alg);

// An order of B together with a Z-basis whose first element is 1. The basis
// fixes the coordinates used by the finite-level machinery.
class Order {
 public:
  // Throws Error("NotAnOrder"). When exactly four generators are given and
  // the first is 1 they are kept as the basis; otherwise 1 is completed to a
  // basis of the generated lattice.
  Order(QuatAlgebra alg, std::span<const QuatElement> generators);

  const QuatAlgebra& algebra() const { return alg_; }
  const Lattice4& lattice() const { return lattice_; }
  const std::array<QuatElement, 4>& basis() const { return basis_; }

  std::optional<std::array<Integer, 4>> try_coordinates(const QuatElement& x) const;
  // Throws Error("NotInOrder").
  std::array<Integer, 4> coordinates(const QuatElement& x) const;
  bool contains(const QuatElement& x) const { return lattice_.contains(x); }

  friend bool operator==(const Order& x, const Order& y) { return x.alg_ == y.alg_ && x.lattice_ == y.lattice_; }

 private:
  QuatAlgebra alg_;
  Lattice4 lattice_;
  std::array<QuatElement, 4> basis_;
  RatMatrix basis_inverse_;
};

// d(O) with d(O)^2 = |det(Tr(e_r e_s))|; throws Error("NotASquare").
Integer reduced_discriminant(const Order& order);
// d(O) / disc(B); throws Error("NotDivisible").
Integer eichler_level(const Order& order);

class LeftIdeal {
 public:
  // Throws Error("NotAnIdeal") unless O * I is contained in I.
  LeftIdeal(Order left_order, Lattice4 lattice);

  const Order& left_order() const { return order_; }
  const Lattice4& lattice() const { return lattice_; }

 private:
  Order order_;
  Lattice4 lattice_;
};

// O * g; throws Error("ZeroNorm").
LeftIdeal principal_left_ideal(const Order& order, const QuatElement& g);
// s * O for a nonzero rational s.
LeftIdeal scalar_ideal(const Order& order, const Rational& s);

// Reduced norm of a locally principal ideal, normalised so Norm(O g) = |Norm(g)|.
// Throws Error("NotLocallyPrincipal").
Rational nrd_ideal(const LeftIdeal& ideal);

// Finite abelian group I/O in invariant-factor form.
struct KernelModule {
  std::vector<Integer> elementary_divisors;  // each > 1, each divides the next
  std::vector<QuatElement> generators;       // generator i has order elementary_divisors[i]

  Integer order() const;
  // All sum_i t_i * generators[i], 0 <= t_i < d_i, in lexicographic order of t.
  // Throws Error("TooLarge") when the group has more than max_count elements.
  std::vector<QuatElement> representatives(std::size_t max_count = 1u << 16) const;
};

// I/O for O contained in I; throws Error("NotContained").
KernelModule kernel_module(const Order& order, const LeftIdeal& ideal);
// Norm(I)^-1 for O contained in I.
Rational isogeny_degree(const LeftIdeal& ideal);
// I contained in Norm(I) * O, for O contained in I.
bool dual_inclusion_check(const LeftIdeal& ideal);

}  // namespace qmi
