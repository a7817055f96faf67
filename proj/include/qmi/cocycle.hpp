#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qmi/group_table.hpp"
#include "qmi/quaternion.hpp"
#include "qmi/rational_unit.hpp"

namespace qmi {

using UnitMatrix = std::vector<std::vector<RationalUnit>>;

// c(b,c) c(a,bc) = c(a,b) c(ab,c) for all triples (trivial action on Q^x).
bool verify_cocycle(const FiniteGroupTable& group, const UnitMatrix& values);

// A normalised Q^x-valued 2-cocycle.
class Cocycle2 {
 public:
  // Throws Error("NotACocycle"); divides out c(1,1) so that c(1,s) = c(s,1) = 1.
  Cocycle2(FiniteGroupTable group, UnitMatrix values);

  static Cocycle2 trivial(const FiniteGroupTable& group);

  const FiniteGroupTable& group() const { return group_; }
  const UnitMatrix& values() const { return values_; }
  const RationalUnit& operator()(std::size_t s, std::size_t t) const { return values_[s][t]; }

  friend Cocycle2 operator*(const Cocycle2& x, const Cocycle2& y);
  Cocycle2 inverse() const;
  friend bool operator==(const Cocycle2& x, const Cocycle2& y) { return x.values_ == y.values_; }

 private:
  FiniteGroupTable group_;
  UnitMatrix values_;
};

struct Cochain1 {
  FiniteGroupTable group;
  std::vector<RationalUnit> values;
};

// d alpha(s,t) = alpha(s) alpha(t) / alpha(st), normalised.
Cocycle2 coboundary(const Cochain1& alpha);

struct PrimeObstruction {
  Integer prime;
  std::vector<Integer> elementary_divisors;  // nonzero Smith invariants of the coboundary matrix
  bool solvable = true;
  // When unsolvable: invariant index, its divisor (0 for a zero row) and the residue it leaves.
  std::size_t failing_index = 0;
  Integer modulus;
  Integer residue;
};

struct ObstructionReport {
  std::vector<PrimeObstruction> primes;
  bool sign_solvable = true;
  // When the sign part fails: pairs (s,t) whose sign equations sum to 0 = 1 over F_2.
  std::vector<std::pair<std::size_t, std::size_t>> sign_witness;

  bool solvable() const;
};

struct SplitResult {
  std::optional<Cochain1> alpha;  // d alpha = c, alpha(1) = 1
  ObstructionReport report;
};

SplitResult split_cocycle(const Cocycle2& c);
bool cohomology_class_equal(const Cocycle2& c1, const Cocycle2& c2);

struct TwistedElement {
  QuatElement b;
  std::size_t sigma = 0;
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

// (b, s)(b', t) = (c(s,t) b b', st)
TwistedElement twisted_mult(const QuatAlgebra& alg, const FiniteGroupTable& group, const UnitMatrix& c,
                            const TwistedElement& lhs, const TwistedElement& rhs);

// c(s,t) alpha(st) == alpha(s) alpha(t) for all pairs.
bool psi_multiplicativity_check(const Cocycle2& c, const Cochain1& alpha);

// True when alpha is a homomorphism G -> Q^x.
bool is_character(const Cochain1& alpha);

// Z/2 with c(s,s) = -1.
Cocycle2 sign_cocycle_z2();
// Z/2 x Z/2 = {1, i, j, k}: c(s,t) = sign of the product of the lifts i, j, k in (-1,-1).
Cocycle2 quaternion_sign_cocycle();

}  // namespace qmi
