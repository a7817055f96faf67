#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qmi/matrix.hpp"
#include "qmi/quaternion.hpp"

namespace qmi {

// Full-rank Z-lattice in B, stored as (1/den) * H with H the 4x4 row Hermite
// normal form of den*L and den the least positive integer making den*L
// integral. The pair (den, H) is unique per lattice, so equality of lattices
// is equality of this data.
class Lattice4 {
 public:
  // Throws Error("RankDeficient") unless the generators span a rank-4 lattice.
  static Lattice4 from_generators(std::span<const QuatElement> gens);

  const Integer& denominator() const { return den_; }
  const IntMatrix& hnf() const { return hnf_; }

  std::array<QuatElement, 4> basis() const;
  RatMatrix basis_matrix() const;

  // Integer coordinates of x in basis(), or nullopt when x is not in L.
  std::optional<std::array<Integer, 4>> coordinates(const QuatElement& x) const;
  bool contains(const QuatElement& x) const { return coordinates(x).has_value(); }
  // True iff other is a sublattice of this one.
  bool contains(const Lattice4& other) const;

  // |det| of the basis in (1, i, j, k) coordinates.
  Rational covolume() const;
  Lattice4 scaled(const Rational& s) const;

  friend bool operator==(const Lattice4&, const Lattice4&) = default;

 private:
  Lattice4(Integer den, IntMatrix hnf) : den_(std::move(den)), hnf_(std::move(hnf)) {}

  Integer den_;
  IntMatrix hnf_;
};

Lattice4 hnf_canonicalize(std::span<const QuatElement> rows);

// Generalised index [outer : inner] = covol(inner) / covol(outer).
Rational lattice_index(const Lattice4& outer, const Lattice4& inner);

// {b in B : Tr(b * conj(x)) in Z for all x in L}.
Lattice4 sharp_dual(const Lattice4& lattice, const QuatAlgebra& alg);

// Lattice spanned by all products x*y, x in lhs, y in rhs.
Lattice4 lattice_product(const Lattice4& lhs, const Lattice4& rhs, const QuatAlgebra& alg);

}  // namespace qmi
