#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qmi/level_ring.hpp"

namespace qmi {

// x in B with Tr(x) = 0 and Norm(x) = d, so Q(x) = Q(sqrt(-d)).
struct CMEmbedding {
  Integer d;
  QuatElement x;
};

// Bounded search over x = (0, n1, n2, n3)/q with 1 <= q <= bound and
// |n_i| <= bound. Denominators grow first, then the height max |n_i|;
// within a height the key (n3, n2, n1) runs through 0, 1, -1, 2, -2, ...
// Throws Error("SearchExhausted"); Error("InvalidInput") for d <= 0.
CMEmbedding find_imaginary_embedding(const QuatAlgebra& alg, const Integer& d, long bound);

// Checks Tr(x) = 0, x^2 = -d; throws Error("InvalidEmbedding").
void validate_embedding(const QuatAlgebra& alg, const CMEmbedding& emb);

// The trace-zero j with j x = -x j, as integer coordinates (j1, j2, j3): the
// plane of solutions meets Z^3 in a rank-2 lattice and its Hermite basis is
// returned, first row first. Throws Error("NoSolution") when x is central.
std::array<std::array<Integer, 3>, 2> anticommutant_plane(const QuatAlgebra& alg, const QuatElement& x);
QuatElement anticommutant(const QuatAlgebra& alg, const QuatElement& x);

struct NormalizerPartition {
  std::vector<TorsionPoint> k_part;   // u x = x u
  std::vector<TorsionPoint> jk_part;  // u x = -x u (and not in k_part)
  std::vector<TorsionPoint> neither;
};

// Level-N classification of units against the reduction of x.
NormalizerPartition normalizer_split(const LevelRing& ring, const std::vector<TorsionPoint>& units,
                                     const TorsionPoint& x);

struct QuadraticOrderInfo {
  std::array<QuatElement, 2> basis;  // Z-basis of O cap (Q + Q x)
  Integer discriminant;
  Integer field_discriminant;  // of Q(sqrt(-d))
  Integer conductor;
};

QuadraticOrderInfo optimal_embedding_order(const Order& order, const CMEmbedding& emb);

// Discriminant of the maximal order of Q(sqrt(-d)).
Integer fundamental_discriminant_imaginary(const Integer& d);

}  // namespace qmi
