#pragma once

#include <string>
#include <vector>

#include "qmi/arith.hpp"
#include "qmi/quaternion.hpp"

namespace qmi {

// A place of Q: a prime p or the real place.
struct Place {
  bool infinite = false;
  Integer prime = 0;

  static Place infinity() { return {true, 0}; }
  static Place at(Integer p);  // throws Error("InvalidPlace") unless p is prime

  std::string label() const;  // "p" or "inf"
  friend bool operator==(const Place&, const Place&) = default;
};

// (a,b)_v in {+1,-1}. Both arguments must be nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

// Finite places where (a,b)_p can be -1: 2 and the primes dividing the
// numerators and denominators of a and b. Ascending.
std::vector<Integer> candidate_primes(const Rational& a, const Rational& b);

struct AlgebraDiscriminant {
  Integer disc;                 // product of ramified finite primes
  std::vector<Place> ramified;  // finite primes ascending, then "inf" if definite
  bool definite = false;
};

AlgebraDiscriminant algebra_discriminant(const QuatAlgebra& alg);

}  // namespace qmi
