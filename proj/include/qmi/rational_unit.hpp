#pragma once

#include <map>
#include <string>

#include "qmi/arith.hpp"

namespace qmi {

// Element sign * prod p^e of Q^x, stored through the decomposition
// Q^x = {+-1} x (free abelian group on the primes). Zero exponents are never stored.
class RationalUnit {
 public:
  RationalUnit() = default;
  RationalUnit(int sign, std::map<Integer, long> exponents);
  // Throws Error("ZeroValue") for 0.
  static RationalUnit from_rational(const Rational& x);

  int sign() const { return sign_; }
  const std::map<Integer, long>& exponents() const { return exp_; }
  long exponent(const Integer& p) const;
  bool is_one() const { return sign_ == 1 && exp_.empty(); }
  Rational to_rational() const;
  RationalUnit inverse() const;
  RationalUnit pow(long k) const;

  friend RationalUnit operator*(const RationalUnit& x, const RationalUnit& y);
  friend RationalUnit operator/(const RationalUnit& x, const RationalUnit& y) { return x * y.inverse(); }
  friend bool operator==(const RationalUnit&, const RationalUnit&) = default;

 private:
  int sign_ = 1;
  std::map<Integer, long> exp_;
};

std::string to_string(const RationalUnit& x);

}  // namespace qmi
