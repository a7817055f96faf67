#pragma once

#include <array>
#include <string>

#include "qmi/arith.hpp"

namespace qmi {

// Element x0 + x1*i + x2*j + x3*k of a quaternion algebra over Q.
struct QuatElement {
  std::array<Rational, 4> c{};

  QuatElement() = default;
  QuatElement(Rational x0, Rational x1, Rational x2, Rational x3) : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}
  static QuatElement scalar(const Rational& s) { return {s, 0, 0, 0}; }

  const Rational& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const;
  bool is_scalar() const;
  bool is_integral() const;  // all four coordinates in Z

  friend bool operator==(const QuatElement&, const QuatElement&) = default;
};

QuatElement operator+(const QuatElement& x, const QuatElement& y);
QuatElement operator-(const QuatElement& x, const QuatElement& y);
QuatElement operator-(const QuatElement& x);
QuatElement operator*(const Rational& s, const QuatElement& x);

std::string to_string(const QuatElement& x);

// The algebra (a,b | Q): i^2 = a, j^2 = b, k = ij = -ji.
class QuatAlgebra {
 public:
  // Throws Error("InvalidAlgebra") when a or b is zero.
  QuatAlgebra(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  QuatElement mul(const QuatElement& x, const QuatElement& y) const;
  Rational norm(const QuatElement& x) const;
  // Throws Error("ZeroNorm") when Norm(x) == 0.
  QuatElement inverse(const QuatElement& x) const;
  // Tr(x * conj(y)) = 2(x0y0 - a x1y1 - b x2y2 + ab x3y3); symmetric in x, y.
  Rational trace_form(const QuatElement& x, const QuatElement& y) const;

  friend bool operator==(const QuatAlgebra&, const QuatAlgebra&) = default;

 private:
  Rational a_;
  Rational b_;
};

QuatElement quat_mul(const QuatElement& x, const QuatElement& y, const QuatAlgebra& alg);
QuatElement conjugate(const QuatElement& x);
Rational reduced_trace(const QuatElement& x);
Rational reduced_norm(const QuatElement& x, const QuatAlgebra& alg);
QuatElement quat_inverse(const QuatElement& x, const QuatAlgebra& alg);

}  // namespace qmi
