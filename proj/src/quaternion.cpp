#include "qmi/quaternion.hpp"

#include "qmi/error.hpp"

namespace qmi {

bool QuatElement::is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

bool QuatElement::is_scalar() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

bool QuatElement::is_integral() const {
  for (const auto& x : c) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

QuatElement operator+(const QuatElement& x, const QuatElement& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

QuatElement operator-(const QuatElement& x, const QuatElement& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

QuatElement operator-(const QuatElement& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

QuatElement operator*(const Rational& s, const QuatElement& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

std::string to_string(const QuatElement& x) {
  return "[" + to_string(x[0]) + ", " + to_string(x[1]) + ", " + to_string(x[2]) + ", " + to_string(x[3]) + "]";
}

QuatAlgebra::QuatAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 || b_ == 0) throw Error("InvalidAlgebra", "structure constants must be nonzero");
}

QuatElement QuatAlgebra::mul(const QuatElement& x, const QuatElement& y) const {
  const Rational ab = a_ * b_;
  QuatElement z;
  z[0] = x[0] * y[0] + a_ * x[1] * y[1] + b_ * x[2] * y[2] - ab * x[3] * y[3];
  z[1] = x[0] * y[1] + x[1] * y[0] - b_ * x[2] * y[3] + b_ * x[3] * y[2];
  z[2] = x[0] * y[2] + x[2] * y[0] + a_ * x[1] * y[3] - a_ * x[3] * y[1];
  z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return z;
}

Rational QuatAlgebra::norm(const QuatElement& x) const {
  return x[0] * x[0] - a_ * x[1] * x[1] - b_ * x[2] * x[2] + a_ * b_ * x[3] * x[3];
}

QuatElement QuatAlgebra::inverse(const QuatElement& x) const {
  Rational n = norm(x);
  if (n == 0) throw Error("ZeroNorm", "element " + to_string(x) + " has reduced norm 0");
  return Rational(1 / n) * conjugate(x);
}

Rational QuatAlgebra::trace_form(const QuatElement& x, const QuatElement& y) const {
  return 2 * (x[0] * y[0] - a_ * x[1] * y[1] - b_ * x[2] * y[2] + a_ * b_ * x[3] * y[3]);
}

QuatElement quat_mul(const QuatElement& x, const QuatElement& y, const QuatAlgebra& alg) { return alg.mul(x, y); }

QuatElement conjugate(const QuatElement& x) { return {x[0], -x[1], -x[2], -x[3]}; }

Rational reduced_trace(const QuatElement& x) { return 2 * x[0]; }

Rational reduced_norm(const QuatElement& x, const QuatAlgebra& alg) { return alg.norm(x); }

QuatElement quat_inverse(const QuatElement& x, const QuatAlgebra& alg) { return alg.inverse(x); }

}  // namespace qmi
