#include "qmi/rational_unit.hpp"

#include "qmi/error.hpp"

namespace qmi {

RationalUnit::RationalUnit(int sign, std::map<Integer, long> exponents) : sign_(sign < 0 ? -1 : 1) {
  for (auto& [p, e] : exponents) {
    if (e == 0) continue;
    if (p < 2 || !is_prime(p)) throw Error("NotPrime", to_string(p) + " is not a prime");
    exp_.emplace(p, e);
  }
}

RationalUnit RationalUnit::from_rational(const Rational& x) {
  if (x == 0) throw Error("ZeroValue", "0 is not a unit of Q");
  std::map<Integer, long> exp;
  for (auto& [p, e] : factor(x.get_num())) exp[p] += static_cast<long>(e);
  for (auto& [p, e] : factor(x.get_den())) exp[p] -= static_cast<long>(e);
  return RationalUnit(sgn(x), std::move(exp));
}

long RationalUnit::exponent(const Integer& p) const {
  auto it = exp_.find(p);
  return it == exp_.end() ? 0 : it->second;
}

Rational RationalUnit::to_rational() const {
  Integer num = sign_, den = 1;
  for (const auto& [p, e] : exp_) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      num *= pe;
    else
      den *= pe;
  }
  return make_rational(num, den);
}

RationalUnit RationalUnit::inverse() const { return pow(-1); }

RationalUnit RationalUnit::pow(long k) const {
  RationalUnit out;
  out.sign_ = (k % 2 != 0) ? sign_ : 1;
  if (k != 0)
    for (const auto& [p, e] : exp_) out.exp_.emplace(p, e * k);
  return out;
}

RationalUnit operator*(const RationalUnit& x, const RationalUnit& y) {
  RationalUnit out = x;
  out.sign_ = x.sign_ * y.sign_;
  for (const auto& [p, e] : y.exp_) {
    long& slot = out.exp_[p];
    slot += e;
    if (slot == 0) out.exp_.erase(p);
  }
  return out;
}

std::string to_string(const RationalUnit& x) { return to_string(x.to_rational()); }

}  // namespace qmi
