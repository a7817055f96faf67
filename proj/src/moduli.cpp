#include "qmi/moduli.hpp"

#include "qmi/error.hpp"

namespace qmi {

namespace {

TorsionPoint apply(const LevelRing& target, const TorsionPoint& x, const IntMatrix& m) {
  std::array<std::int64_t, 4> out{};
  const std::int64_t n = target.level();
  for (std::size_t c = 0; c < 4; ++c) {
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < 4; ++r) acc = (acc + mul_mod(x.c[r], mod_floor(m(r, c), n), n)) % n;
    out[c] = acc;
  }
  return target.point(out);
}

}  // namespace

ModuliChange::ModuliChange(const LevelRing& small, const LevelRing& big) : small_(&small), big_(&big) {
  if (small.level() != big.level()) throw Error("LevelMismatch", "rings of different levels");
  if (!(small.order().algebra() == big.order().algebra()))
    throw Error("NotContained", "orders live in different algebras");
  if (!big.order().lattice().contains(small.order().lattice()))
    throw Error("NotContained", "the order is not contained in the overorder");
  c_ = IntMatrix(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    auto coords = big.order().coordinates(small.order().basis()[r]);
    for (std::size_t k = 0; k < 4; ++k) c_(r, k) = coords[k];
  }
  index_ = abs(determinant(c_));
  RatMatrix inv = *inverse(to_rational(c_));
  c_vee_ = IntMatrix(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) {
      Rational v = Rational(index_) * inv(r, k);
      c_vee_(r, k) = v.get_num();  // integral: index * C^-1 = +-adj(C)
    }
}

TorsionPoint ModuliChange::lambda(const TorsionPoint& x) const {
  if (x.level != small_->level()) throw Error("LevelMismatch", "point level differs from the ring level");
  return apply(*big_, x, c_);
}

TorsionPoint ModuliChange::lambda_vee(const TorsionPoint& y) const {
  if (y.level != big_->level()) throw Error("LevelMismatch", "point level differs from the ring level");
  return apply(*small_, y, c_vee_);
}

KernelModule ModuliChange::kernel() const {
  // x C = 0 mod N. With left * C * right = S and z = x left^-1 this reads
  // z_i s_i = 0 mod N, so z_i runs over multiples of N / gcd(N, s_i).
  const std::int64_t n = small_->level();
  SmithResult snf = smith_normal_form(c_);
  KernelModule km;
  for (std::size_t i = 0; i < 4; ++i) {
    const Integer g = gcd(Integer(static_cast<long>(n)), snf.diagonal[i]);
    if (g == 1) continue;
    const Integer step = Integer(static_cast<long>(n)) / g;
    QuatElement gen;
    for (std::size_t k = 0; k < 4; ++k)
      gen = gen + make_rational(step * snf.left(i, k), Integer(static_cast<long>(n))) * small_->order().basis()[k];
    km.elementary_divisors.push_back(g);
    km.generators.push_back(gen);
  }
  return km;
}

}  // namespace qmi
