#include "qmi/order.hpp"

#include "qmi/error.hpp"
#include "qmi/hilbert.hpp"

namespace qmi {

namespace {

const QuatElement kOne = QuatElement::scalar(1);

RatMatrix rows_matrix(std::span<const QuatElement> rows) {
  RatMatrix m(rows.size(), 4);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

// A basis of the lattice whose first vector is 1 (1 is primitive in any order).
std::array<QuatElement, 4> basis_through_one(const Lattice4& lattice) {
  auto coords = lattice.coordinates(kOne);
  IntMatrix v(1, 4);
  for (std::size_t c = 0; c < 4; ++c) v(0, c) = (*coords)[c];
  SmithResult s = smith_normal_form(v);
  // v = left^-1 * (1,0,0,0) * right^-1, so row 0 of right^-1 is +-v.
  auto right_inv = inverse(to_rational(s.right));
  const auto hnf_basis = lattice.basis();
  std::array<QuatElement, 4> out;
  for (std::size_t r = 0; r < 4; ++r) {
    QuatElement e;
    for (std::size_t k = 0; k < 4; ++k) e = e + Rational((*right_inv)(r, k)) * hnf_basis[k];
    out[r] = e;
  }
  if (out[0] == -kOne) out[0] = kOne;
  return out;
}

}  // namespace

bool is_order(const Lattice4& lattice, const QuatAlgebra& alg) {
  if (!lattice.contains(kOne)) return false;
  const auto b = lattice.basis();
  for (const auto& x : b)
    for (const auto& y : b) {
      if (!lattice.contains(alg.mul(x, y))) return false;
    }
  return true;
}

Order::Order(QuatAlgebra alg, std::span<const QuatElement> generators)
    : alg_(std::move(alg)), lattice_(Lattice4::from_generators(generators)) {
  if (!is_order(lattice_, alg_)) throw Error("NotAnOrder", "lattice is not a ring containing 1");
  if (generators.size() == 4 && generators[0] == kOne) {
    std::copy(generators.begin(), generators.end(), basis_.begin());
  } else {
    basis_ = basis_through_one(lattice_);
  }
  basis_inverse_ = *inverse(rows_matrix(basis_));
}

std::optional<std::array<Integer, 4>> Order::try_coordinates(const QuatElement& x) const {
  std::array<Integer, 4> out;
  for (std::size_t c = 0; c < 4; ++c) {
    Rational v = 0;
    for (std::size_t k = 0; k < 4; ++k) v += x[k] * basis_inverse_(k, c);
    if (v.get_den() != 1) return std::nullopt;
    out[c] = v.get_num();
  }
  return out;
}

std::array<Integer, 4> Order::coordinates(const QuatElement& x) const {
  auto c = try_coordinates(x);
  if (!c) throw Error("NotInOrder", to_string(x) + " is not in the order");
  return *c;
}

Integer reduced_discriminant(const Order& order) {
  RatMatrix gram(4, 4);
  const auto& b = order.basis();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) gram(r, c) = reduced_trace(order.algebra().mul(b[r], b[c]));
  Rational det = determinant(gram);
  if (det.get_den() != 1) throw Error("NotASquare", "Gram determinant " + to_string(det) + " is not integral");
  return exact_sqrt(abs(det.get_num()));
}

Integer eichler_level(const Order& order) {
  Integer d = reduced_discriminant(order);
  Integer disc = algebra_discriminant(order.algebra()).disc;
  if (mpz_divisible_p(d.get_mpz_t(), disc.get_mpz_t()) == 0)
    throw Error("NotDivisible", "d(O) = " + to_string(d) + " is not divisible by disc(B) = " + to_string(disc));
  return d / disc;
}

LeftIdeal::LeftIdeal(Order left_order, Lattice4 lattice) : order_(std::move(left_order)), lattice_(std::move(lattice)) {
  const auto ib = lattice_.basis();
  for (const auto& o : order_.basis())
    for (const auto& x : ib) {
      if (!lattice_.contains(order_.algebra().mul(o, x)))
        throw Error("NotAnIdeal", "lattice is not stable under left multiplication by the order");
    }
}

LeftIdeal principal_left_ideal(const Order& order, const QuatElement& g) {
  if (order.algebra().norm(g) == 0) throw Error("ZeroNorm", "generator " + to_string(g) + " has reduced norm 0");
  std::array<QuatElement, 4> rows;
  for (std::size_t r = 0; r < 4; ++r) rows[r] = order.algebra().mul(order.basis()[r], g);
  return LeftIdeal(order, Lattice4::from_generators(rows));
}

LeftIdeal scalar_ideal(const Order& order, const Rational& s) {
  if (s == 0) throw Error("ZeroNorm", "scalar ideal of 0");
  return LeftIdeal(order, order.lattice().scaled(s));
}

Rational nrd_ideal(const LeftIdeal& ideal) {
  const Order& o = ideal.left_order();
  // Coordinates of the ideal basis in the order basis; m clears them so m*I is in O.
  RatMatrix coords(4, 4);
  const auto ib = ideal.lattice().basis();
  auto oinv = inverse(o.lattice().basis_matrix());
  RatMatrix ibm = ideal.lattice().basis_matrix();
  coords = ibm * *oinv;
  Integer m = common_denominator(coords);
  IntMatrix scaled = scale_to_integer(coords, m);
  Integer index = abs(determinant(scaled));
  if (!is_perfect_square(index))
    throw Error("NotLocallyPrincipal", "[O : mI] = " + to_string(index) + " is not a perfect square");
  Integer s = exact_sqrt(index);
  return make_rational(s, Integer(m * m));
}

Integer KernelModule::order() const {
  Integer n = 1;
  for (const auto& d : elementary_divisors) n *= d;
  return n;
}

std::vector<QuatElement> KernelModule::representatives(std::size_t max_count) const {
  Integer n = order();
  if (n > max_count) throw Error("TooLarge", "kernel has " + to_string(n) + " elements");
  std::vector<QuatElement> out;
  std::vector<unsigned long> t(elementary_divisors.size(), 0);
  const std::size_t total = n.get_ui();
  out.reserve(total);
  for (std::size_t count = 0; count < total; ++count) {
    QuatElement e;
    for (std::size_t i = 0; i < t.size(); ++i) e = e + Rational(t[i]) * generators[i];
    out.push_back(e);
    // odometer, last coordinate fastest
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < elementary_divisors[i].get_ui()) break;
      t[i] = 0;
    }
  }
  return out;
}

KernelModule kernel_module(const Order& order, const LeftIdeal& ideal) {
  if (!ideal.lattice().contains(order.lattice()))
    throw Error("NotContained", "the order is not contained in the ideal");
  const auto ib = ideal.lattice().basis();
  IntMatrix m(4, 4);
  const auto ob = order.lattice().basis();
  for (std::size_t r = 0; r < 4; ++r) {
    auto c = *ideal.lattice().coordinates(ob[r]);
    for (std::size_t k = 0; k < 4; ++k) m(r, k) = c[k];
  }
  // left * m * right = S; the ideal basis f = right^-1 * ib has O = span(S_i f_i).
  SmithResult s = smith_normal_form(m);
  auto right_inv = *inverse(to_rational(s.right));
  KernelModule km;
  for (std::size_t i = 0; i < 4; ++i) {
    if (s.diagonal[i] == 1) continue;
    QuatElement f;
    for (std::size_t k = 0; k < 4; ++k) f = f + Rational(right_inv(i, k)) * ib[k];
    km.elementary_divisors.push_back(s.diagonal[i]);
    km.generators.push_back(f);
  }
  return km;
}

Rational isogeny_degree(const LeftIdeal& ideal) {
  if (!ideal.lattice().contains(ideal.left_order().lattice()))
    throw Error("NotContained", "the order is not contained in the ideal");
  return 1 / nrd_ideal(ideal);
}

bool dual_inclusion_check(const LeftIdeal& ideal) {
  if (!ideal.lattice().contains(ideal.left_order().lattice()))
    throw Error("NotContained", "the order is not contained in the ideal");
  Rational n = nrd_ideal(ideal);
  return ideal.left_order().lattice().scaled(n).contains(ideal.lattice());
}

}  // namespace qmi
