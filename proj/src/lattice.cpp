#include "qmi/lattice.hpp"

#include "qmi/error.hpp"

namespace qmi {

Lattice4 Lattice4::from_generators(std::span<const QuatElement> gens) {
  Integer den = 1;
  for (const auto& g : gens)
    for (const auto& x : g.c) den = lcm(den, x.get_den());
  IntMatrix m(gens.size(), 4);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Rational v = gens[r][c] * den;
      m(r, c) = v.get_num();
    }
  HermiteResult h = hermite_normal_form(m);
  if (h.rank != 4) throw Error("RankDeficient", "generators span a lattice of rank " + std::to_string(h.rank));
  RatMatrix basis(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) basis(r, c) = Rational(h.h(r, c)) / den;
  Integer d0 = common_denominator(basis);
  // Rescaling an HNF by a positive rational keeps it in HNF.
  return Lattice4(d0, scale_to_integer(basis, d0));
}

std::array<QuatElement, 4> Lattice4::basis() const {
  std::array<QuatElement, 4> out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r][c] = make_rational(hnf_(r, c), den_);
  return out;
}

RatMatrix Lattice4::basis_matrix() const {
  RatMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = make_rational(hnf_(r, c), den_);
  return m;
}

std::optional<std::array<Integer, 4>> Lattice4::coordinates(const QuatElement& x) const {
  std::array<Integer, 4> y;
  for (std::size_t c = 0; c < 4; ++c) {
    Rational v = x[c] * den_;
    if (v.get_den() != 1) return std::nullopt;
    y[c] = v.get_num();
  }
  // Forward substitution against the upper-triangular HNF.
  std::array<Integer, 4> v;
  for (std::size_t c = 0; c < 4; ++c) {
    Integer rest = y[c];
    for (std::size_t r = 0; r < c; ++r) rest -= v[r] * hnf_(r, c);
    if (mpz_divisible_p(rest.get_mpz_t(), hnf_(c, c).get_mpz_t()) == 0) return std::nullopt;
    v[c] = rest / hnf_(c, c);
  }
  return v;
}

bool Lattice4::contains(const Lattice4& other) const {
  for (const auto& b : other.basis()) {
    if (!contains(b)) return false;
  }
  return true;
}

Rational Lattice4::covolume() const {
  Integer det = 1;
  for (std::size_t i = 0; i < 4; ++i) det *= hnf_(i, i);
  Integer d4 = den_ * den_ * den_ * den_;
  return make_rational(det, d4);
}

Lattice4 Lattice4::scaled(const Rational& s) const {
  if (s == 0) throw Error("RankDeficient", "scaling a lattice by zero");
  auto b = basis();
  for (auto& e : b) e = s * e;
  return from_generators(b);
}

Lattice4 hnf_canonicalize(std::span<const QuatElement> rows) { return Lattice4::from_generators(rows); }

Rational lattice_index(const Lattice4& outer, const Lattice4& inner) { return inner.covolume() / outer.covolume(); }

Lattice4 sharp_dual(const Lattice4& lattice, const QuatAlgebra& alg) {
  // Dual rows D satisfy D * G * B^T = I for the trace form G.
  const RatMatrix b = lattice.basis_matrix();
  RatMatrix gbt(4, 4);
  const std::array<Rational, 4> g{Rational(2), Rational(-2 * alg.a()), Rational(-2 * alg.b()),
                                  Rational(2 * alg.a() * alg.b())};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) gbt(r, c) = g[r] * b(c, r);
  auto inv = inverse(gbt);
  if (!inv) throw Error("RankDeficient", "trace form is degenerate on lattice");
  std::array<QuatElement, 4> rows;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) rows[r][c] = (*inv)(r, c);
  return Lattice4::from_generators(rows);
}

Lattice4 lattice_product(const Lattice4& lhs, const Lattice4& rhs, const QuatAlgebra& alg) {
  std::vector<QuatElement> gens;
  gens.reserve(16);
  for (const auto& x : lhs.basis())
    for (const auto& y : rhs.basis()) gens.push_back(alg.mul(x, y));
  return Lattice4::from_generators(gens);
}

}  // namespace qmi
