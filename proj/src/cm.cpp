#include "qmi/cm.hpp"

#include "qmi/error.hpp"

namespace qmi {

namespace {

// 0, 1, -1, 2, -2, ...
long ordered_value(long idx) { return idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2); }

}  // namespace

void validate_embedding(const QuatAlgebra& alg, const CMEmbedding& emb) {
  if (emb.d <= 0) throw Error("InvalidEmbedding", "d must be positive");
  if (emb.x[0] != 0) throw Error("InvalidEmbedding", "x must have trace zero");
  if (alg.mul(emb.x, emb.x) != QuatElement::scalar(Rational(-emb.d)))
    throw Error("InvalidEmbedding", "x^2 != -d");
}

CMEmbedding find_imaginary_embedding(const QuatAlgebra& alg, const Integer& d, long bound) {
  if (d <= 0) throw Error("InvalidInput", "d must be positive");
  const Rational a = alg.a(), b = alg.b(), ab = a * b;
  for (long q = 1; q <= bound; ++q) {
    const Rational target = Rational(d) * q * q;
    for (long h = 0; h <= bound; ++h) {
      const long count = 2 * h + 1;
      for (long i3 = 0; i3 < count; ++i3)
        for (long i2 = 0; i2 < count; ++i2)
          for (long i1 = 0; i1 < count; ++i1) {
            const long n3 = ordered_value(i3), n2 = ordered_value(i2), n1 = ordered_value(i1);
            if (std::max({std::labs(n1), std::labs(n2), std::labs(n3)}) != h) continue;
            if (-a * n1 * n1 - b * n2 * n2 + ab * n3 * n3 != target) continue;
            CMEmbedding emb{d, QuatElement(0, make_rational(n1, q), make_rational(n2, q), make_rational(n3, q))};
            validate_embedding(alg, emb);
            return emb;
          }
    }
  }
  throw Error("SearchExhausted", "no embedding of Q(sqrt(-" + to_string(d) + ")) with search bound " +
                                     std::to_string(bound));
}

std::array<std::array<Integer, 3>, 2> anticommutant_plane(const QuatAlgebra& alg, const QuatElement& x) {
  // For trace-zero x, j: x j + j x = 2 (a x1 j1 + b x2 j2 - ab x3 j3).
  RatMatrix w(3, 1);
  w(0, 0) = alg.a() * x[1];
  w(1, 0) = alg.b() * x[2];
  w(2, 0) = -alg.a() * alg.b() * x[3];
  if (w(0, 0) == 0 && w(1, 0) == 0 && w(2, 0) == 0) throw Error("NoSolution", "x is central");
  IntMatrix kernel = left_kernel(scale_to_integer(w, common_denominator(w)));
  if (kernel.rows() != 2) throw Error("NoSolution", "unexpected solution rank");
  std::array<std::array<Integer, 3>, 2> out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = kernel(r, c);
  return out;
}

QuatElement anticommutant(const QuatAlgebra& alg, const QuatElement& x) {
  if (x[0] != 0) throw Error("InvalidEmbedding", "x must have trace zero");
  auto plane = anticommutant_plane(alg, x);
  QuatElement j(0, Rational(plane[0][0]), Rational(plane[0][1]), Rational(plane[0][2]));
  if (alg.mul(j, x) != -alg.mul(x, j)) throw Error("NoSolution", "anticommutation check failed");
  return j;
}

NormalizerPartition normalizer_split(const LevelRing& ring, const std::vector<TorsionPoint>& units,
                                     const TorsionPoint& x) {
  NormalizerPartition out;
  for (const auto& u : units) {
    const TorsionPoint ux = ring.mul(u, x);
    const TorsionPoint xu = ring.mul(x, u);
    if (ux == xu)
      out.k_part.push_back(u);
    else if (ux == ring.neg(xu))
      out.jk_part.push_back(u);
    else
      out.neither.push_back(u);
  }
  return out;
}

Integer fundamental_discriminant_imaginary(const Integer& d) {
  if (d <= 0) throw Error("InvalidInput", "d must be positive");
  const Integer m = squarefree_part(Rational(d));
  const Integer r = mod_floor(Integer(-m), 4);
  return r == 1 ? Integer(-m) : Integer(-4 * m);
}

QuadraticOrderInfo optimal_embedding_order(const Order& order, const CMEmbedding& emb) {
  validate_embedding(order.algebra(), emb);
  RatMatrix binv = *inverse(order.lattice().basis_matrix());
  // Rows: coordinates of 1 and x in the lattice basis.
  RatMatrix m(2, 4);
  const QuatElement one = QuatElement::scalar(1);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t k = 0; k < 4; ++k) {
      m(0, c) += one[k] * binv(k, c);
      m(1, c) += emb.x[k] * binv(k, c);
    }
  // {w : w m in Z^4}: with left * (D m) * right = S, the basis is (D / s_i) row_i(left).
  const Integer den = common_denominator(m);
  SmithResult snf = smith_normal_form(scale_to_integer(m, den));
  QuadraticOrderInfo info;
  RatMatrix wm(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) wm(i, k) = make_rational(den * snf.left(i, k), snf.diagonal[i]);
  // Present the basis as (1, omega) with omega = u + v x, v > 0 and 0 <= u < 1:
  // the Hermite form of the (v, u) columns.
  RatMatrix swapped(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    swapped(i, 0) = wm(i, 1);
    swapped(i, 1) = wm(i, 0);
  }
  const Integer wden = common_denominator(swapped);
  const IntMatrix h = hermite_normal_form(scale_to_integer(swapped, wden)).h;
  info.basis[0] = make_rational(h(1, 1), wden) * one;
  info.basis[1] = make_rational(h(0, 1), wden) * one + make_rational(h(0, 0), wden) * emb.x;
  RatMatrix form(2, 2);
  form(0, 0) = 2;
  form(1, 1) = Rational(-2 * emb.d);
  Rational disc = determinant(wm * form * wm.transposed());
  if (disc.get_den() != 1) throw Error("InternalError", "non-integral quadratic discriminant");
  info.discriminant = disc.get_num();
  info.field_discriminant = fundamental_discriminant_imaginary(emb.d);
  const Rational ratio = make_rational(info.discriminant, info.field_discriminant);
  if (ratio.get_den() != 1) throw Error("InternalError", "discriminant not a multiple of the field discriminant");
  info.conductor = exact_sqrt(ratio.get_num());
  return info;
}

}  // namespace qmi
