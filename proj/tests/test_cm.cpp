#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmi/cm.hpp"
#include "qmi/error.hpp"
#include "qmi/fixtures.hpp"

using namespace qmi;

namespace {

void check_square(const QuatAlgebra& alg, const CMEmbedding& e) {
  const QuatElement sq = oracle::mul(e.x, e.x, alg.a(), alg.b());
  CHECK(sq == QuatElement::scalar(Rational(-e.d)));
  CHECK(reduced_trace(e.x) == 0);
}

// Linear conditions on (y1, y2, y3) for y x + x y = 0 with y trace zero,
// one row per output coordinate.
std::vector<std::vector<Rational>> anticommutation_system(const QuatAlgebra& alg, const QuatElement& x) {
  std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(3));
  for (int c = 0; c < 3; ++c) {
    QuatElement y;
    y[c + 1] = 1;
    const QuatElement s = oracle::mul(y, x, alg.a(), alg.b()) + oracle::mul(x, y, alg.a(), alg.b());
    for (int r = 0; r < 4; ++r) rows[r][c] = s[r];
  }
  return rows;
}

}  // namespace

TEST_SUITE("cm") {
  TEST_CASE("embeddings in the Hamilton quaternions") {
    const QuatAlgebra h(-1, -1);
    CHECK(find_imaginary_embedding(h, 1, 10).x == QuatElement(0, 1, 0, 0));
    CHECK(find_imaginary_embedding(h, 2, 10).x == QuatElement(0, 1, 1, 0));
    CHECK(find_imaginary_embedding(h, 3, 10).x == QuatElement(0, 1, 1, 1));
    for (long d : {1, 2, 3, 5, 6, 11}) {
      const auto e = find_imaginary_embedding(h, d, 10);
      CHECK(e.d == d);
      check_square(h, e);
      CHECK_NOTHROW(validate_embedding(h, e));
    }
    // 2 splits in Q(sqrt(-7)), which therefore does not embed
    CHECK_THROWS_AS(find_imaginary_embedding(h, 7, 5), Error);
    CHECK_THROWS_AS(find_imaginary_embedding(h, 0, 5), Error);
  }

  TEST_CASE("embeddings in other algebras") {
    const QuatAlgebra split(1, 1);
    const auto e = find_imaginary_embedding(split, 1, 2);
    CHECK(e.x == QuatElement(0, 0, 0, 1));
    check_square(split, e);
    const QuatAlgebra alg(-1, 3);
    // ramified at 2 and 3: only fields in which neither prime splits embed
    for (long d : {1, 3, 6}) check_square(alg, find_imaginary_embedding(alg, d, 10));
    CHECK_THROWS_AS(find_imaginary_embedding(alg, 2, 6), Error);
    CHECK_THROWS_AS(validate_embedding(split, CMEmbedding{2, QuatElement(0, 0, 0, 1)}), Error);
  }

  TEST_CASE("anticommutants") {
    const QuatAlgebra h(-1, -1);
    CHECK(anticommutant(h, QuatElement(0, 1, 0, 0)) == QuatElement(0, 0, 1, 0));
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    for (const auto& alg : {h, QuatAlgebra(1, 1), QuatAlgebra(-1, 3), QuatAlgebra(-2, 5)}) {
      for (int t = 0; t < 20; ++t) {
        const QuatElement x(0, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                            make_rational(num(rng), den(rng)));
        if (x.is_zero()) continue;
        CHECK(oracle::rank(anticommutation_system(alg, x)) == 1);
        const auto plane = anticommutant_plane(alg, x);
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : plane) rows.push_back({Rational(row[0]), Rational(row[1]), Rational(row[2])});
        CHECK(oracle::rank(rows) == 2);
        const QuatElement j = anticommutant(alg, x);
        CHECK(j == QuatElement(0, Rational(plane[0][0]), Rational(plane[0][1]), Rational(plane[0][2])));
        CHECK(oracle::mul(j, x, alg.a(), alg.b()) == -oracle::mul(x, j, alg.a(), alg.b()));
        const QuatElement j2 = oracle::mul(j, j, alg.a(), alg.b());
        CHECK(j2.is_scalar());
        CHECK(j2[0] != 0);
        // j k j^-1 = conj(k) on Q + Q x
        const QuatElement k = QuatElement::scalar(make_rational(num(rng), den(rng))) + make_rational(num(rng), den(rng)) * x;
        CHECK(alg.mul(alg.mul(j, k), alg.inverse(j)) == conjugate(k));
      }
    }
    CHECK_THROWS_AS(anticommutant(h, QuatElement()), Error);
  }

  TEST_CASE("normalizer partition at level 3") {
    const Order o = fixture_order("split-maximal");
    const LevelRing ring(o, 3);
    const auto units = enumerate_units(ring);
    const auto e = find_imaginary_embedding(o.algebra(), 1, 10);
    const TorsionPoint x = ring.reduce(e.x);
    const auto part = normalizer_split(ring, units, x);
    CHECK(part.k_part.size() + part.jk_part.size() + part.neither.size() == units.size());
    CHECK(std::find(part.k_part.begin(), part.k_part.end(), ring.one()) != part.k_part.end());
    const QuatElement j = anticommutant(o.algebra(), e.x);
    if (o.contains(j) && ring.is_unit(ring.reduce(j)))
      CHECK(std::find(part.jk_part.begin(), part.jk_part.end(), ring.reduce(j)) != part.jk_part.end());
    auto in = [](const std::vector<TorsionPoint>& v, const TorsionPoint& p) {
      return std::find(v.begin(), v.end(), p) != v.end();
    };
    for (const auto& u : part.k_part) CHECK(ring.mul(u, x) == ring.mul(x, u));
    for (const auto& u : part.jk_part) CHECK(ring.mul(u, x) == ring.neg(ring.mul(x, u)));
    for (const auto& u : part.k_part)
      for (const auto& v : part.k_part) CHECK(in(part.k_part, ring.mul(u, v)));
    for (const auto& u : part.k_part)
      for (const auto& v : part.jk_part) {
        CHECK(in(part.jk_part, ring.mul(u, v)));
        CHECK(in(part.jk_part, ring.mul(v, u)));
      }
    for (const auto& u : part.jk_part)
      for (const auto& v : part.jk_part) CHECK(in(part.k_part, ring.mul(u, v)));
    CHECK(part.k_part.size() == part.jk_part.size());
    CHECK_FALSE(part.neither.empty());
  }

  TEST_CASE("optimal embeddings") {
    struct Case {
      const char* order;
      QuatElement x;
      long d;
      long disc;
      long field;
      long conductor;
    };
    const std::vector<Case> cases = {
        {"hurwitz", {0, 1, 0, 0}, 1, -4, -4, 1},
        {"hurwitz", {0, 1, 1, 1}, 3, -3, -3, 1},
        {"lipschitz", {0, 1, 1, 1}, 3, -12, -3, 2},
        {"lipschitz", {0, 1, 0, 0}, 1, -4, -4, 1},
        {"hurwitz", {0, 2, 0, 0}, 4, -4, -4, 1},
        {"split-maximal", {0, 0, 0, 1}, 1, -4, -4, 1},
    };
    for (const auto& c : cases) {
      const Order o = fixture_order(c.order);
      const auto info = optimal_embedding_order(o, CMEmbedding{c.d, c.x});
      CAPTURE(c.order);
      CAPTURE(to_string(c.x));
      CHECK(info.discriminant == c.disc);
      CHECK(info.field_discriminant == c.field);
      CHECK(info.conductor == c.conductor);
      CHECK(info.basis[0] == QuatElement::scalar(1));
      const QuatElement w = info.basis[1];
      CHECK(o.contains(w));
      const Rational disc = reduced_trace(w) * reduced_trace(w) - 4 * o.algebra().norm(w);
      CHECK(disc == Rational(info.discriminant));
      // every u + v x in O with small denominators lies in Z + Z w
      for (long m = 1; m <= 4; ++m)
        for (long s = -8; s <= 8; ++s)
          for (long t = -8; t <= 8; ++t) {
            const QuatElement y = QuatElement::scalar(make_rational(s, m)) + make_rational(t, m) * c.x;
            if (!o.contains(y)) continue;
            // solve y = p + q w through a nonzero imaginary coordinate of w
            int r = 1;
            while (w[r] == 0) ++r;
            const Rational q = y[r] / w[r];
            const Rational p = y[0] - q * w[0];
            CHECK(QuatElement::scalar(p) + q * w == y);
            CHECK(q.get_den() == 1);
            CHECK(p.get_den() == 1);
          }
    }
  }

  TEST_CASE("fundamental discriminants") {
    CHECK(fundamental_discriminant_imaginary(1) == -4);
    CHECK(fundamental_discriminant_imaginary(2) == -8);
    CHECK(fundamental_discriminant_imaginary(3) == -3);
    CHECK(fundamental_discriminant_imaginary(4) == -4);
    CHECK(fundamental_discriminant_imaginary(5) == -20);
    CHECK(fundamental_discriminant_imaginary(7) == -7);
    CHECK(fundamental_discriminant_imaginary(12) == -3);
    CHECK(fundamental_discriminant_imaginary(18) == -8);
  }
}
