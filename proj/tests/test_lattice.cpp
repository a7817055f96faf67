#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qmi/error.hpp"
#include "qmi/fixtures.hpp"
#include "qmi/lattice.hpp"

using namespace qmi;

namespace {

std::vector<QuatElement> random_generators(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::vector<QuatElement> g;
  for (std::size_t t = 0; t < count; ++t)
    g.emplace_back(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                   make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return g;
}

std::optional<Lattice4> try_lattice(const std::vector<QuatElement>& g) {
  try {
    return Lattice4::from_generators(g);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("canonical form ignores generator order and unimodular changes") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
      auto g = random_generators(rng, 4 + t % 3);
      const auto lat = try_lattice(g);
      if (!lat) continue;
      std::shuffle(g.begin(), g.end(), rng);
      CHECK(Lattice4::from_generators(g) == *lat);
      g[0] = g[0] + Rational(3) * g[1];
      g[2] = -g[2];
      CHECK(Lattice4::from_generators(g) == *lat);
      g.push_back(g[0] + g[1]);
      CHECK(Lattice4::from_generators(g) == *lat);
      for (const auto& x : g) CHECK(lat->contains(x));
    }
  }

  TEST_CASE("coordinates reconstruct elements") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 40; ++t) {
      const auto g = random_generators(rng, 4);
      const auto lat = try_lattice(g);
      if (!lat) continue;
      const auto basis = lat->basis();
      for (const auto& x : g) {
        const auto c = lat->coordinates(x);
        REQUIRE(c.has_value());
        QuatElement y;
        for (int r = 0; r < 4; ++r) y = y + Rational((*c)[r]) * basis[r];
        CHECK(y == x);
      }
      CHECK_FALSE(lat->contains(make_rational(1, 2) * basis[3]));
    }
  }

  TEST_CASE("covolume matches the cofactor determinant") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
      const auto g = random_generators(rng, 4);
      const Rational d = abs(oracle::det(oracle::rows_of(g)));
      if (d == 0) {
        CHECK_THROWS_AS(Lattice4::from_generators(g), Error);
        continue;
      }
      CHECK(Lattice4::from_generators(g).covolume() == d);
    }
  }

  TEST_CASE("indices multiply along towers") {
    const Order h = fixture_order("hurwitz");
    const Lattice4 a = h.lattice();
    const Lattice4 b = fixture_order("lipschitz").lattice();
    const Lattice4 c = b.scaled(3);
    CHECK(lattice_index(a, b) == 2);
    CHECK(lattice_index(b, c) == 81);
    CHECK(lattice_index(a, c) == lattice_index(a, b) * lattice_index(b, c));
    CHECK(lattice_index(c, a) == make_rational(1, 162));
    CHECK(a.contains(b));
    CHECK_FALSE(b.contains(a));
  }

  TEST_CASE("dual lattices") {
    const QuatAlgebra alg(-1, 3);
    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
      const auto g = random_generators(rng, 4);
      const auto lat = try_lattice(g);
      if (!lat) continue;
      const Lattice4 dual = sharp_dual(*lat, alg);
      for (const auto& y : dual.basis())
        for (const auto& x : lat->basis()) CHECK(alg.trace_form(y, x).get_den() == 1);
      CHECK(sharp_dual(dual, alg) == *lat);
      // covol(L) covol(L#) = 1 / |det Gram| with Gram = diag(2, -2a, -2b, 2ab)
      CHECK(lat->covolume() * dual.covolume() * 2 * 2 * 2 * 2 * 3 * 3 == 1);
      const Lattice4 sub = lat->scaled(2);
      CHECK(lat->contains(sub));
      CHECK(sharp_dual(sub, alg).contains(dual));
    }
  }

  TEST_CASE("products") {
    const Order h = fixture_order("hurwitz");
    CHECK(lattice_product(h.lattice(), h.lattice(), h.algebra()) == h.lattice());
    const Lattice4 two = h.lattice().scaled(2);
    CHECK(lattice_product(two, h.lattice(), h.algebra()) == two);
  }
}
