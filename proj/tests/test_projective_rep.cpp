#include <doctest.h>

#include "qmi/error.hpp"
#include "qmi/fixtures.hpp"
#include "qmi/projective_rep.hpp"

using namespace qmi;

namespace {

std::size_t multiplicative_order(const LevelRing& ring, const TorsionPoint& g) {
  TorsionPoint x = g;
  std::size_t k = 1;
  while (x != ring.one()) {
    x = ring.mul(x, g);
    ++k;
  }
  return k;
}

ProjectiveRepData cyclic_rep(const LevelRing& ring, const TorsionPoint& g) {
  const std::size_t m = multiplicative_order(ring, g);
  ProjectiveRepData rep{FiniteGroupTable::cyclic(m), {}, {}, {}};
  TorsionPoint x = ring.one();
  for (std::size_t s = 0; s < m; ++s) {
    rep.r.push_back(x);
    rep.deg.push_back(1);
    rep.chi.push_back(ring.nrd(x));
    x = ring.mul(x, g);
  }
  return rep;
}

// Lipschitz at level 5, Klein group {1, i, j, k} mapped to the lifts 1, i, j, k.
ProjectiveRepData klein_rep(const LevelRing& ring) {
  ProjectiveRepData rep{FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(2)), {}, {}, {}};
  for (const auto& x : {QuatElement(1, 0, 0, 0), QuatElement(0, 1, 0, 0), QuatElement(0, 0, 1, 0), QuatElement(0, 0, 0, 1)}) {
    rep.r.push_back(ring.reduce(x));
    rep.deg.push_back(1);
    rep.chi.push_back(1);
  }
  return rep;
}

}  // namespace

TEST_SUITE("projective_rep") {
  TEST_CASE("homomorphisms have trivial defect") {
    const LevelRing ring(fixture_order("split-maximal"), 5);
    const auto units = enumerate_units(ring);
    for (std::size_t t = 1; t < units.size(); t += 37) {
      const auto rep = cyclic_rep(ring, units[t]);
      const auto d = cocycle_defect(ring, rep);
      for (const auto& row : d.values)
        for (const auto& v : row) CHECK(v == ring.one());
      REQUIRE(d.lifted.has_value());
      CHECK(*d.lifted == Cocycle2::trivial(rep.group));
      for (bool ok : norm_compat_check(ring, rep)) CHECK(ok);
    }
  }

  TEST_CASE("scalar twists give the coboundary") {
    const LevelRing ring(fixture_order("split-maximal"), 7);
    const auto units = enumerate_units(ring);
    TorsionPoint g = ring.one();
    for (const auto& u : units)
      if (multiplicative_order(ring, u) >= 6) {
        g = u;
        break;
      }
    auto rep = cyclic_rep(ring, g);
    const std::size_t m = rep.group.size();
    REQUIRE(m >= 6);
    std::vector<std::int64_t> lambda(m);
    Cochain1 alpha{rep.group, {}};
    for (std::size_t s = 0; s < m; ++s) {
      lambda[s] = s == 0 ? 1 : static_cast<std::int64_t>(2 + s % 4);
      rep.r[s] = ring.scale(lambda[s], rep.r[s]);
      alpha.values.push_back(RationalUnit::from_rational(Rational(static_cast<long>(lambda[s]))));
    }
    const auto d = cocycle_defect(ring, rep, LiftChoice{coboundary(alpha)});
    REQUIRE(d.scalars.has_value());
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        const std::int64_t expected =
            mul_mod(mul_mod(lambda[s], lambda[t], 7), *inverse_mod(lambda[rep.group.mul(s, t)], 7), 7);
        CHECK((*d.scalars)[s][t] == expected);
      }
    REQUIRE(d.lifted.has_value());
    CHECK(*d.lifted == coboundary(alpha));
    // a wrong candidate is rejected
    const auto wrong = cocycle_defect(ring, rep, LiftChoice{Cocycle2::trivial(rep.group)});
    CHECK_FALSE(wrong.lifted.has_value());
  }

  TEST_CASE("the Klein example is central with the quaternion sign cocycle") {
    const LevelRing ring(fixture_order("lipschitz"), 5);
    const auto rep = klein_rep(ring);
    const auto d = cocycle_defect(ring, rep);
    for (const auto& row : d.values)
      for (const auto& v : row) {
        CHECK(ring.is_central(v));
        CHECK((v == ring.one() || v == ring.scalar(4)));
      }
    REQUIRE(d.lifted.has_value());
    CHECK(*d.lifted == quaternion_sign_cocycle());
    CHECK(verify_cocycle(rep.group, d.lifted->values()));
  }

  TEST_CASE("non-central defects") {
    const LevelRing ring(fixture_order("split-maximal"), 3);
    TorsionPoint g = ring.one();
    for (const auto& u : enumerate_units(ring))
      if (!ring.is_central(ring.mul(u, u))) {
        g = u;
        break;
      }
    REQUIRE(g != ring.one());
    ProjectiveRepData rep{FiniteGroupTable::cyclic(2), {ring.one(), g}, {1, 1}, {1, ring.nrd(g)}};
    CHECK_THROWS_AS(cocycle_defect(ring, rep), Error);
    rep.r[1] = ring.zero();
    CHECK_THROWS_AS(cocycle_defect(ring, rep), Error);
  }

  TEST_CASE("norm compatibility") {
    const LevelRing ring(fixture_order("lipschitz"), 5);
    auto rep = klein_rep(ring);
    for (bool ok : norm_compat_check(ring, rep)) CHECK(ok);
    // r = scalar c with deg = c^2
    rep.r[1] = ring.scalar(2);
    rep.deg[1] = 4;
    CHECK(norm_compat_check(ring, rep)[1]);
    rep.chi[1] = 2;
    CHECK_FALSE(norm_compat_check(ring, rep)[1]);
    rep.deg[1] = make_rational(1, 5);
    CHECK_THROWS_AS(norm_compat_check(ring, rep), Error);
  }

  TEST_CASE("determinant formula") {
    const LevelRing ring(fixture_order("lipschitz"), 5);
    auto rep = klein_rep(ring);
    rep.deg = {1, 4, 9, 1};
    rep.r[1] = ring.scale(2, rep.r[1]);
    rep.r[2] = ring.scale(3, rep.r[2]);
    const Cochain1 one{rep.group, std::vector<RationalUnit>(4)};
    const auto plain = norm_compat_check(ring, rep);
    const auto rows = det_formula_check(ring, rep, one);
    for (std::size_t s = 0; s < 4; ++s) CHECK(rows[s].ok == plain[s]);
    CHECK(rows[0].lhs == 1);
    CHECK(rows[0].rhs == 1);
    // alpha = sqrt(deg): both sides reduce to 1
    const Cochain1 root{rep.group, {RationalUnit(), RationalUnit::from_rational(2), RationalUnit::from_rational(3), RationalUnit()}};
    for (const auto& row : det_formula_check(ring, rep, root)) {
      CHECK(row.ok);
      CHECK(row.rhs == 1);
    }
    const Cochain1 bad{rep.group, {RationalUnit(), RationalUnit::from_rational(5), RationalUnit(), RationalUnit()}};
    CHECK_THROWS_AS(det_formula_check(ring, rep, bad), Error);
  }
}
