#include <doctest.h>

#include "qmi/arith.hpp"
#include "qmi/error.hpp"

using namespace qmi;

TEST_SUITE("arith") {
  TEST_CASE("rationals are reduced with positive denominators") {
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
  }

  TEST_CASE("parsing") {
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_integer("1/2"), Error);
  }

  TEST_CASE("factorisation matches trial division") {
    for (long n = 1; n < 3000; ++n) {
      Integer prod = 1;
      for (const auto& [p, e] : factor(n)) {
        CHECK(is_prime(p));
        for (unsigned k = 0; k < e; ++k) prod *= p;
      }
      CHECK(prod == n);
    }
    // a product of two primes beyond the trial-division range
    const Integer big = Integer("1000003") * Integer("998244353");
    auto f = factor(big);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 1000003);
    CHECK(f[1].first == 998244353);
  }

  TEST_CASE("squarefree part keeps the sign and the square class") {
    CHECK(squarefree_part(Rational(12)) == 3);
    CHECK(squarefree_part(Rational(-8)) == -2);
    CHECK(squarefree_part(make_rational(3, 4)) == 3);
    CHECK(squarefree_part(make_rational(1, 2)) == 2);
    CHECK_THROWS_AS(squarefree_part(Rational(0)), Error);
  }

  TEST_CASE("modular helpers") {
    CHECK(mod_floor(-7, 5) == 3);
    CHECK(mod_floor(Integer(-7), 5) == 3);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_FALSE(inverse_mod(4, 8).has_value());
    CHECK(is_unit_mod(0, 1));
    CHECK(reduce_mod(make_rational(1, 2), 5) == 3);
    CHECK_FALSE(reduce_mod(make_rational(1, 5), 5).has_value());
    CHECK(exact_sqrt(Integer(144)) == 12);
    CHECK_THROWS_AS(exact_sqrt(Integer(2)), Error);
    CHECK(valuation(Integer(48), Integer(2)) == 4);
  }
}
