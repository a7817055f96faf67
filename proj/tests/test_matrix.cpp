#include <doctest.h>

#include <random>

#include "qmi/matrix.hpp"

using namespace qmi;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("Hermite normal form") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
      const std::size_t rows = 1 + t % 6, cols = 1 + (t / 6) % 5;
      const IntMatrix a = random_matrix(rng, rows, cols, 9);
      const HermiteResult h = hermite_normal_form(a);
      CHECK(h.transform * a == h.h);
      CHECK(unimodular(h.transform));
      CHECK(h.rank == rank(to_rational(a)));
      for (std::size_t r = 0; r < h.rank; ++r) {
        const std::size_t pc = h.pivot_cols[r];
        CHECK(h.h(r, pc) > 0);
        for (std::size_t c = 0; c < pc; ++c) CHECK(h.h(r, c) == 0);
        for (std::size_t above = 0; above < r; ++above) {
          CHECK(h.h(above, pc) >= 0);
          CHECK(h.h(above, pc) < h.h(r, pc));
        }
      }
      for (std::size_t r = h.rank; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) CHECK(h.h(r, c) == 0);
    }
  }

  TEST_CASE("Smith normal form") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
      const std::size_t rows = 1 + t % 5, cols = 1 + (t / 5) % 5;
      const IntMatrix a = random_matrix(rng, rows, cols, 12);
      const SmithResult s = smith_normal_form(a);
      const IntMatrix d = s.left * a * s.right;
      CHECK(unimodular(s.left));
      CHECK(unimodular(s.right));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
      for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        CHECK(s.diagonal[i] >= 0);
        if (s.diagonal[i] != 0)
          CHECK(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()) != 0);
        else
          CHECK(s.diagonal[i + 1] == 0);
      }
      if (rows == cols) {
        Integer prod = 1;
        for (const auto& v : s.diagonal) prod *= v;
        CHECK(prod == abs(determinant(a)));
      }
    }
  }

  TEST_CASE("left kernel") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const IntMatrix a = random_matrix(rng, 5, 3, 6);
      const IntMatrix k = left_kernel(a);
      CHECK(k.rows() == 5 - rank(to_rational(a)));
      const IntMatrix zero = k * a;
      for (std::size_t r = 0; r < zero.rows(); ++r)
        for (std::size_t c = 0; c < zero.cols(); ++c) CHECK(zero(r, c) == 0);
    }
    // saturation: {v : 2 v_0 + 4 v_1 = 0} is spanned by (2, -1)
    IntMatrix a(2, 1);
    a(0, 0) = 2;
    a(1, 0) = 4;
    const IntMatrix k = left_kernel(a);
    REQUIRE(k.rows() == 1);
    CHECK(abs(k(0, 0)) == 2);
    CHECK(abs(k(0, 1)) == 1);
  }

  TEST_CASE("inverse and determinant") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
      const RatMatrix a = to_rational(random_matrix(rng, 4, 4, 7));
      const auto inv = inverse(a);
      if (determinant(a) == 0) {
        CHECK_FALSE(inv.has_value());
        continue;
      }
      REQUIRE(inv.has_value());
      CHECK(a * *inv == RatMatrix::identity(4));
      CHECK(determinant(a) * determinant(*inv) == 1);
    }
  }
}
