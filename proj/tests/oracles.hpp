#pragma once

// Brute-force reference computations used to derive expected values in the
// unit tests. They share only the Rational/QuatElement value types with the
// library and re-derive everything else from definitions.

#include <cstdint>
#include <numeric>
#include <vector>

#include "qmi/quaternion.hpp"

namespace oracle {

using qmi::QuatElement;
using qmi::Rational;

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline long long md(long long x, long long m) { return ((x % m) + m) % m; }

// Hilbert symbol (a, b)_p for nonzero integers via a primitive zero of
// a x^2 + b y^2 = z^2 mod p^k (k = 3 for odd p, 6 for p = 2).
inline int hilbert(long long a, long long b, long long p) {
  const long long m = ipow(p, p == 2 ? 6 : 3);
  // unit_root[r]: some z prime to p with z^2 = r; any_root[r]: some z at all.
  std::vector<char> any_root(static_cast<std::size_t>(m), 0), unit_root(static_cast<std::size_t>(m), 0);
  for (long long z = 0; z < m; ++z) {
    const auto r = static_cast<std::size_t>(z * z % m);
    any_root[r] = 1;
    if (z % p != 0) unit_root[r] = 1;
  }
  for (long long x = 0; x < m; ++x)
    for (long long y = 0; y < m; ++y) {
      const auto r = static_cast<std::size_t>(md(md(a, m) * (x * x % m) + md(b, m) * (y * y % m), m));
      const bool primitive_xy = x % p != 0 || y % p != 0;
      if (primitive_xy ? any_root[r] : unit_root[r]) return 1;
    }
  return -1;
}

// Product from the definition with i^2 = a, j^2 = b, k = ij = -ji, obtained
// by expanding (x0 + x1 i + x2 j + x3 k)(y0 + y1 i + y2 j + y3 k) term by term.
inline QuatElement mul(const QuatElement& x, const QuatElement& y, const Rational& a, const Rational& b) {
  // basis products e_r e_s = coef * e_t
  struct Term {
    int t;
    Rational coef;
  };
  const Rational ab = a * b;
  const Term table[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, a}, {3, 1}, {2, a}},
      {{2, 1}, {3, -1}, {0, b}, {1, -b}},
      {{3, 1}, {2, -a}, {1, b}, {0, -ab}},
  };
  QuatElement z;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) z[table[r][s].t] += x[r] * y[s] * table[r][s].coef;
  return z;
}

// Determinant by cofactor expansion.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline std::vector<std::vector<Rational>> rows_of(const std::vector<QuatElement>& v) {
  std::vector<std::vector<Rational>> m;
  for (const auto& e : v) m.push_back({e[0], e[1], e[2], e[3]});
  return m;
}

// |det Tr(e_r e_s)| with Tr(x) = 2 x0.
inline Rational gram_det(const std::vector<QuatElement>& basis, const Rational& a, const Rational& b) {
  std::vector<std::vector<Rational>> g(4, std::vector<Rational>(4));
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) g[r][s] = 2 * mul(basis[r], basis[s], a, b)[0];
  return abs(det(g));
}

// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// |GL_2(Z/N)| = N^4 prod_{p | N} (1 - 1/p)(1 - 1/p^2).
inline long long gl2_order(long long n) {
  long long num = n * n * n * n, den = 1;
  long long m = n;
  for (long long p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    num *= (p - 1) * (p * p - 1);
    den *= p * p * p;
  }
  return num / den;
}

}  // namespace oracle
