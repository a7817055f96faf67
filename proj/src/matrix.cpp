#include "qmi/matrix.hpp"

#include "qmi/error.hpp"

namespace qmi {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on column `col` over rows [row, rows).
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = row; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool done = true;
      for (std::size_t r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Integer q = floor_div(h(r, col), h(row, col));
        h.add_row(r, row, Integer(-q));
        u.add_row(r, row, Integer(-q));
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_div(h(r, col), h(row, col));
      if (q != 0) {
        h.add_row(r, row, Integer(-q));
        u.add_row(r, row, Integer(-q));
      }
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

SmithResult smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t br = m.rows(), bc = m.cols();
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
          if (m(r, c) == 0) continue;
          if (br == m.rows() || abs(m(r, c)) < abs(m(br, bc))) {
            br = r;
            bc = c;
          }
        }
      if (br == m.rows()) break;
      m.swap_rows(t, br);
      left.swap_rows(t, br);
      m.swap_cols(t, bc);
      right.swap_cols(t, bc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        Integer q = floor_div(m(r, t), m(t, t));
        m.add_row(r, t, Integer(-q));
        left.add_row(r, t, Integer(-q));
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        Integer q = floor_div(m(t, c), m(t, t));
        m.add_col(c, t, Integer(-q));
        right.add_col(c, t, Integer(-q));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility condition on the trailing block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < m.rows() && divisible; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t()) == 0) {
            m.add_row(t, r, Integer(1));
            left.add_row(t, r, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      left.negate_row(t);
    }
  }
  SmithResult res;
  res.diagonal.reserve(n);
  for (std::size_t t = 0; t < n; ++t) res.diagonal.push_back(m(t, t));
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HermiteResult h = hermite_normal_form(a);
  IntMatrix k(a.rows() - h.rank, a.rows());
  for (std::size_t r = h.rank; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) k(r - h.rank, c) = h.transform(r, c);
  if (k.rows() == 0) return k;
  HermiteResult kh = hermite_normal_form(k);
  IntMatrix out(kh.rank, a.rows());
  for (std::size_t r = 0; r < kh.rank; ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) out(r, c) = kh.h(r, c);
  return out;
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error("InvalidArgument", "determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      m.add_row(r, c, Rational(-f));
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("InvalidArgument", "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) /= piv;
      inv(c, k) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      m.add_row(r, c, Rational(-f));
      inv.add_row(r, c, Rational(-f));
    }
  }
  return inv;
}

std::size_t rank(RatMatrix m) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(row, c);
      m.add_row(r, row, Rational(-f));
    }
    ++row;
  }
  return row;
}

Integer common_denominator(const RatMatrix& m) {
  Integer d = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d = lcm(d, m(r, c).get_den());
  return d;
}

IntMatrix scale_to_integer(const RatMatrix& m, const Integer& d) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * d;
      if (v.get_den() != 1) throw Error("InvalidArgument", "scaling does not clear denominators");
      out(r, c) = v.get_num();
    }
  return out;
}

}  // namespace qmi
