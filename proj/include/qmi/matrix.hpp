#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmi/arith.hpp"

namespace qmi {

// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
  Matrix<T> z(x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(r, k) == 0) continue;
      for (std::size_t c = 0; c < y.cols(); ++c) z(r, c) += x(r, k) * y(k, c);
    }
  return z;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// Row-style Hermite normal form: transform * a = h where transform is
// unimodular, the first `rank` rows of h are upper echelon with positive
// pivots and entries above each pivot reduced into [0, pivot), and the
// remaining rows are zero.
struct HermiteResult {
  IntMatrix h;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
HermiteResult hermite_normal_form(const IntMatrix& a);

// left * a * right = diag(d_0, d_1, ...), d_i >= 0, d_i | d_{i+1}, with
// left/right unimodular. diagonal has min(rows, cols) entries.
struct SmithResult {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};
SmithResult smith_normal_form(const IntMatrix& a);

// Rows spanning {v in Z^rows : v * a = 0}, in Hermite normal form.
IntMatrix left_kernel(const IntMatrix& a);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::size_t rank(RatMatrix m);

// Smallest positive integer d with d*m integral, and d*m itself.
Integer common_denominator(const RatMatrix& m);
IntMatrix scale_to_integer(const RatMatrix& m, const Integer& d);

}  // namespace qmi
