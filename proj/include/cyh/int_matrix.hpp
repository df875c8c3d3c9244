#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyh/scalar.hpp"

namespace cyh {

/// Dense row-major matrix over a ring of exact numbers.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Scalar>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws
/// DimensionError for a non-square matrix.
Integer int_det(const IntMatrix& m);

/// Cofactor expansion; kept as an independent route for small matrices.
Integer int_det_cofactor(const IntMatrix& m);

/// Inverse over Q, or nullopt when singular.
std::optional<RatMatrix> rational_inverse(const RatMatrix& m);

Scalar rational_det(const RatMatrix& m);

std::vector<Scalar> multiply(const RatMatrix& m, const std::vector<Scalar>& v);

/// Integer basis of {x in Z^cols : A x = 0}, returned as the columns of the
/// result (cols x (cols - rank)). Uses unimodular column operations, so the
/// basis generates the whole kernel lattice, not just a finite-index
/// sublattice.
IntMatrix integer_kernel_basis(const IntMatrix& a);

}  // namespace cyh
