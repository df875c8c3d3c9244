#include "cyh/int_matrix.hpp"

#include <utility>

#include "cyh/errors.hpp"

namespace cyh {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* who) {
  if (rows != cols)
    throw DimensionError(std::string(who) + ": matrix is " +
                         std::to_string(rows) + "x" + std::to_string(cols) +
                         ", need square");
}

Integer cofactor_rec(const IntMatrix& m, std::vector<std::size_t>& cols,
                     std::size_t row) {
  if (cols.empty()) return Integer(1);
  Integer sum(0);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (m(row, c) == 0) continue;
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    Integer minor = cofactor_rec(m, rest, row + 1);
    if (idx % 2 == 0)
      sum += m(row, c) * minor;
    else
      sum -= m(row, c) * minor;
  }
  return sum;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("IntMatrix product: shape");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Integer s(0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
  return r;
}

Integer int_det(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "int_det");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer int_det_cofactor(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "int_det_cofactor");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

std::optional<RatMatrix> rational_inverse(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "rational_inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar rational_det(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "rational_det");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Scalar> multiply(const RatMatrix& m, const std::vector<Scalar>& v) {
  if (m.cols() != v.size()) throw DimensionError("multiply: shape");
  std::vector<Scalar> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

IntMatrix integer_kernel_basis(const IntMatrix& a_in) {
  IntMatrix a = a_in;
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(n);

  auto combine = [&](IntMatrix& m, std::size_t p, std::size_t j,
                     const Integer& s, const Integer& t, const Integer& x,
                     const Integer& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Integer cp = m(r, p);
      Integer cj = m(r, j);
      m(r, p) = s * cp + t * cj;
      m(r, j) = x * cp + y * cj;
    }
  };

  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < a.rows() && pivot_col < n; ++row) {
    for (std::size_t j = pivot_col + 1; j < n; ++j) {
      if (a(row, j) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 a(row, pivot_col).get_mpz_t(), a(row, j).get_mpz_t());
      Integer x = -a(row, j) / g;
      Integer y = a(row, pivot_col) / g;
      combine(a, pivot_col, j, s, t, x, y);
      combine(u, pivot_col, j, s, t, x, y);
    }
    if (a(row, pivot_col) != 0) ++pivot_col;
  }

  IntMatrix basis(n, n - pivot_col);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = pivot_col; c < n; ++c) basis(r, c - pivot_col) = u(r, c);
  return basis;
}

}  // namespace cyh
