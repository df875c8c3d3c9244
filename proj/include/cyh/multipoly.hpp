#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyh/scalar.hpp"

namespace cyh {

using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

// Graded lexicographic, largest first: higher total degree wins, ties broken
// by the lexicographically larger exponent vector.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in graded-lex order (largest first) and no zero coefficient is ever
/// stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GradedLexGreater>;

  explicit MultiPoly(std::size_t num_vars);

  static MultiPoly constant(std::size_t num_vars, const Scalar& c);
  /// The coordinate function x_var (0-based).
  static MultiPoly variable(std::size_t num_vars, std::size_t var);
  static MultiPoly monomial(Exponent exponent, const Scalar& c);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous(int degree) const;

  Scalar coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Graded-lex term list, e.g. "(1/2)l1^2 + l1*l2 - 3". Variables default to
  /// l1..ld; pass names to override (univariate polynomials use {"k"}).
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Scalar(-1); }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t num_vars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// d/d x_var of p (0-based var). Throws std::out_of_range for a bad index.
MultiPoly differentiate(const MultiPoly& p, std::size_t var);

/// Substitutes x_i <- k * anchor_i and collects the result as a univariate
/// polynomial in k. Throws DimensionError on a length mismatch.
MultiPoly substitute_dilation(const MultiPoly& p, std::span<const Scalar> anchor);

/// Univariate rendering with variable k.
std::string to_k_string(const MultiPoly& univariate);

/// Checks 1 - prod x_i == sum_{l=1..n} (-1)^(l+1) sum_{|I|=l} prod_{i in I}(1 - x_i)
/// by full expansion in Q[x_1..x_n]. Valid for 1 <= n <= 12, else
/// std::out_of_range.
bool euler_expansion_identity(int n);

/// Coefficient of y_1*...*y_l in the expansion of 1 - prod_i (1 - y_i), for
/// l = 1..n. These are the signs attached to the l-fold intersections.
std::vector<Scalar> euler_class_coefficients(int n);

}  // namespace cyh
