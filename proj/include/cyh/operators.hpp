#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyh/lattice_oracle.hpp"
#include "cyh/multipoly.hpp"
#include "cyh/polytope.hpp"
#include "cyh/volume.hpp"

namespace cyh {

enum class SeriesName { td, ahat, inv_ahat };

std::string to_string(SeriesName name);

/// Truncated power series; coefficients[j] multiplies x^j.
struct SeriesSpec {
  SeriesName name = SeriesName::td;
  std::vector<Scalar> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Bernoulli numbers B_0..B_n with B_1 = -1/2, from the recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0.
std::vector<Scalar> bernoulli_numbers(int n);

/// Td(x) = x / (1 - e^-x)              coefficient j = (-1)^j B_j / j!
/// Ahat(x) = (x/2) / sinh(x/2)         by series inversion of 1/Ahat
/// 1/Ahat(x) = sinh(x/2) / (x/2)       coefficient 2j = 1 / (2^2j (2j+1)!)
SeriesSpec series_coefficients(SeriesName name, int order);

std::vector<Scalar> multiply_series(std::span<const Scalar> a,
                                    std::span<const Scalar> b, int order);
/// Reciprocal power series; the constant term must be nonzero.
std::vector<Scalar> invert_series(std::span<const Scalar> a, int order);

/// Coefficients of (1 - e^-x) / x = sum (-1)^n x^n / (n+1)!.
std::vector<Scalar> todd_denominator_series(int order);

/// Bernoulli-recurrence Td against the reciprocal of (1 - e^-x)/x.
bool todd_routes_agree(int order);

/// prod_i S_i(d/d lambda_i) followed by an optional T(sum_i d/d lambda_i).
struct OperatorProduct {
  std::vector<std::optional<SeriesSpec>> per_variable;
  std::optional<SeriesSpec> sum_factor;
  int truncation_order = 0;
};

/// Applies the operator exactly; throws TruncationError when the truncation
/// order (or any series) is shorter than the polynomial's degree.
MultiPoly apply_operator_product(const OperatorProduct& op, const MultiPoly& p);

/// The three series at a common order. `standard` computes them; callers may
/// substitute altered tables to confirm the checks notice.
struct SeriesTable {
  SeriesSpec td;
  SeriesSpec ahat;
  SeriesSpec inv_ahat;

  static SeriesTable standard(int order);
};

OperatorProduct todd_operator(std::size_t num_vars, const SeriesTable& table,
                              int order);
OperatorProduct boundary_operator(std::size_t num_vars, const SeriesTable& table,
                                  int order);

struct FormulaResult {
  MultiPoly applied{1};  // operator-applied polynomial before evaluation
  Scalar value;
};

/// prod Td(d_i) vol, evaluated at lambda^0. Throws FormulaViolationError if
/// the value is not a nonnegative integer.
FormulaResult khovanskii_count(const HalfSpaceSpec& spec, const VolumePolynomial& v);
FormulaResult khovanskii_count(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                               const SeriesTable& table);

/// prod Ahat(d_i) (1/Ahat)(sum d_i) vol(boundary), evaluated at lambda^0.
FormulaResult boundary_count_formula(const HalfSpaceSpec& spec,
                                     const VolumePolynomial& v);
FormulaResult boundary_count_formula(const HalfSpaceSpec& spec,
                                     const VolumePolynomial& v,
                                     const SeriesTable& table);

/// Operator-applied polynomial with lambda <- k lambda^0, as a polynomial in
/// k. kind must be full or boundary.
EhrhartPoly symbolic_ehrhart(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                             EhrhartKind kind);
EhrhartPoly symbolic_ehrhart(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                             EhrhartKind kind, const SeriesTable& table);

}  // namespace cyh
