#include "cyh/operators.hpp"

#include <stdexcept>

#include "cyh/errors.hpp"

namespace cyh {

std::string to_string(SeriesName name) {
  switch (name) {
    case SeriesName::td: return "Td";
    case SeriesName::ahat: return "Ahat";
    case SeriesName::inv_ahat: return "invAhat";
  }
  return "?";
}

std::vector<Scalar> bernoulli_numbers(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_numbers: negative order");
  std::vector<Scalar> b(static_cast<std::size_t>(n) + 1);
  b[0] = Scalar(1);
  for (int k = 1; k <= n; ++k) {
    Scalar s(0);
    for (int j = 0; j < k; ++j)
      s += Scalar(binomial(k + 1, static_cast<unsigned>(j))) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(k)] = -s / Scalar(k + 1);
  }
  return b;
}

std::vector<Scalar> multiply_series(std::span<const Scalar> a,
                                    std::span<const Scalar> b, int order) {
  std::vector<Scalar> r(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size() && i < r.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Scalar> invert_series(std::span<const Scalar> a, int order) {
  if (a.empty() || a[0].is_zero())
    throw std::domain_error("invert_series: constant term is zero");
  std::vector<Scalar> r(static_cast<std::size_t>(order) + 1);
  r[0] = Scalar(1) / a[0];
  for (std::size_t n = 1; n < r.size(); ++n) {
    Scalar s(0);
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) s += a[j] * r[n - j];
    r[n] = -s / a[0];
  }
  return r;
}

std::vector<Scalar> todd_denominator_series(int order) {
  std::vector<Scalar> r;
  for (int n = 0; n <= order; ++n) {
    Scalar c(Integer(1), factorial(static_cast<unsigned>(n + 1)));
    r.push_back(n % 2 == 0 ? c : -c);
  }
  return r;
}

SeriesSpec series_coefficients(SeriesName name, int order) {
  if (order < 0) throw std::invalid_argument("series_coefficients: negative order");
  SeriesSpec s{name, {}};
  switch (name) {
    case SeriesName::td: {
      const auto b = bernoulli_numbers(order);
      for (int j = 0; j <= order; ++j) {
        Scalar c = b[static_cast<std::size_t>(j)] /
                   Scalar(factorial(static_cast<unsigned>(j)));
        s.coefficients.push_back(j % 2 == 0 ? c : -c);
      }
      break;
    }
    case SeriesName::inv_ahat: {
      for (int j = 0; j <= order; ++j) {
        if (j % 2 == 1) {
          s.coefficients.emplace_back(0);
          continue;
        }
        Integer den = factorial(static_cast<unsigned>(j + 1));
        den <<= static_cast<unsigned>(j);  // 2^(2i) with j = 2i
        s.coefficients.emplace_back(Integer(1), den);
      }
      break;
    }
    case SeriesName::ahat: {
      const auto inv = series_coefficients(SeriesName::inv_ahat, order).coefficients;
      s.coefficients = invert_series(inv, order);
      break;
    }
  }
  return s;
}

bool todd_routes_agree(int order) {
  const auto recurrence = series_coefficients(SeriesName::td, order).coefficients;
  const auto inverted = invert_series(todd_denominator_series(order), order);
  return recurrence == inverted;
}

namespace {

// sum_j c_j D^j p for a derivation D, exact for j up to deg p.
template <typename Derivation>
MultiPoly apply_series(const SeriesSpec& series, const MultiPoly& p, int degree,
                       Derivation&& derive) {
  MultiPoly result(p.num_vars());
  MultiPoly power = p;
  for (int j = 0; j <= degree && !power.is_zero(); ++j) {
    const Scalar& c = series.coefficients[static_cast<std::size_t>(j)];
    if (!c.is_zero()) result += c * power;
    power = derive(power);
  }
  return result;
}

void require_order(const SeriesSpec& s, int needed) {
  if (s.order() < needed)
    throw TruncationError(to_string(s.name) + " series has order " +
                          std::to_string(s.order()) + ", need " +
                          std::to_string(needed));
}

void check_count(const Scalar& value, const char* formula) {
  if (!value.is_integer() || value.sign() < 0)
    throw FormulaViolationError(std::string(formula) + " produced " +
                                value.to_string() +
                                ", not a nonnegative integer");
}

}  // namespace

MultiPoly apply_operator_product(const OperatorProduct& op, const MultiPoly& p) {
  if (p.is_zero()) return p;
  const int degree = p.total_degree();
  if (op.truncation_order < degree)
    throw TruncationError("truncation order " + std::to_string(op.truncation_order) +
                          " below polynomial degree " + std::to_string(degree));
  if (op.per_variable.size() > p.num_vars())
    throw DimensionError("operator acts on more variables than the polynomial has");

  MultiPoly result = p;
  for (std::size_t i = 0; i < op.per_variable.size(); ++i) {
    if (!op.per_variable[i]) continue;
    require_order(*op.per_variable[i], degree);
    result = apply_series(*op.per_variable[i], result, degree,
                          [i](const MultiPoly& q) { return differentiate(q, i); });
  }
  if (op.sum_factor) {
    require_order(*op.sum_factor, degree);
    result = apply_series(*op.sum_factor, result, degree, [](const MultiPoly& q) {
      MultiPoly sum(q.num_vars());
      for (std::size_t i = 0; i < q.num_vars(); ++i) sum += differentiate(q, i);
      return sum;
    });
  }
  return result;
}

SeriesTable SeriesTable::standard(int order) {
  return {series_coefficients(SeriesName::td, order),
          series_coefficients(SeriesName::ahat, order),
          series_coefficients(SeriesName::inv_ahat, order)};
}

OperatorProduct todd_operator(std::size_t num_vars, const SeriesTable& table,
                              int order) {
  OperatorProduct op;
  op.per_variable.assign(num_vars, table.td);
  op.truncation_order = order;
  return op;
}

OperatorProduct boundary_operator(std::size_t num_vars, const SeriesTable& table,
                                  int order) {
  OperatorProduct op;
  op.per_variable.assign(num_vars, table.ahat);
  op.sum_factor = table.inv_ahat;
  op.truncation_order = order;
  return op;
}

FormulaResult khovanskii_count(const HalfSpaceSpec& spec, const VolumePolynomial& v) {
  return khovanskii_count(spec, v, SeriesTable::standard(spec.dim()));
}

FormulaResult khovanskii_count(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                               const SeriesTable& table) {
  FormulaResult r;
  r.applied = apply_operator_product(
      todd_operator(spec.num_facets(), table, spec.dim()), v.poly);
  r.value = r.applied.evaluate(spec.anchor());
  check_count(r.value, "Todd-operator count");
  return r;
}

FormulaResult boundary_count_formula(const HalfSpaceSpec& spec,
                                     const VolumePolynomial& v) {
  return boundary_count_formula(spec, v, SeriesTable::standard(spec.dim()));
}

FormulaResult boundary_count_formula(const HalfSpaceSpec& spec,
                                     const VolumePolynomial& v,
                                     const SeriesTable& table) {
  const auto boundary = boundary_volume_polynomial(v);
  FormulaResult r;
  r.applied = apply_operator_product(
      boundary_operator(spec.num_facets(), table, spec.dim() - 1), boundary.poly);
  r.value = r.applied.evaluate(spec.anchor());
  check_count(r.value, "Ahat-operator boundary count");
  return r;
}

EhrhartPoly symbolic_ehrhart(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                             EhrhartKind kind) {
  return symbolic_ehrhart(spec, v, kind, SeriesTable::standard(spec.dim()));
}

EhrhartPoly symbolic_ehrhart(const HalfSpaceSpec& spec, const VolumePolynomial& v,
                             EhrhartKind kind, const SeriesTable& table) {
  MultiPoly applied(spec.num_facets());
  switch (kind) {
    case EhrhartKind::full:
      applied = apply_operator_product(
          todd_operator(spec.num_facets(), table, spec.dim()), v.poly);
      break;
    case EhrhartKind::boundary:
      applied = apply_operator_product(
          boundary_operator(spec.num_facets(), table, spec.dim() - 1),
          boundary_volume_polynomial(v).poly);
      break;
    default:
      throw std::invalid_argument("symbolic_ehrhart: kind must be full or boundary");
  }
  return EhrhartPoly{substitute_dilation(applied, spec.anchor()), kind, 0};
}

}  // namespace cyh
