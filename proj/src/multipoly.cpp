#include "cyh/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cyh/errors.hpp"

namespace cyh {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Scalar& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::out_of_range("MultiPoly::variable: index");
  Exponent e(num_vars, 0);
  e[var] = 1;
  MultiPoly p(num_vars);
  p.add_term(e, Scalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(Exponent exponent, const Scalar& c) {
  MultiPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(cyh::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("MultiPoly::degree_in: index");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return static_cast<int>(cyh::total_degree(t.first)) == degree;
  });
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != num_vars_)
    throw DimensionError("MultiPoly: exponent length " +
                         std::to_string(e.size()) + " != " +
                         std::to_string(num_vars_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != num_vars_)
    throw DimensionError("MultiPoly::evaluate: point has " +
                         std::to_string(point.size()) + " coordinates, need " +
                         std::to_string(num_vars_));
  Scalar sum(0);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] != 0) term *= pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars_; ++i)
    names.push_back("l" + std::to_string(i + 1));
  return to_string(names);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != num_vars_)
    throw DimensionError("MultiPoly::to_string: wrong number of names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Scalar mag = abs(c);
    std::string coef;
    if (mono.empty())
      coef = mag.to_string();
    else if (mag == Scalar(1))
      coef = "";
    else if (mag.is_integer())
      coef = mag.to_string();
    else
      coef = "(" + mag.to_string() + ")";
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    out += coef + mono;
    first = false;
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_)
    throw DimensionError("MultiPoly: variable counts differ (" +
                         std::to_string(num_vars_) + " vs " +
                         std::to_string(o.num_vars_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly r = MultiPoly::constant(p.num_vars(), Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * p;
  return r;
}

MultiPoly differentiate(const MultiPoly& p, std::size_t var) {
  if (var >= p.num_vars())
    throw std::out_of_range("differentiate: variable index " +
                            std::to_string(var) + " out of range");
  MultiPoly r(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent de = e;
    --de[var];
    r.add_term(de, c * Scalar(static_cast<std::int64_t>(e[var])));
  }
  return r;
}

MultiPoly substitute_dilation(const MultiPoly& p, std::span<const Scalar> anchor) {
  if (anchor.size() != p.num_vars())
    throw DimensionError("substitute_dilation: anchor length " +
                         std::to_string(anchor.size()) + " != " +
                         std::to_string(p.num_vars()));
  MultiPoly r(1);
  for (const auto& [e, c] : p.terms()) {
    Scalar v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) v *= pow(anchor[i], e[i]);
    r.add_term(Exponent{total_degree(e)}, v);
  }
  return r;
}

std::string to_k_string(const MultiPoly& univariate) {
  static const std::string k[] = {"k"};
  return univariate.to_string(k);
}

namespace {

void check_euler_range(int n) {
  if (n < 1 || n > 12)
    throw std::out_of_range("euler expansion: n must be in 1..12, got " +
                            std::to_string(n));
}

}  // namespace

bool euler_expansion_identity(int n) {
  check_euler_range(n);
  const auto vars = static_cast<std::size_t>(n);
  const MultiPoly one = MultiPoly::constant(vars, Scalar(1));

  MultiPoly lhs = one;
  {
    MultiPoly prod = one;
    for (std::size_t i = 0; i < vars; ++i) prod = prod * MultiPoly::variable(vars, i);
    lhs -= prod;
  }

  std::vector<MultiPoly> factors;
  for (std::size_t i = 0; i < vars; ++i)
    factors.push_back(one - MultiPoly::variable(vars, i));

  MultiPoly rhs(vars);
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    MultiPoly prod = one;
    for (std::size_t i = 0; i < vars; ++i)
      if (subset & (1u << i)) prod = prod * factors[i];
    const int size = std::popcount(subset);
    rhs += (size % 2 == 1) ? prod : -prod;
  }
  return lhs == rhs;
}

std::vector<Scalar> euler_class_coefficients(int n) {
  check_euler_range(n);
  const auto vars = static_cast<std::size_t>(n);
  const MultiPoly one = MultiPoly::constant(vars, Scalar(1));
  MultiPoly prod = one;
  for (std::size_t i = 0; i < vars; ++i)
    prod = prod * (one - MultiPoly::variable(vars, i));
  const MultiPoly expansion = one - prod;

  std::vector<Scalar> coeffs;
  for (std::size_t l = 1; l <= vars; ++l) {
    Exponent e(vars, 0);
    std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(l), 1u);
    coeffs.push_back(expansion.coefficient(e));
  }
  return coeffs;
}

}  // namespace cyh
