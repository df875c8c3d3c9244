#include "cyh/scalar.hpp"

#include <stdexcept>

namespace cyh {

Scalar::Scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw std::invalid_argument("Scalar::parse: bare sign");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Scalar::parse: bad digit in '" +
                                    std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Scalar::parse: zero denominator");
  return Scalar(parse_int(text.substr(0, slash)), den);
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Generalized binomial: n may be negative, so C(k-1, m) is defined for k = 0.
Integer binomial(std::int64_t n, unsigned k) {
  Integer num(1);
  for (unsigned i = 0; i < k; ++i) num *= Integer(static_cast<long>(n - i));
  return num / factorial(k);
}

}  // namespace cyh
