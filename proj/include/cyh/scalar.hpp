#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cyh {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Canonical text form is "p/q", or "p" when q = 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT
  Scalar(const Integer& n) : value_(n) {}                    // NOLINT
  Scalar(const Integer& num, const Integer& den);
  explicit Scalar(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Scalar parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  mpq_class value_{0};
};

Scalar abs(const Scalar& s);
Scalar pow(const Scalar& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(std::int64_t n, unsigned k);

}  // namespace cyh
