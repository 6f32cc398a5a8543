#pragma once

// Exact rational arithmetic over GMP integers.
//
// Every Rational is kept in canonical form: positive denominator and
// gcd(|num|, den) = 1. Zero is 0/1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace markovwz {

using BigInt = mpz_class;

/// Thrown on any division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Thrown when a textual rational or decimal cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);           // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// n/d reduced to lowest terms. Throws DivisionByZero when d == 0.
  Rational(const BigInt& n, const BigInt& d);

  /// Accepts "n", "-n", "n/d" in base 10. Decimal points are rejected.
  static Rational parse(std::string_view text);

  /// Accepts a terminating decimal such as "-1.2500".
  static Rational parse_decimal(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(long exponent) const;

  /// Largest integer <= value.
  BigInt floor() const;

  /// "n" for integers, otherwise "n/d".
  std::string str() const;

  /// Bits of numerator plus bits of denominator; a size proxy.
  std::size_t bit_size() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

/// Canonical n/d. Throws DivisionByZero when d == 0.
Rational normalize(const BigInt& n, const BigInt& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Number of binary digits of |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

/// 10^k as a BigInt.
BigInt pow10(std::size_t k);

}  // namespace markovwz
