#include "markovwz/rational.hpp"

#include <cctype>
#include <ostream>

namespace markovwz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ParseError("not a rational in n/d form: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(text), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational::Rational(long long v) {
  // mpq_class has no long long constructor on LP64 builds of every GMP
  value_ = mpq_class(BigInt(std::to_string(v), 10));
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DivisionByZero();
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational normalize(const BigInt& n, const BigInt& d) { return Rational(n, d); }

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, whole));
  const BigInt n = parse_integer(text.substr(0, slash), whole);
  const std::string_view dtext = text.substr(slash + 1);
  if (!all_digits(dtext)) {
    throw ParseError("not a rational in n/d form: '" + std::string(whole) + "'");
  }
  return Rational(n, BigInt(std::string(dtext), 10));
}

Rational Rational::parse_decimal(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view ipart = text.substr(0, dot);
  const std::string_view fpart = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(ipart) || (dot != std::string_view::npos && !fpart.empty() && !all_digits(fpart))) {
    throw ParseError("not a terminating decimal: '" + std::string(whole) + "'");
  }
  BigInt digits(std::string(ipart) + std::string(fpart), 10);
  if (negative) digits = -digits;
  return Rational(digits, pow10(fpart.size()));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r;
  r.get_num() = n;
  r.get_den() = d;
  // powers of coprime integers stay coprime
  return Rational(std::move(r));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::size_t Rational::bit_size() const {
  return bit_length(value_.get_num()) + bit_length(value_.get_den());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt pow10(std::size_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

}  // namespace markovwz
