#include "markovwz/decimal.hpp"

#include <algorithm>

namespace markovwz {

std::string to_string(Rounding r) {
  return r == Rounding::truncate ? "truncate" : "half-even";
}

Rounding parse_rounding(std::string_view text) {
  if (text == "truncate") return Rounding::truncate;
  if (text == "half-even" || text == "round") return Rounding::half_even;
  throw ParseError("unknown rounding mode '" + std::string(text) + "'");
}

Enclosure::Enclosure(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (upper_ < lower_) {
    throw std::invalid_argument("enclosure lower bound exceeds upper bound");
  }
}

Enclosure Enclosure::around(const Rational& center, const Rational& radius) {
  if (radius.sign() < 0) throw std::invalid_argument("negative enclosure radius");
  return {center - radius, center + radius};
}

BigInt scaled_integer(const Rational& x, std::size_t k, Rounding rounding) {
  const BigInt n = x.num() * pow10(k);
  const BigInt d = x.den();
  BigInt q;
  BigInt r;
  if (rounding == Rounding::truncate) {
    mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  // 0 <= r < d; compare the remainder against one half
  const int c = cmp(BigInt(2 * r), d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) q += 1;
  return q;
}

std::size_t certifiable_digits(const Rational& width, std::size_t cap) {
  if (width.sign() <= 0) return cap;
  if (width >= Rational(1)) return 0;
  // width = n/d < 1; find the largest k with n * 10^k < d
  const BigInt n = width.num();
  const BigInt d = width.den();
  std::size_t k = 0;
  BigInt scaled = n;
  while (k < cap) {
    scaled *= 10;
    if (scaled >= d) break;
    ++k;
  }
  return k;
}

std::string DecimalRendering::str() const {
  std::string out = negative ? "-" : "";
  out += integer_part;
  if (!fraction_digits.empty()) {
    out += '.';
    out += fraction_digits;
  }
  return out;
}

namespace {

DecimalRendering render(const BigInt& scaled, std::size_t k, bool negative_hint) {
  DecimalRendering r;
  BigInt mag = ::abs(scaled);
  r.negative = scaled < 0 || (scaled == 0 && negative_hint);
  std::string digits = mag.get_str(10);
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  r.integer_part = digits.substr(0, digits.size() - k);
  r.fraction_digits = digits.substr(digits.size() - k);
  return r;
}

}  // namespace

DecimalRendering to_decimal(const Enclosure& x, std::size_t requested_digits, Rounding rounding) {
  if (requested_digits < 1) throw std::invalid_argument("requested_digits must be >= 1");
  const Rational& lo = x.lower();
  const Rational& hi = x.upper();
  // no level beyond this can agree, so the scan is bounded by the width
  const std::size_t limit = std::min(requested_digits, certifiable_digits(x.width(), requested_digits));

  BigInt agreed;
  bool any = false;
  std::size_t proven = 0;
  for (std::size_t k = 0; k <= limit; ++k) {
    const BigInt a = scaled_integer(lo, k, rounding);
    const BigInt b = scaled_integer(hi, k, rounding);
    if (a != b) break;
    agreed = a;
    any = true;
    proven = k;
  }

  DecimalRendering r;
  if (any) {
    r = render(agreed, proven, hi.sign() < 0);
    r.integer_certified = true;
  } else {
    r = render(scaled_integer(x.midpoint(), 0, rounding), 0, x.midpoint().sign() < 0);
    r.integer_certified = false;
    proven = 0;
  }
  r.digits_proven = proven;
  r.rounding = rounding;
  r.width = x.width();
  return r;
}

}  // namespace markovwz
