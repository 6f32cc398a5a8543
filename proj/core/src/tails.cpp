#include "markovwz/catalog.hpp"

namespace markovwz::catalog {

namespace {

Rational idx(index_t n) { return Rational(static_cast<unsigned long>(n)); }

Rational binomial(index_t n, index_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(index_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace

std::string to_string(DirectTail t) {
  return t == DirectTail::integral ? "integral" : "euler-maclaurin";
}

DirectTail parse_direct_tail(std::string_view text) {
  if (text == "integral") return DirectTail::integral;
  if (text == "euler-maclaurin") return DirectTail::euler_maclaurin;
  throw DomainError("unknown tail policy '" + std::string(text) + "'");
}

std::vector<Rational> bernoulli_numbers(index_t n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (index_t m = 1; m <= n; ++m) {
    Rational s;
    for (index_t j = 0; j < m; ++j) s += binomial(m + 1, j) * B[j];
    B[m] = -s / idx(m + 1);
  }
  return B;
}

Enclosure euler_maclaurin_tail(long s, const Rational& shift, index_t m, index_t order) {
  if (s < 2) throw DomainError("Euler-Maclaurin tail needs exponent s >= 2");
  const Rational base = idx(m) + shift;
  if (base.sign() <= 0) throw DomainError("Euler-Maclaurin tail needs m + shift > 0");
  const std::vector<Rational> B = bernoulli_numbers(2 * order + 2);
  const Rational inv = base.reciprocal();

  // sum_{n>=m} f(n) = int_m^inf f + f(m)/2 - sum_j B_2j/(2j)! f^(2j-1)(m) + R,
  // f^(k)(x) = (-1)^k (s)_k (x+shift)^(-s-k)
  Rational value = inv.pow(s - 1) / Rational(s - 1) + inv.pow(s) / 2;
  auto correction = [&](index_t j) {
    const long k = static_cast<long>(2 * j - 1);
    return B[2 * j] / factorial(2 * j) * hg::rising_factorial(Rational(s), 2 * j - 1) * inv.pow(s + k);
  };
  for (index_t j = 1; j <= order; ++j) value += correction(j);
  const Rational next = correction(order + 1);
  return next.sign() >= 0 ? Enclosure(value, value + next) : Enclosure(value + next, value);
}

}  // namespace markovwz::catalog
