#include <cmath>

#include "markovwz/markov.hpp"

namespace markovwz::markov {

namespace {

bool nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

Rational idx(index_t n) { return Rational(static_cast<unsigned long>(n)); }

// Natural log of |x| from the leading bits; diagnostics only.
double log_abs(const Rational& x) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.raw().get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.raw().get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

double to_double(const Rational& x) { return x.raw().get_d(); }

}  // namespace

SchellbachParams::SchellbachParams(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  t_ = c_ + d_ - a_ - b_ - 1;
  if (t_.sign() <= 0) throw DomainError("Schellbach requires t = c + d - a - b - 1 > 0, got " + t_.str());
  if (nonpositive_integer(c_) || nonpositive_integer(d_)) {
    throw DomainError("Schellbach requires c and d not to be nonpositive integers");
  }
  for (const Rational& diff : {c_ - a_, c_ - b_, d_ - a_, d_ - b_}) {
    if (nonpositive_integer(diff)) {
      throw DomainError("Schellbach requires c-a, c-b, d-a, d-b not to be nonpositive integers");
    }
  }
}

Rational schellbach_polynomial(const SchellbachParams& p, index_t x) {
  const Rational two_x = idx(2 * x);
  const Rational s = p.c() + p.d() - 1 + two_x;
  return (s - p.a()) * (s - p.b()) - (p.c() - 1 + idx(x)) * (p.d() - 1 + idx(x));
}

Rational schellbach_term(const SchellbachParams& p, index_t x) {
  using hg::rising_factorial;
  const Rational num = rising_factorial(p.c() - p.a(), x) * rising_factorial(p.c() - p.b(), x) *
                       rising_factorial(p.d() - p.a(), x) * rising_factorial(p.d() - p.b(), x) *
                       schellbach_polynomial(p, x);
  const Rational den =
      rising_factorial(p.c(), x) * rising_factorial(p.d(), x) * rising_factorial(p.t(), 2 * x + 2);
  if (den.is_zero()) throw EvaluationError("Schellbach denominator vanishes at x = " + std::to_string(x));
  return num / den;
}

Rational schellbach_ratio(const SchellbachParams& p, index_t x) {
  const Rational n = idx(x);
  const Rational px = schellbach_polynomial(p, x);
  if (px.is_zero()) throw EvaluationError("Schellbach ratio undefined at x = " + std::to_string(x));
  const Rational two_x = idx(2 * x);
  return (p.c() - p.a() + n) * (p.c() - p.b() + n) * (p.d() - p.a() + n) * (p.d() - p.b() + n) *
         schellbach_polynomial(p, x + 1) /
         (px * (p.c() + n) * (p.d() + n) * (p.t() + two_x + 2) * (p.t() + two_x + 3));
}

hg::TermSequence schellbach_sequence(const SchellbachParams& p) {
  return {[p](index_t x) { return schellbach_term(p, x); }, [p](index_t x) { return schellbach_ratio(p, x); },
          0};
}

hg::HGSpec schellbach_direct_spec(const SchellbachParams& p) {
  return hg::HGSpec{{p.a(), p.b(), 1}, {p.c(), p.d()}, 1};
}

double schellbach_asymptotics(const SchellbachParams& p, index_t x) {
  if (x < 2) throw DomainError("asymptotic diagnostic requires x >= 2");
  const Rational term = schellbach_term(p, x);
  if (term.is_zero()) return 0.0;
  const double exponent = to_double(p.a() + p.b()) - 0.5;
  const double log_ratio = log_abs(term) + static_cast<double>(x) * std::log(4.0) +
                           exponent * std::log(static_cast<double>(x));
  return (term.sign() < 0 ? -1.0 : 1.0) * std::exp(log_ratio);
}

}  // namespace markovwz::markov
