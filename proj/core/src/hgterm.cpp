#include "markovwz/hgterm.hpp"

namespace markovwz::hg {

namespace {

bool is_nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

// Index k < n at which a + k vanishes, if any.
std::optional<index_t> rising_zero(const Rational& a, index_t n) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  const BigInt k = -a.num();
  if (k < BigInt(static_cast<unsigned long>(n))) return static_cast<index_t>(k.get_ui());
  return std::nullopt;
}

Rational signed_q_power_factor(const Rational& q, index_t n, long exponent) {
  // ((-1)^n q^(n(n-1)/2))^exponent
  if (exponent == 0) return 1;
  Rational base = q.pow(static_cast<long>(n * (n - (n > 0 ? 1 : 0)) / 2));
  if (n % 2 == 1) base = -base;
  return base.pow(exponent);
}

}  // namespace

Rational rising_factorial(const Rational& a, index_t n) {
  Rational p = 1;
  Rational f = a;
  for (index_t k = 0; k < n; ++k) {
    p *= f;
    f += 1;
  }
  return p;
}

Rational q_pochhammer(const Rational& a, const Rational& q, index_t n) {
  Rational p = 1;
  Rational qa = a;
  for (index_t k = 0; k < n; ++k) {
    p *= Rational(1) - qa;
    qa *= q;
  }
  return p;
}

void validate(const HGSpec& spec) {
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    if (is_nonpositive_integer(spec.lower[j])) {
      throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " + spec.lower[j].str() +
                        " is zero or a negative integer");
    }
  }
}

void validate(const BHGSpec& spec) {
  if (spec.q.is_zero() || spec.q.abs() >= Rational(1)) {
    throw DomainError("base q = " + spec.q.str() + " must satisfy 0 < |q| < 1");
  }
}

Rational hg_term(const HGSpec& spec, index_t n) {
  Rational num = 1;
  Rational den = rising_factorial(1, n);
  for (const auto& a : spec.upper) num *= rising_factorial(a, n);
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    const Rational p = rising_factorial(spec.lower[j], n);
    if (p.is_zero()) {
      throw EvaluationError("(b" + std::to_string(j + 1) + ")_" + std::to_string(n) + " vanishes for b" +
                            std::to_string(j + 1) + " = " + spec.lower[j].str());
    }
    den *= p;
  }
  return num / den * spec.z.pow(static_cast<long>(n));
}

Rational bhg_term(const BHGSpec& spec, index_t n) {
  Rational num = 1;
  Rational den = q_pochhammer(spec.q, spec.q, n);
  if (den.is_zero()) throw EvaluationError("(q;q)_" + std::to_string(n) + " vanishes");
  for (const auto& a : spec.upper) num *= q_pochhammer(a, spec.q, n);
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    const Rational p = q_pochhammer(spec.lower[j], spec.q, n);
    if (p.is_zero()) {
      throw EvaluationError("(b" + std::to_string(j + 1) + ";q)_" + std::to_string(n) + " vanishes for b" +
                            std::to_string(j + 1) + " = " + spec.lower[j].str());
    }
    den *= p;
  }
  const long exponent = 1 + static_cast<long>(spec.lower.size()) - static_cast<long>(spec.upper.size());
  return num / den * spec.z.pow(static_cast<long>(n)) * signed_q_power_factor(spec.q, n, exponent);
}

Rational TermSequence::term(index_t n) const {
  if (n < first_) throw DomainError("term index " + std::to_string(n) + " below first index");
  return term_(n);
}

Rational TermSequence::ratio(index_t n) const {
  if (!ratio_) {
    const Rational t = term(n);
    if (t.is_zero()) throw EvaluationError("ratio undefined at n = " + std::to_string(n) + ": zero term");
    return term(n + 1) / t;
  }
  return ratio_(n);
}

std::vector<Rational> TermSequence::range(index_t from, index_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  if (count == 0) return out;
  Rational t = term(from);
  out.push_back(t);
  for (index_t k = 1; k < count; ++k) {
    const index_t n = from + k - 1;
    // a zero term has no ratio; restart from the closed form
    t = (t.is_zero() || !ratio_) ? term(n + 1) : t * ratio_(n);
    out.push_back(t);
  }
  return out;
}

std::vector<Rational> TermSequence::prefix(index_t count) const { return range(first_, count); }

TermSequence term_sequence(const HGSpec& spec) {
  validate(spec);
  auto term = [spec](index_t n) { return hg_term(spec, n); };
  auto ratio = [spec](index_t n) {
    for (const auto& a : spec.upper) {
      if (auto k = rising_zero(a, n)) {
        throw EvaluationError("ratio undefined at n = " + std::to_string(n) + ": term vanishes from n = " +
                              std::to_string(*k + 1));
      }
    }
    Rational r = spec.z / Rational(static_cast<unsigned long>(n + 1));
    const Rational nn(static_cast<unsigned long>(n));
    for (const auto& a : spec.upper) r *= a + nn;
    for (const auto& b : spec.lower) r /= b + nn;
    return r;
  };
  return {term, ratio, 0};
}

TermSequence term_sequence(const BHGSpec& spec) {
  validate(spec);
  auto term = [spec](index_t n) { return bhg_term(spec, n); };
  auto ratio = [spec](index_t n) {
    const Rational qn = spec.q.pow(static_cast<long>(n));
    for (const auto& a : spec.upper) {
      if (q_pochhammer(a, spec.q, n).is_zero()) {
        throw EvaluationError("ratio undefined at n = " + std::to_string(n) + ": zero term");
      }
    }
    Rational r = spec.z / (Rational(1) - qn * spec.q);
    for (const auto& a : spec.upper) r *= Rational(1) - a * qn;
    for (const auto& b : spec.lower) {
      const Rational f = Rational(1) - b * qn;
      if (f.is_zero()) throw EvaluationError("lower factor vanishes at n = " + std::to_string(n));
      r /= f;
    }
    const long exponent = 1 + static_cast<long>(spec.lower.size()) - static_cast<long>(spec.upper.size());
    return r * (-qn).pow(exponent);
  };
  return {term, ratio, 0};
}

std::vector<Rational> q_limit_check(const Rational& a, const Rational& b, index_t n,
                                    std::span<const Rational> q_sequence) {
  if (!a.is_integer() || !b.is_integer()) {
    throw DomainError("limit check restricted to integer parameters");
  }
  if (b.sign() <= 0) throw DomainError("b must not be a nonpositive integer");
  const long ea = static_cast<long>(a.num().get_si());
  const long eb = static_cast<long>(b.num().get_si());
  std::vector<Rational> out;
  out.reserve(q_sequence.size());
  for (const auto& q : q_sequence) {
    if (q.sign() <= 0 || q >= Rational(1)) throw DomainError("q values must lie in (0, 1)");
    out.push_back(q_pochhammer(q.pow(ea), q, n) / q_pochhammer(q.pow(eb), q, n));
  }
  return out;
}

}  // namespace markovwz::hg
