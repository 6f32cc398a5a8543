#pragma once

// Hypergeometric and basic hypergeometric term algebra.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "markovwz/rational.hpp"

namespace markovwz {

using index_t = std::size_t;

/// A quantity could not be evaluated because some factor vanished.
/// The message names the factor and the location.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or arguments for an otherwise well-defined operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace hg {

/// (a)_n = a (a+1) ... (a+n-1); 1 for n = 0.
Rational rising_factorial(const Rational& a, index_t n);

/// (a;q)_n = (1-a)(1-qa)...(1-q^(n-1) a); 1 for n = 0.
Rational q_pochhammer(const Rational& a, const Rational& q, index_t n);

/// rFs(upper; lower; z). The term carries the implicit n! of the lower list.
struct HGSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z = 1;
};

/// r phi s(upper; lower; q, z) with |q| < 1.
///
/// The implicit lower "1" is the q-factorial (q;q)_n, so Markov's series
/// 3phi2(a, b, 1; c, d) is written with upper = {a, b, q}. A literal upper
/// parameter equal to 1 makes every term past n = 0 vanish.
struct BHGSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational q;
  Rational z = 1;
};

/// Throws DomainError when a lower parameter is zero or a negative integer.
void validate(const HGSpec& spec);
/// Throws DomainError unless 0 < |q| < 1.
void validate(const BHGSpec& spec);

/// (a_1..a_r)_n / (b_1..b_s, 1)_n * z^n.
Rational hg_term(const HGSpec& spec, index_t n);

/// (a;q)_n / ((b;q)_n (q;q)_n) * z^n * ((-1)^n q^(n(n-1)/2))^(1+s-r).
Rational bhg_term(const BHGSpec& spec, index_t n);

/// Terms t(n) for n >= first together with the closed-form ratio
/// t(n+1)/t(n). prefix() walks the sequence as a running product.
class TermSequence {
 public:
  using Eval = std::function<Rational(index_t)>;

  TermSequence() = default;
  TermSequence(Eval term, Eval ratio, index_t first)
      : term_(std::move(term)), ratio_(std::move(ratio)), first_(first) {}

  Rational term(index_t n) const;
  /// t(n+1)/t(n). Throws EvaluationError when t(n) = 0.
  Rational ratio(index_t n) const;
  index_t first() const { return first_; }
  bool has_ratio() const { return static_cast<bool>(ratio_); }

  /// Terms first .. first+count-1.
  std::vector<Rational> prefix(index_t count) const;
  /// Terms from .. from+count-1, from >= first.
  std::vector<Rational> range(index_t from, index_t count) const;

 private:
  Eval term_;
  Eval ratio_;
  index_t first_ = 0;
};

TermSequence term_sequence(const HGSpec& spec);
TermSequence term_sequence(const BHGSpec& spec);

/// (q^a;q)_n / (q^b;q)_n at each q of the sequence, for integer a and b.
/// Approaches (a)_n/(b)_n as q -> 1.
std::vector<Rational> q_limit_check(const Rational& a, const Rational& b, index_t n,
                                    std::span<const Rational> q_sequence);

/// {"upper": ["n/d", ...], "lower": [...], "z": "n/d"} and, for BHG, "q".
std::string to_json(const HGSpec& spec);
std::string to_json(const BHGSpec& spec);
HGSpec hg_spec_from_json(const std::string& text);
BHGSpec bhg_spec_from_json(const std::string& text);

}  // namespace hg
}  // namespace markovwz
