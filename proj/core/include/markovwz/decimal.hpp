#pragma once

// Certified decimal rendering of rational enclosures.

#include <cstddef>
#include <string>

#include "markovwz/rational.hpp"

namespace markovwz {

enum class Rounding { truncate, half_even };

std::string to_string(Rounding r);
Rounding parse_rounding(std::string_view text);

/// Closed interval [lower, upper] of rationals.
class Enclosure {
 public:
  Enclosure() = default;
  /// Throws std::invalid_argument when lower > upper.
  Enclosure(Rational lower, Rational upper);
  static Enclosure point(const Rational& x) { return {x, x}; }
  /// [center - radius, center + radius]; radius must be >= 0.
  static Enclosure around(const Rational& center, const Rational& radius);

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  Rational width() const { return upper_ - lower_; }
  Rational midpoint() const { return (lower_ + upper_) / 2; }
  bool contains(const Rational& x) const { return lower_ <= x && x <= upper_; }
  bool intersects(const Enclosure& other) const {
    return lower_ <= other.upper_ && other.lower_ <= upper_;
  }

 private:
  Rational lower_;
  Rational upper_;
};

struct DecimalRendering {
  bool negative = false;
  std::string integer_part = "0";
  /// Exactly digits_proven digits; only certified digits are rendered.
  std::string fraction_digits;
  std::size_t digits_proven = 0;
  Rounding rounding = Rounding::half_even;
  /// False when even the integer part differs between the endpoints.
  bool integer_certified = false;
  /// upper - lower of the source enclosure.
  Rational width;

  /// "-1.25", "0.333", or "3" when no fraction digit is proven.
  std::string str() const;
};

/// Renders the digits shared by every point of the enclosure.
///
/// Digit level k agrees when rounding (or truncating toward zero) the lower
/// and upper endpoints at k fraction digits gives the same integer. The scan
/// stops at the first level that disagrees, so digits_proven is the largest
/// k <= requested_digits for which every level 0..k agrees. A rendering with
/// digits_proven = k is within 10^-k of every point of the enclosure.
///
/// An enclosure too wide to certify the integer part yields digits_proven = 0,
/// integer_certified = false and the midpoint's integer part.
DecimalRendering to_decimal(const Enclosure& x, std::size_t requested_digits,
                            Rounding rounding = Rounding::half_even);

/// Largest k such that width * 10^k < 1 (capped at `cap`); 0 for width >= 1.
/// An upper bound on the digits any rendering of such an enclosure can prove.
std::size_t certifiable_digits(const Rational& width, std::size_t cap = 100000);

/// Integer nearest to x * 10^k under the given rule (truncate is toward zero).
BigInt scaled_integer(const Rational& x, std::size_t k, Rounding rounding);

}  // namespace markovwz
