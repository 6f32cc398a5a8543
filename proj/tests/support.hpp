#pragma once

#include <random>
#include <string>
#include <vector>

#include "markovwz/markov.hpp"
#include "markovwz/rational.hpp"

namespace testing {

using markovwz::Rational;

inline Rational R(const char* s) { return Rational::parse(s); }

// zeta(3) and zeta(2) to 60 significant digits, from an independent mpmath run.
inline const char* kZeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
inline const char* kZeta2 = "1.64493406684822643647241516664602518921894990120679843773556";

// Markov's printed 33-decimal value.
inline const char* kZeta3Printed = "1.202056903159594285399738161511450";

// Parameter tuples (a, b, c, d, q) with |cd/(abq)| < 1.
inline std::vector<markovwz::markov::QParams> sample_tuples() {
  return {
      {R("1/3"), R("1/5"), R("1/7"), R("1/11"), R("1/2")},
      {R("1/2"), R("1/3"), R("1/5"), R("1/7"), R("1/3")},
      {R("2"), R("3"), R("1/2"), R("1/3"), R("1/4")},
      {R("-1/2"), R("1/3"), R("1/4"), R("-1/5"), R("2/3")},
      {R("3/2"), R("5/4"), R("1/3"), R("2/7"), R("-1/2")},
  };
}

// n/m with 1 <= n, m <= hi and a random sign.
inline Rational small_rational(std::mt19937_64& rng, long hi = 9, bool allow_negative = true) {
  std::uniform_int_distribution<long> d(1, hi);
  Rational r(markovwz::BigInt(d(rng)), markovwz::BigInt(d(rng)));
  if (allow_negative && (rng() & 1)) r = -r;
  return r;
}

// Random rational with numerator and denominator of up to `bits` bits.
inline Rational wide_rational(std::mt19937_64& rng, unsigned bits) {
  auto draw = [&](bool nonzero) {
    markovwz::BigInt v = 0;
    for (unsigned i = 0; i < bits; i += 64) {
      v <<= 64;
      v += static_cast<unsigned long>(rng());
    }
    v >>= (64 - bits % 64) % 64;
    if (nonzero && v == 0) v = 1;
    return v;
  };
  markovwz::BigInt n = draw(false);
  if (rng() & 1) n = -n;
  return Rational(n, draw(true));
}

// Random admissible 3phi2 tuple.
inline markovwz::markov::QParams random_tuple(std::mt19937_64& rng) {
  for (;;) {
    markovwz::markov::QParams p{small_rational(rng), small_rational(rng), small_rational(rng),
                                small_rational(rng), small_rational(rng)};
    if (p.q.abs() >= 1) continue;
    const Rational t = p.c * p.d / (p.a * p.b * p.q);
    if (t.abs() >= 1) continue;
    try {
      markovwz::markov::Markov3Phi2 m(p);
      // reject tuples with a vanishing factor on the small grid
      for (markovwz::index_t x = 0; x <= 3; ++x) {
        for (markovwz::index_t z = 0; z <= 3; ++z) (void)m.pair().V(x, z);
      }
      return p;
    } catch (const std::exception&) {
    }
  }
}

}  // namespace testing
