#include <memory>

#include "markovwz/markov.hpp"

namespace markovwz::markov {

namespace {

std::string at_point(index_t x, index_t z) {
  return "(x,z) = (" + std::to_string(x) + "," + std::to_string(z) + ")";
}

}  // namespace

Rational certificate_residual(const Certificate& cert, index_t x, index_t z) {
  try {
    const Rational lhs = cert.P(x) * cert.F(x, z) + cert.Q(x) * cert.F(x + 1, z);
    const Rational rhs = cert.R(x, z + 1) * cert.F(x, z + 1) - cert.R(x, z) * cert.F(x, z);
    return lhs - rhs;
  } catch (const DivisionByZero&) {
    throw EvaluationError("certificate undefined at " + at_point(x, z) + ": division by zero");
  } catch (const EvaluationError& e) {
    throw EvaluationError("certificate undefined at " + at_point(x, z) + ": " + e.what());
  }
}

std::vector<Rational> certificate_multipliers(const Certificate& cert, index_t x_cap) {
  std::vector<Rational> A;
  A.reserve(x_cap + 2);
  A.emplace_back(1);
  for (index_t x = 0; x <= x_cap; ++x) {
    const Rational p = cert.P(x);
    if (p.is_zero()) throw EvaluationError("certificate singular at x = " + std::to_string(x));
    A.push_back(-A.back() * cert.Q(x) / p);
  }
  return A;
}

MarkovPair pair_from_certificate(const Certificate& cert, index_t x_cap) {
  auto A = std::make_shared<const std::vector<Rational>>(certificate_multipliers(cert, x_cap));
  auto lookup = [A, x_cap](index_t x) -> const Rational& {
    if (x >= A->size()) {
      throw DomainError("x = " + std::to_string(x) + " exceeds certificate cap " + std::to_string(x_cap + 1));
    }
    return (*A)[x];
  };
  GridFunction U{[F = cert.F, lookup](index_t x, index_t z) { return lookup(x) * F(x, z); },
                 "U[" + cert.label + "]"};
  GridFunction V{[F = cert.F, P = cert.P, R = cert.R, lookup](index_t x, index_t z) {
                   const Rational p = P(x);
                   if (p.is_zero()) throw EvaluationError("certificate singular at x = " + std::to_string(x));
                   return -lookup(x) * R(x, z) / p * F(x, z);
                 },
                 "V[" + cert.label + "]"};
  return {std::move(U), std::move(V), "certificate:" + cert.label};
}

CertificateVerdict verify_certificate(const CertificateFamily& family, std::span<const Rational> params,
                                      index_t x_max, index_t z_max, std::size_t random_points,
                                      std::uint64_t seed) {
  CertificateVerdict verdict;
  auto record = [&verdict](std::span<const Rational> ps, index_t x, index_t z, const Rational& r) {
    ++verdict.points_checked;
    if (!r.is_zero() && verdict.passed) {
      verdict.passed = false;
      verdict.first_failure = CertificateFailure{{ps.begin(), ps.end()}, x, z, r};
    }
  };

  const Certificate base = family.instantiate(params);
  for (index_t x = 0; x <= x_max && verdict.passed; ++x) {
    for (index_t z = 0; z <= z_max && verdict.passed; ++z) {
      record(params, x, z, certificate_residual(base, x, z));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<index_t> xs(0, x_max);
  std::uniform_int_distribution<index_t> zs(0, z_max);
  for (std::size_t k = 0; k < random_points && verdict.passed; ++k) {
    // resample tuples whose evaluation hits a vanishing factor
    for (int attempt = 0;; ++attempt) {
      const std::vector<Rational> ps = family.sample(rng);
      const index_t x = xs(rng);
      const index_t z = zs(rng);
      try {
        const Certificate c = family.instantiate(ps);
        const Rational r0 = certificate_residual(c, 0, 0);
        const Rational r = certificate_residual(c, x, z);
        record(ps, 0, 0, r0);
        record(ps, x, z, r);
        break;
      } catch (const EvaluationError&) {
      } catch (const DomainError&) {
      }
      if (attempt > 1000) throw EvaluationError("no admissible random parameter tuple found");
    }
  }
  return verdict;
}

}  // namespace markovwz::markov
