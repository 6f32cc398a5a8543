#include "markovwz/linsolve.hpp"
#include "markovwz/markov.hpp"

namespace markovwz::markov {

namespace {

Rational idx(index_t n) { return Rational(static_cast<unsigned long>(n)); }

std::size_t u_size(MultiplierForm f) {
  switch (f) {
    case MultiplierForm::u1: return 1;
    case MultiplierForm::u2: return 2;
    case MultiplierForm::u3: return 3;
  }
  return 0;
}

std::size_t m_size(MultiplierForm f) { return f == MultiplierForm::u1 ? 2 : 3; }

// z^k for U (every form) and for M in u2/u3.
Rational poly_basis(std::size_t k, index_t z) { return idx(z).pow(static_cast<long>(k)); }

Rational m_basis(MultiplierForm f, const std::optional<Rational>& q, std::size_t k, index_t z) {
  if (f == MultiplierForm::u1) return k == 0 ? Rational(1) : q->pow(static_cast<long>(z));
  return poly_basis(k, z);
}

}  // namespace

std::string to_string(MultiplierForm f) {
  switch (f) {
    case MultiplierForm::u1: return "u1";
    case MultiplierForm::u2: return "u2";
    case MultiplierForm::u3: return "u3";
  }
  return "?";
}

MultiplierForm parse_form(std::string_view text) {
  if (text == "u1") return MultiplierForm::u1;
  if (text == "u2") return MultiplierForm::u2;
  if (text == "u3") return MultiplierForm::u3;
  throw DomainError("unknown multiplier form '" + std::string(text) + "' (expected u1, u2 or u3)");
}

std::size_t unknowns_per_step(MultiplierForm f) { return u_size(f) + m_size(f); }

Rational MultiplierData::U_multiplier(index_t x, index_t z) const {
  const auto& c = u_coeffs.at(x);
  Rational s;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * poly_basis(k, z);
  return s;
}

Rational MultiplierData::M(index_t x, index_t z) const {
  const auto& c = m_coeffs.at(x);
  Rational s;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * m_basis(form, q, k, z);
  return s;
}

SolveResult solve_multipliers_stepwise(const TermExtension& extension, MultiplierForm form, index_t x_max,
                                       index_t z_samples) {
  if (form == MultiplierForm::u1 && !extension.base_q) {
    throw DomainError("form u1 requires a basic extension with base q");
  }
  const std::size_t nu = u_size(form);
  const std::size_t nm = m_size(form);
  if (z_samples < nu + nm + 2) {
    throw DomainError("form " + to_string(form) + " needs at least " + std::to_string(nu + nm + 2) +
                      " z samples");
  }

  MultiplierData data;
  data.form = form;
  data.q = extension.base_q;
  std::vector<Rational> current(nu);
  current[0] = 1;
  data.u_coeffs.push_back(current);

  for (index_t x = 0; x <= x_max; ++x) {
    // sum_k cur_k z^k F(x,z) - sum_k next_k z^k F(x+1,z)
    //   = sum_k m_k (basis_k(z) F(x,z) - basis_k(z+1) F(x,z+1))
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (index_t z = 0; z < z_samples; ++z) {
      const Rational f0 = extension(x, z);
      const Rational f1 = extension(x + 1, z);
      const Rational fz = extension(x, z + 1);
      std::vector<Rational> row;
      row.reserve(nu + nm);
      Rational known;
      for (std::size_t k = 0; k < nu; ++k) {
        known += current[k] * poly_basis(k, z) * f0;
        row.push_back(poly_basis(k, z) * f1);
      }
      for (std::size_t k = 0; k < nm; ++k) {
        row.push_back(m_basis(form, data.q, k, z) * f0 - m_basis(form, data.q, k, z + 1) * fz);
      }
      rows.push_back(std::move(row));
      rhs.push_back(std::move(known));
    }
    const LinearSolution sol = solve_linear(std::move(rows), std::move(rhs));
    if (!sol.consistent) return SolveFailure{x, "ansatz does not close at x = " + std::to_string(x)};
    if (!sol.x) return SolveFailure{x, "ansatz underdetermined at x = " + std::to_string(x)};

    const auto& v = *sol.x;
    current.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nu));
    data.u_coeffs.push_back(current);
    data.m_coeffs.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(nu), v.end());
  }
  return data;
}

MarkovPair pair_from_multipliers(const TermExtension& extension, const MultiplierData& data) {
  auto shared = std::make_shared<const MultiplierData>(data);
  GridFunction U{[F = extension, shared](index_t x, index_t z) {
                   if (x >= shared->u_coeffs.size()) throw DomainError("x beyond solved multiplier range");
                   return shared->U_multiplier(x, z) * F(x, z);
                 },
                 "U[" + extension.label + "]"};
  GridFunction V{[F = extension, shared](index_t x, index_t z) {
                   if (x >= shared->m_coeffs.size()) throw DomainError("x beyond solved multiplier range");
                   return shared->M(x, z) * F(x, z);
                 },
                 "V[" + extension.label + "]"};
  return {std::move(U), std::move(V), "stepwise:" + to_string(data.form) + ":" + extension.label};
}

TermExtension hg_extension_4f3(const Rational& a, const Rational& h, const Rational& b) {
  using hg::rising_factorial;
  TermExtension F;
  F.eval = [a, h, b](index_t x, index_t z) {
    const Rational den = rising_factorial(b, x + z) * rising_factorial(b + h, x + z) *
                         rising_factorial(b - h, x + z);
    if (den.is_zero()) throw EvaluationError("(b, b+h, b-h)_{x+z} vanishes");
    return rising_factorial(a, z) * rising_factorial(a + h, z) * rising_factorial(a - h, z) / den;
  };
  F.label = "F[4F3 a=" + a.str() + " h=" + h.str() + " b=" + b.str() + "]";
  return F;
}

TermExtension hg_extension_4f3_alternating(const Rational& a, const Rational& b) {
  using hg::rising_factorial;
  TermExtension F;
  F.eval = [a, b](index_t x, index_t z) {
    const Rational den = rising_factorial(b, x + z).pow(3);
    if (den.is_zero()) throw EvaluationError("(b)_{x+z} vanishes");
    const Rational v = rising_factorial(a, z).pow(3) / den;
    return z % 2 == 0 ? v : -v;
  };
  F.label = "F[4F3(-1) a=" + a.str() + " b=" + b.str() + "]";
  return F;
}

}  // namespace markovwz::markov
