#include "markovwz/markov.hpp"

namespace markovwz::markov {

namespace {

long as_long(index_t n) { return static_cast<long>(n); }

Rational qpoch(const Rational& a, const Rational& q, index_t n, const char* name) {
  const Rational p = hg::q_pochhammer(a, q, n);
  if (p.is_zero()) {
    throw EvaluationError(std::string("(") + name + ";q)_" + std::to_string(n) + " vanishes");
  }
  return p;
}

Rational nonzero(Rational v, const std::string& what) {
  if (v.is_zero()) throw EvaluationError(what + " vanishes");
  return v;
}

// F with an arbitrary argument t; Markov's choice is t = cd/(abq).
Rational extension_value(const QParams& p, const Rational& t, index_t x, index_t z) {
  const Rational num = hg::q_pochhammer(p.a, p.q, z) * hg::q_pochhammer(p.b, p.q, z) * t.pow(as_long(z));
  const Rational den = qpoch(p.c, p.q, x + z, "c") * qpoch(p.d, p.q, x + z, "d");
  const Rational shift = (p.c * p.d * p.q.pow(2 * as_long(z))).pow(as_long(x)) *
                         p.q.pow(as_long(x) * (as_long(x) - 1));
  return num / den * shift;
}

Certificate make_certificate(const QParams& p, const Rational& t, const std::string& label) {
  const Rational ab = p.a + p.b;
  const Rational cd = p.c + p.d;
  Certificate cert;
  cert.label = label;
  cert.F = bhg_extension_3phi2(p, t);
  cert.P = [p, t](index_t x) { return t * p.q.pow(2 * as_long(x)) - 1; };
  cert.Q = [p, t](index_t x) {
    const Rational qx = p.q.pow(as_long(x));
    const Rational num = (Rational(1) - p.c / p.a * qx) * (Rational(1) - p.c / p.b * qx) *
                         (Rational(1) - p.d / p.a * qx) * (Rational(1) - p.d / p.b * qx);
    const Rational den = p.q * nonzero(Rational(1) - t * p.q.pow(2 * as_long(x) + 1), "1 - t q^(2x+1)");
    return num / den;
  };
  cert.R = [p, t, ab, cd](index_t x, index_t z) {
    const Rational qx = p.q.pow(as_long(x));
    const Rational den = nonzero(Rational(1) - t * p.q.pow(2 * as_long(x) + 1), "1 - t q^(2x+1)");
    return Rational(1) + t * p.q.pow(2 * as_long(x) + as_long(z)) * (cd * qx - ab) / den;
  };
  return cert;
}

QParams unpack(std::span<const Rational> ps) {
  if (ps.size() != 5) throw DomainError("3phi2 certificate expects parameters (a, b, c, d, q)");
  return {ps[0], ps[1], ps[2], ps[3], ps[4]};
}

}  // namespace

TermExtension bhg_extension_3phi2(const QParams& p, const Rational& t) {
  TermExtension F;
  F.eval = [p, t](index_t x, index_t z) { return extension_value(p, t, x, z); };
  F.label = "F[3phi2 a=" + p.a.str() + " b=" + p.b.str() + " c=" + p.c.str() + " d=" + p.d.str() +
            " q=" + p.q.str() + " t=" + t.str() + "]";
  F.base_q = p.q;
  return F;
}

Markov3Phi2::Markov3Phi2(QParams p) : p_(std::move(p)) {
  if (p_.a.is_zero() || p_.b.is_zero() || p_.c.is_zero() || p_.d.is_zero()) {
    throw DomainError("3phi2 parameters a, b, c, d must be nonzero");
  }
  if (p_.q.is_zero() || p_.q.abs() >= Rational(1)) {
    throw DomainError("base q = " + p_.q.str() + " must satisfy 0 < |q| < 1");
  }
  t_ = p_.c * p_.d / (p_.a * p_.b * p_.q);
  if (t_.abs() >= Rational(1)) {
    throw DomainError("argument t = cd/(abq) = " + t_.str() + " must satisfy |t| < 1");
  }
}

void Markov3Phi2::check_index(index_t x, index_t z) const {
  if (x > kIndexCap || z > kIndexCap) {
    throw DomainError("grid index beyond cap " + std::to_string(kIndexCap));
  }
}

Rational Markov3Phi2::denominator_1mtq(index_t e) const {
  return nonzero(Rational(1) - t_ * qpow(as_long(e)), "1 - t q^" + std::to_string(e));
}

Rational Markov3Phi2::F(index_t x, index_t z) const {
  check_index(x, z);
  return extension_value(p_, t_, x, z);
}

Rational Markov3Phi2::A(index_t x) const {
  check_index(x, 0);
  const Rational num = hg::q_pochhammer(p_.c / p_.a, p_.q, x) * hg::q_pochhammer(p_.c / p_.b, p_.q, x) *
                       hg::q_pochhammer(p_.d / p_.a, p_.q, x) * hg::q_pochhammer(p_.d / p_.b, p_.q, x);
  return num / (qpow(as_long(x)) * qpoch(t_, p_.q, 2 * x, "t"));
}

Rational Markov3Phi2::B(index_t x) const { return A(x) / denominator_1mtq(2 * x); }

Rational Markov3Phi2::C(index_t x) const {
  const Rational q2x = qpow(2 * as_long(x));
  const Rational bracket = (p_.c + p_.d) * qpow(as_long(x)) - (p_.a + p_.b);
  return A(x) * t_ * q2x * bracket / (denominator_1mtq(2 * x) * denominator_1mtq(2 * x + 1));
}

Rational Markov3Phi2::M(index_t x, index_t z) const { return B(x) + C(x) * qpow(as_long(z)); }

Rational Markov3Phi2::M0_over_A(index_t x) const {
  const Rational num = Rational(1) - t_ * qpow(2 * as_long(x)) * (p_.a + p_.b + p_.q) +
                       t_ * qpow(3 * as_long(x)) * (p_.c + p_.d);
  return num / (denominator_1mtq(2 * x) * denominator_1mtq(2 * x + 1));
}

Rational Markov3Phi2::V0(index_t x) const {
  check_index(x, 0);
  const Rational upper = hg::q_pochhammer(p_.c / p_.a, p_.q, x) * hg::q_pochhammer(p_.c / p_.b, p_.q, x) *
                         hg::q_pochhammer(p_.d / p_.a, p_.q, x) * hg::q_pochhammer(p_.d / p_.b, p_.q, x);
  const Rational lower = qpoch(p_.c, p_.q, x, "c") * qpoch(p_.d, p_.q, x, "d");
  const Rational num = Rational(1) - t_ * qpow(2 * as_long(x)) * (p_.a + p_.b + p_.q) +
                       t_ * qpow(3 * as_long(x)) * (p_.c + p_.d);
  return upper / lower * (p_.c * p_.d).pow(as_long(x)) * qpow(as_long(x) * (as_long(x) - 2)) * num /
         qpoch(t_, p_.q, 2 * x + 2, "t");
}

Rational Markov3Phi2::series_term(index_t z) const { return F(0, z); }

TermExtension Markov3Phi2::extension() const { return bhg_extension_3phi2(p_, t_); }

MarkovPair Markov3Phi2::pair(const Rational& perturb_c) const {
  const Markov3Phi2 self = *this;
  GridFunction U{[self](index_t x, index_t z) { return self.A(x) * self.F(x, z); }, "U[3phi2]"};
  GridFunction V{[self, perturb_c](index_t x, index_t z) {
                   const Rational m = self.B(x) + (self.C(x) + perturb_c) * self.p_.q.pow(as_long(z));
                   return m * self.F(x, z);
                 },
                 "V[3phi2]"};
  return {std::move(U), std::move(V), perturb_c.is_zero() ? "markov-3phi2" : "markov-3phi2 (perturbed C)"};
}

Certificate Markov3Phi2::certificate() const { return make_certificate(p_, t_, "markov-3phi2"); }

hg::BHGSpec Markov3Phi2::series_spec() const {
  return hg::BHGSpec{{p_.a, p_.b, p_.q}, {p_.c, p_.d}, p_.q, t_};
}

CertificateFamily markov_3phi2_certificate_family() {
  CertificateFamily fam;
  fam.name = "markov-3phi2";
  fam.parameter_names = {"a", "b", "c", "d", "q"};
  // the identity is algebraic, so |t| < 1 is not imposed here
  fam.instantiate = [](std::span<const Rational> ps) {
    const QParams p = unpack(ps);
    if (p.a.is_zero() || p.b.is_zero() || p.q.is_zero()) throw DomainError("a, b, q must be nonzero");
    const Rational t = p.c * p.d / (p.a * p.b * p.q);
    return make_certificate(p, t, "markov-3phi2");
  };
  // a, b, c, d = +-n/m and q = n/m in (0,1) with 1 <= n, m <= 9
  fam.sample = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(1, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Rational> ps;
    for (int k = 0; k < 4; ++k) {
      const int n = digit(rng);
      const int m = digit(rng);
      ps.emplace_back(Rational(BigInt(coin(rng) ? n : -n), BigInt(m)));
    }
    int n = digit(rng);
    int m = digit(rng);
    while (n >= m) {
      n = digit(rng);
      m = digit(rng);
    }
    ps.emplace_back(Rational(BigInt(n), BigInt(m)));
    return ps;
  };
  return fam;
}

std::array<Rational, 4> coefficient_residuals(const QParams& p, index_t x, const Rational& A_x,
                                              const Rational& A_next, const Rational& B_x,
                                              const Rational& C_x) {
  const Rational t = p.c * p.d / (p.a * p.b * p.q);
  const Rational qx = p.q.pow(as_long(x));
  const Rational q2x = qx * qx;
  const Rational ab = p.a + p.b;
  const Rational cd_sum = p.c + p.d;
  const Rational cd = p.c * p.d;
  std::array<Rational, 4> r;
  r[0] = A_x - B_x * (Rational(1) - t * q2x);
  r[1] = -A_x * cd_sum * qx - (C_x - B_x * cd_sum * qx + B_x * ab * q2x * t - C_x * q2x * p.q * t);
  r[2] = (A_x - A_next) * cd * q2x -
         (B_x * (cd - p.a * p.b * t) * q2x + C_x * (ab * q2x * p.q * t - cd_sum * qx));
  r[3] = -(C_x * (cd * q2x - p.a * p.b * q2x * p.q * t));
  return r;
}

std::array<Rational, 4> coefficient_residuals(const Markov3Phi2& m, index_t x) {
  return coefficient_residuals(m.params(), x, m.A(x), m.A(x + 1), m.B(x), m.C(x));
}

MappedParams markov_param_map(const Rational& r, const Rational& r2, const Rational& s, const Rational& s2,
                              const Rational& bq) {
  if (r.is_zero() || r2.is_zero() || s.is_zero() || s2.is_zero() || bq.is_zero()) {
    throw DomainError("Markov parameters r, r', s, s', q must be nonzero");
  }
  if (bq.abs() <= Rational(1)) throw DomainError("Markov's base must satisfy |q| > 1");
  return {r.reciprocal(), r2.reciprocal(), s.reciprocal(), s2.reciprocal(), bq.reciprocal(),
          r * r2 * bq / (s * s2)};
}

Rational markov_original_term(const Rational& r, const Rational& r2, const Rational& s, const Rational& s2,
                              const Rational& bq, index_t n) {
  Rational num = 1;
  Rational den = 1;
  Rational power = 1;  // bq^k
  for (index_t k = 0; k < n; ++k) {
    num *= (r * power - 1) * (r2 * power - 1);
    den *= (s * power - 1) * (s2 * power - 1);
    power *= bq;
  }
  if (den.is_zero()) throw EvaluationError("denominator of Markov's series term vanishes");
  return num / den * power;
}

}  // namespace markovwz::markov
