#include "markovwz/catalog.hpp"

#include <algorithm>

#include "markovwz/markov.hpp"

namespace markovwz::catalog {

namespace {

using hg::TermSequence;

Rational idx(index_t n) { return Rational(static_cast<unsigned long>(n)); }

Rational factorial(index_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational double_factorial(index_t n) {
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(index_t n, index_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational sign_power(index_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

bool nonpositive_integer(const Rational& a) { return a.is_integer() && a.sign() <= 0; }

// Terms first..up_to+1 of the sequence, indexed from `first`.
std::vector<Rational> scan_terms(const TermSequence& terms, index_t from, index_t up_to) {
  return terms.range(from, up_to - from + 2);
}

// Rounds rho up to a multiple of 2^-20 unless that would reach 1.
Rational tidy_rho(const Rational& rho) {
  const BigInt scale = BigInt(1) << 20;
  const Rational scaled = rho * Rational(scale);
  BigInt up = scaled.floor();
  if (Rational(up) != scaled) up += 1;
  const Rational r(up, scale);
  return r < 1 ? r : rho;
}

void check_alternation(const FormulaEntry& e) {
  const auto t = scan_terms(e.terms, e.terms.first(), kRegistrationScan);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i].is_zero()) break;
    if (t[i].sign() == t[i + 1].sign()) {
      throw DomainError("entry " + e.id + ": signs do not alternate at n = " +
                        std::to_string(e.terms.first() + i));
    }
  }
}

// Registration: exact scan of the ratio bound and of the sign pattern.
FormulaEntry registered(FormulaEntry e) {
  if (e.ratio_bound) {
    if (!(e.ratio_bound->rho < 1) || e.ratio_bound->rho.sign() < 0) {
      throw DomainError("entry " + e.id + ": ratio bound must lie in [0, 1)");
    }
    if (auto bad = first_ratio_violation(e, kRegistrationScan)) {
      throw DomainError("entry " + e.id + ": ratio bound " + e.ratio_bound->rho.str() + " violated at n = " +
                        std::to_string(*bad));
    }
  }
  if (e.alternating) check_alternation(e);
  return e;
}

// Smallest valid_from whose scanned ratios stay below (1 + asym)/2, and the
// bound max(asym, sup of the scanned ratios past it).
RatioBound scanned_bound(const TermSequence& terms, const Rational& asym) {
  const index_t first = terms.first();
  const auto t = scan_terms(terms, first, kRegistrationScan);
  const std::size_t count = t.size() - 1;
  std::vector<Rational> r(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (t[i].is_zero()) {
      if (!t[i + 1].is_zero()) throw EvaluationError("zero term followed by a nonzero term");
      r[i] = 0;
    } else {
      r[i] = (t[i + 1] / t[i]).abs();
    }
  }
  std::vector<Rational> suffix(count + 1, Rational(0));
  for (std::size_t i = count; i-- > 0;) suffix[i] = std::max(suffix[i + 1], r[i]);
  const Rational target = (asym + 1) / 2;
  for (std::size_t i = 0; i < count; ++i) {
    if (suffix[i] <= target) {
      return RatioBound{tidy_rho(std::max(asym, suffix[i])), first + i, false};
    }
  }
  throw DomainError("no geometric ratio bound found on the scanned range");
}

Enclosure nonnegative_tail(const Rational& bound) { return Enclosure(Rational(0), bound); }

Enclosure alternating_tail(const Rational& next_term) {
  return next_term.sign() >= 0 ? Enclosure(Rational(0), next_term) : Enclosure(next_term, Rational(0));
}

}  // namespace

std::optional<index_t> first_ratio_violation(const FormulaEntry& e, index_t up_to) {
  if (!e.ratio_bound) return std::nullopt;
  const index_t from = std::max(e.ratio_bound->valid_from, e.terms.first());
  if (up_to < from) return std::nullopt;
  const auto t = scan_terms(e.terms, from, up_to);
  const Rational& rho = e.ratio_bound->rho;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i + 1].abs() > rho * t[i].abs()) return from + i;
  }
  return std::nullopt;
}

Rational max_ratio(const TermSequence& terms, index_t from, index_t up_to) {
  Rational best;
  if (up_to < from) return best;
  const auto t = scan_terms(terms, from, up_to);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i].is_zero()) {
      if (!t[i + 1].is_zero()) throw EvaluationError("zero term followed by a nonzero term");
      continue;
    }
    best = std::max(best, (t[i + 1] / t[i]).abs());
  }
  return best;
}

FormulaEntry entry_apery() {
  FormulaEntry e;
  e.id = "apery";
  e.constant = "zeta(3)";
  e.provenance = "central binomial series (Hjortnaes 1953, Apery 1979)";
  e.terms = TermSequence(
      [](index_t n) {
        if (n == 0) throw DomainError("apery series starts at n = 1");
        return Rational(5, 2) * sign_power(n - 1) / (binomial(2 * n, n) * idx(n).pow(3));
      },
      [](index_t n) {
        // -n^3 / (2 (2n+1) (n+1)^2)
        return -idx(n).pow(3) / (Rational(2) * idx(2 * n + 1) * idx(n + 1).pow(2));
      },
      1);
  e.ratio_bound = RatioBound{Rational(1, 4), 1, false};
  e.alternating = true;
  e.asymptotic_ratio = Rational(1, 4);
  return registered(std::move(e));
}

FormulaEntry entry_markov_hurwitz(const Rational& a) {
  if (nonpositive_integer(a)) throw DomainError("markov-hurwitz: a must not be zero or a negative integer");
  auto poly = [a](index_t n) {
    const Rational m = idx(n + 1);
    const Rational s = a - 1;
    return Rational(5) * m * m + Rational(6) * s * m + Rational(2) * s * s;
  };
  FormulaEntry e;
  e.id = "markov-hurwitz";
  e.constant = "zeta(3," + a.str() + ")";
  e.provenance = "A. A. Markov (1890), Hurwitz zeta acceleration";
  e.terms = TermSequence(
      [a, poly](index_t n) {
        return Rational(1, 4) * sign_power(n) * factorial(n).pow(6) / factorial(2 * n + 1) * poly(n) /
               hg::rising_factorial(a, n + 1).pow(4);
      },
      [a, poly](index_t n) {
        return -idx(n + 1).pow(6) / (idx(2 * n + 2) * idx(2 * n + 3)) * poly(n + 1) / poly(n) /
               (a + idx(n + 1)).pow(4);
      },
      0);
  e.asymptotic_ratio = Rational(1, 4);
  e.ratio_bound = a == 1 ? RatioBound{Rational(1, 4), 0, false} : scanned_bound(e.terms, Rational(1, 4));
  e.alternating = true;
  return registered(std::move(e));
}

FormulaEntry entry_ratio27_zeta3() {
  auto g = [](index_t n) {
    const Rational m = idx(n);
    return (Rational(56) * m * m - Rational(32) * m + 5) / ((Rational(2) * m - 1).pow(2) * m.pow(3));
  };
  FormulaEntry e;
  e.id = "ratio27-zeta3";
  e.constant = "zeta(3)";
  e.provenance = "A. A. Markov (1890), ratio 1/27 series";
  e.terms = TermSequence(
      [g](index_t n) {
        if (n == 0) throw DomainError("ratio27 series starts at n = 1");
        return Rational(1, 4) * sign_power(n - 1) * g(n) * factorial(n).pow(3) / factorial(3 * n);
      },
      [g](index_t n) {
        return -g(n + 1) / g(n) * idx(n + 1).pow(3) / (idx(3 * n + 1) * idx(3 * n + 2) * idx(3 * n + 3));
      },
      1);
  e.ratio_bound = RatioBound{Rational(1, 27), 1, false};
  e.alternating = true;
  e.asymptotic_ratio = Rational(1, 27);
  return registered(std::move(e));
}

FormulaEntry entry_az_zeta3() {
  auto poly = [](index_t n) {
    const Rational m = idx(n);
    return Rational(205) * m * m + Rational(250) * m + 77;
  };
  FormulaEntry e;
  e.id = "az-zeta3";
  e.constant = "zeta(3)";
  e.provenance = "Amdeberhan-Zeilberger (1997), ratio 2^-10 series";
  e.terms = TermSequence(
      [poly](index_t n) {
        return sign_power(n) * factorial(n).pow(10) * poly(n) / (Rational(64) * factorial(2 * n + 1).pow(5));
      },
      [poly](index_t n) {
        return -idx(n + 1).pow(10) / (idx(2 * n + 2) * idx(2 * n + 3)).pow(5) * poly(n + 1) / poly(n);
      },
      0);
  e.ratio_bound = RatioBound{Rational(1, 1024), 0, false};
  e.alternating = true;
  e.asymptotic_ratio = Rational(1, 1024);
  return registered(std::move(e));
}

FormulaEntry entry_zeta2_27() {
  auto h = [](index_t k) {
    const Rational m = idx(k);
    return Rational(1) / (Rational(4) * m * m) + Rational(5) / ((Rational(6) * m + 1) * (Rational(6) * m + 3));
  };
  FormulaEntry e;
  e.id = "zeta2-27";
  e.constant = "zeta(2)";
  e.provenance = "A. A. Markov, 27^-k series for zeta(2)";
  e.offset = Rational(5, 3);
  e.terms = TermSequence(
      [h](index_t k) {
        if (k == 0) throw DomainError("zeta2-27 series starts at k = 1");
        return sign_power(k) * double_factorial(2 * k - 1).pow(3) / double_factorial(6 * k - 1) * h(k);
      },
      [h](index_t k) {
        return -idx(2 * k + 1).pow(3) / (idx(6 * k + 1) * idx(6 * k + 3) * idx(6 * k + 5)) * h(k + 1) / h(k);
      },
      1);
  e.ratio_bound = RatioBound{Rational(1, 27), 1, false};
  e.alternating = true;
  e.asymptotic_ratio = Rational(1, 27);
  return registered(std::move(e));
}

FormulaEntry entry_schellbach(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const markov::SchellbachParams p(a, b, c, d);
  FormulaEntry e;
  e.id = "schellbach";
  e.constant = "3F2(" + a.str() + "," + b.str() + ",1;" + c.str() + "," + d.str() + ";1)";
  if (a == 1 && b == 1 && c == 2 && d == 2) e.constant = "zeta(2)";
  e.provenance = "Schellbach's transformation of 3F2(a,b,1;c,d;1)";
  e.terms = markov::schellbach_sequence(p);
  e.asymptotic_ratio = Rational(1, 4);
  e.ratio_bound = scanned_bound(e.terms, Rational(1, 4));
  return registered(std::move(e));
}

FormulaEntry entry_direct(DirectKind kind, const Rational& a, DirectTail tail) {
  FormulaEntry e;
  e.slow = true;
  e.asymptotic_ratio = Rational(1);
  const bool em = tail == DirectTail::euler_maclaurin;
  const std::string suffix = em ? " (Euler-Maclaurin tail)" : " (integral tail)";
  switch (kind) {
    case DirectKind::zeta2:
    case DirectKind::zeta3: {
      const long s = kind == DirectKind::zeta2 ? 2 : 3;
      e.id = s == 2 ? "direct-zeta2" : "direct-zeta3";
      e.constant = s == 2 ? "zeta(2)" : "zeta(3)";
      e.provenance = "defining series" + suffix;
      e.terms = TermSequence([s](index_t n) { return idx(n).pow(-s); },
                             [s](index_t n) { return (idx(n) / idx(n + 1)).pow(s); }, 1);
      e.tail = [s, em](index_t next, const TermSequence&) {
        if (em) return euler_maclaurin_tail(s, Rational(0), next);
        const Rational N = idx(next - 1);
        return nonnegative_tail(s == 2 ? N.reciprocal() : (Rational(2) * N * N).reciprocal());
      };
      break;
    }
    case DirectKind::eta2:
    case DirectKind::eta3: {
      const long s = kind == DirectKind::eta2 ? 2 : 3;
      e.id = s == 2 ? "direct-eta2" : "direct-eta3";
      e.constant = s == 2 ? "eta(2)" : "eta(3)";
      e.provenance = "alternating defining series (Stirling)";
      e.terms = TermSequence([s](index_t n) { return sign_power(n - 1) * idx(n).pow(-s); },
                             [s](index_t n) { return -(idx(n) / idx(n + 1)).pow(s); }, 1);
      e.alternating = true;
      e.tail = [](index_t next, const TermSequence& t) { return alternating_tail(t.term(next)); };
      break;
    }
    case DirectKind::hurwitz3: {
      if (a.sign() <= 0) throw DomainError("direct-hurwitz3: a must be positive");
      e.id = "direct-hurwitz3";
      e.constant = "zeta(3," + a.str() + ")";
      e.provenance = "defining Hurwitz series" + suffix;
      e.terms = TermSequence([a](index_t n) { return (a + idx(n)).pow(-3); },
                             [a](index_t n) { return ((a + idx(n)) / (a + idx(n + 1))).pow(3); }, 0);
      e.tail = [a, em](index_t next, const TermSequence&) {
        if (em) return euler_maclaurin_tail(3, a, next);
        // sum_{n>N} (a+n)^-3 <= 1/(2 (a+N)^2)
        const Rational base = a + idx(next - 1);
        return nonnegative_tail((Rational(2) * base * base).reciprocal());
      };
      break;
    }
  }
  return registered(std::move(e));
}

FormulaEntry entry_kummer() {
  const Rational p(9, 2);
  FormulaEntry e;
  e.id = "kummer";
  e.constant = "4F3(9/2,9/2,9/2,1;5,5,5;1)";
  e.provenance = "Kummer's sum, 4F3 reading";
  e.slow = true;
  e.asymptotic_ratio = Rational(1);
  e.terms = TermSequence(
      [p](index_t n) { return (hg::rising_factorial(p, n) / hg::rising_factorial(Rational(5), n)).pow(3); },
      [p](index_t n) { return ((p + idx(n)) / (Rational(5) + idx(n))).pow(3); }, 0);
  // t(n+1)/t(n) <= ((N+9/2)/(n+9/2))^(3/2) past N, so the tail is at most
  // t(N) times the integral of ((N+9/2)/(x+9/2))^(3/2) over [N, inf).
  e.tail = [p](index_t next, const TermSequence& t) {
    const index_t N = next - 1;
    return nonnegative_tail(Rational(2) * (idx(N) + p) * t.term(N));
  };
  return registered(std::move(e));
}

namespace {

// |(1 - u s)| bounds for |s| <= Q.
Rational upper_factor(const Rational& u, const Rational& Q) { return Rational(1) + u.abs() * Q; }
Rational lower_factor(const Rational& u, const Rational& Q) { return Rational(1) - u.abs() * Q; }

constexpr index_t kBoundSearchCap = 4096;

}  // namespace

FormulaEntry entry_qphi_direct(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                               const Rational& q) {
  const markov::Markov3Phi2 m({a, b, c, d, q});
  const Rational t = m.t();
  FormulaEntry e;
  e.id = "qphi-direct";
  e.constant = "3phi2(" + a.str() + "," + b.str() + ",q;" + c.str() + "," + d.str() + ";q=" + q.str() +
               ",t=" + t.str() + ")";
  e.provenance = "basic hypergeometric series, summed directly";
  e.terms = hg::term_sequence(m.series_spec());
  e.asymptotic_ratio = t.abs();

  // For z >= z0 and Q = |q|^z0: |ratio(z)| <= |t| (1+|a|Q)(1+|b|Q) / ((1-|c|Q)(1-|d|Q)).
  const Rational target = (t.abs() + 1) / 2;
  Rational Q = 1;
  for (index_t z0 = 0; z0 <= kBoundSearchCap; ++z0, Q *= q.abs()) {
    const Rational lc = lower_factor(c, Q);
    const Rational ld = lower_factor(d, Q);
    if (lc.sign() <= 0 || ld.sign() <= 0) continue;
    const Rational rho = t.abs() * upper_factor(a, Q) * upper_factor(b, Q) / (lc * ld);
    if (rho <= target) {
      e.ratio_bound = RatioBound{rho, z0, true};
      return registered(std::move(e));
    }
  }
  throw DomainError("qphi-direct: no ratio bound below 1 found");
}

FormulaEntry entry_qphi_transformed(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                    const Rational& q) {
  auto m = std::make_shared<const markov::Markov3Phi2>(markov::QParams{a, b, c, d, q});
  const Rational t = m->t();
  FormulaEntry e;
  e.id = "qphi-transformed";
  e.constant = "3phi2(" + a.str() + "," + b.str() + ",q;" + c.str() + "," + d.str() + ";q=" + q.str() +
               ",t=" + t.str() + ")";
  e.provenance = "A. A. Markov, transformed basic hypergeometric series";
  e.terms = TermSequence([m](index_t x) { return m->V0(x); }, nullptr, 0);
  e.asymptotic_ratio = Rational(0);

  // For x >= x0, Q = |q|^x0 bounds |q|^x; the ratio V0(x+1)/V0(x) is
  //   prod_u (1 - u q^x) / ((1 - c q^x)(1 - d q^x)) * cd q^(2x-1)
  //   * num(x+1)/num(x) / ((1 - t q^(2x+2))(1 - t q^(2x+3)))
  // with u over c/a, c/b, d/a, d/b and num(y) = 1 - t q^(2y)(a+b+q) + t q^(3y)(c+d).
  const Rational aq = q.abs();
  const Rational at = t.abs();
  const std::array<Rational, 4> us{c / a, c / b, d / a, d / b};
  Rational Q = 1;
  for (index_t x0 = 0; x0 <= kBoundSearchCap; ++x0, Q *= aq) {
    const Rational lc = lower_factor(c, Q);
    const Rational ld = lower_factor(d, Q);
    const Rational delta = at * Q * Q * ((a.abs() + b.abs() + aq) + Q * (c.abs() + d.abs()));
    const Rational lt = Rational(1) - at * Q * Q;
    if (lc.sign() <= 0 || ld.sign() <= 0 || delta >= 1 || lt.sign() <= 0) continue;
    Rational rho = (c * d).abs() * aq.pow(2 * static_cast<long>(x0) - 1) * (Rational(1) + delta) /
                   ((Rational(1) - delta) * lc * ld * lt * lt);
    for (const auto& u : us) rho *= upper_factor(u, Q);
    if (rho <= Rational(1, 2)) {
      e.ratio_bound = RatioBound{rho, x0, true};
      return registered(std::move(e));
    }
  }
  throw DomainError("qphi-transformed: no ratio bound below 1 found");
}

namespace {

// Remainder enclosure after summing terms first..next-1.
Enclosure remainder(const FormulaEntry& e, index_t next, const std::function<Rational(index_t)>& term) {
  if (!e.geometric()) return e.tail(next, e.terms);
  const RatioBound& rb = *e.ratio_bound;
  Rational extra;
  index_t start = next;
  for (; start < rb.valid_from; ++start) extra += term(start).abs();
  const Rational t_start = term(start).abs();
  Rational half = t_start / (Rational(1) - rb.rho);
  if (e.alternating && next >= rb.valid_from) half = std::min(half, t_start);
  return Enclosure::around(Rational(0), extra + half);
}

std::size_t auto_digits(const Rational& width) { return std::max<std::size_t>(1, certifiable_digits(width, 100)); }

}  // namespace

EvaluationReport evaluate(const FormulaEntry& entry, index_t n_terms, std::size_t requested_digits,
                          Rounding rounding) {
  if (n_terms < 1) throw DomainError("evaluate: n_terms must be at least 1");
  const index_t first = entry.terms.first();
  const index_t next = first + n_terms;

  if (entry.ratio_bound && !entry.ratio_bound->proven_for_all) {
    const index_t scan_to = std::max<index_t>(kRegistrationScan, 4 * next);
    if (auto bad = first_ratio_violation(entry, scan_to)) {
      throw EvaluationError("entry " + entry.id + ": ratio bound violated at n = " + std::to_string(*bad) +
                            "; tail not certified");
    }
  }

  const index_t span = std::max(next, entry.ratio_bound ? entry.ratio_bound->valid_from : next) + 1 - first;
  const std::vector<Rational> t = entry.terms.prefix(span);
  Rational sum = entry.offset;
  for (index_t i = 0; i < n_terms; ++i) sum += t[i];
  const Enclosure rem = remainder(entry, next, [&](index_t n) { return t.at(n - first); });

  EvaluationReport r;
  r.id = entry.id;
  r.constant = entry.constant;
  r.terms_used = n_terms;
  r.partial_sum = sum;
  r.enclosure = Enclosure(sum + rem.lower(), sum + rem.upper());
  const std::size_t digits = requested_digits == 0 ? auto_digits(r.enclosure.width()) : requested_digits;
  r.rendering = to_decimal(r.enclosure, digits, rounding);
  r.digits_proven = r.rendering.digits_proven;
  if (entry.ratio_bound) r.ratio_bound = entry.ratio_bound->rho;
  return r;
}

index_t terms_needed(const FormulaEntry& entry, std::size_t digits, Rounding rounding, index_t cap) {
  if (!entry.geometric()) throw DomainError("no geometric bound");
  if (digits == 0) return 1;
  const index_t first = entry.terms.first();
  const index_t vf = entry.ratio_bound->valid_from;
  std::vector<Rational> t;
  auto term = [&](index_t n) -> const Rational& {
    const index_t i = n - first;
    if (i >= t.size()) {
      const index_t want = std::max<index_t>(i + 1, 2 * t.size() + 16);
      const auto more = entry.terms.range(first + t.size(), want - t.size());
      t.insert(t.end(), more.begin(), more.end());
    }
    return t[i];
  };

  Rational sum = entry.offset;
  for (index_t n_terms = 1; n_terms <= cap; ++n_terms) {
    const index_t next = first + n_terms;
    sum += term(next - 1);
    if (next < vf) continue;
    const Enclosure rem = remainder(entry, next, [&](index_t n) { return term(n); });
    const Enclosure enc(sum + rem.lower(), sum + rem.upper());
    if (certifiable_digits(enc.width(), digits) < digits) continue;
    if (to_decimal(enc, digits, rounding).digits_proven < digits) continue;
    if (evaluate(entry, n_terms, digits, rounding).digits_proven >= digits) return n_terms;
  }
  throw DomainError("entry " + entry.id + ": " + std::to_string(digits) + " digits need more than " +
                    std::to_string(cap) + " terms");
}

const std::vector<EntryInfo>& registry() {
  static const std::vector<EntryInfo> infos{
      {"apery", "zeta3", {}, "zeta(3), central binomial series, ratio 1/4"},
      {"markov-hurwitz", "zeta3", {"a"}, "zeta(3,a), Markov's accelerated Hurwitz series, ratio 1/4"},
      {"ratio27-zeta3", "zeta3", {}, "zeta(3), ratio 1/27"},
      {"az-zeta3", "zeta3", {}, "zeta(3), ratio 2^-10"},
      {"zeta2-27", "zeta2", {}, "zeta(2) = 5/3 + series with ratio 1/27"},
      {"schellbach", "zeta2", {"a", "b", "c", "d"}, "3F2(a,b,1;c,d;1) by Schellbach's series, ratio 1/4"},
      {"direct-zeta2", "zeta2", {}, "zeta(2), direct summation"},
      {"direct-zeta3", "zeta3", {}, "zeta(3), direct summation"},
      {"direct-eta2", "", {}, "eta(2), alternating direct summation"},
      {"direct-eta3", "", {}, "eta(3), alternating direct summation"},
      {"direct-hurwitz3", "", {"a"}, "zeta(3,a), direct summation"},
      {"kummer", "", {}, "4F3(9/2,9/2,9/2,1;5,5,5;1), slow"},
      {"qphi-direct", "", {"a", "b", "c", "d", "q"}, "3phi2(a,b,q;c,d;q,t), t = cd/(abq), direct"},
      {"qphi-transformed", "", {"a", "b", "c", "d", "q"}, "same sum through Markov's transformed terms"},
  };
  return infos;
}

namespace {

Rational param(const EntryParams& p, const std::string& name, const Rational& fallback) {
  const auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

void check_params(const std::string& id, const EntryInfo& info, const EntryParams& params) {
  for (const auto& [name, value] : params) {
    if (std::find(info.parameters.begin(), info.parameters.end(), name) == info.parameters.end()) {
      throw DomainError("entry " + id + " takes no parameter '" + name + "'");
    }
  }
}

}  // namespace

FormulaEntry make_entry(const std::string& id, const EntryParams& params, DirectTail tail) {
  const auto& infos = registry();
  const auto it = std::find_if(infos.begin(), infos.end(), [&](const EntryInfo& i) { return i.id == id; });
  if (it == infos.end()) throw DomainError("unknown formula id '" + id + "'");
  check_params(id, *it, params);

  if (id == "apery") return entry_apery();
  if (id == "markov-hurwitz") return entry_markov_hurwitz(param(params, "a", 1));
  if (id == "ratio27-zeta3") return entry_ratio27_zeta3();
  if (id == "az-zeta3") return entry_az_zeta3();
  if (id == "zeta2-27") return entry_zeta2_27();
  if (id == "schellbach") {
    return entry_schellbach(param(params, "a", 1), param(params, "b", 1), param(params, "c", 2),
                            param(params, "d", 2));
  }
  if (id == "direct-zeta2") return entry_direct(DirectKind::zeta2, 1, tail);
  if (id == "direct-zeta3") return entry_direct(DirectKind::zeta3, 1, tail);
  if (id == "direct-eta2") return entry_direct(DirectKind::eta2, 1, tail);
  if (id == "direct-eta3") return entry_direct(DirectKind::eta3, 1, tail);
  if (id == "direct-hurwitz3") return entry_direct(DirectKind::hurwitz3, param(params, "a", 1), tail);
  if (id == "kummer") return entry_kummer();
  const Rational a = param(params, "a", Rational(1, 3));
  const Rational b = param(params, "b", Rational(1, 5));
  const Rational c = param(params, "c", Rational(1, 7));
  const Rational d = param(params, "d", Rational(1, 11));
  const Rational q = param(params, "q", Rational(1, 2));
  if (id == "qphi-direct") return entry_qphi_direct(a, b, c, d, q);
  return entry_qphi_transformed(a, b, c, d, q);
}

std::vector<FormulaEntry> entries_for_constant(const std::string& constant_key, DirectTail tail) {
  if (constant_key == "zeta3") {
    return {entry_direct(DirectKind::zeta3, 1, tail), entry_apery(), entry_markov_hurwitz(1),
            entry_ratio27_zeta3(), entry_az_zeta3()};
  }
  if (constant_key == "zeta2") {
    return {entry_direct(DirectKind::zeta2, 1, tail), entry_schellbach(1, 1, 2, 2), entry_zeta2_27()};
  }
  throw DomainError("unknown constant '" + constant_key + "' (expected zeta2 or zeta3)");
}

}  // namespace markovwz::catalog
