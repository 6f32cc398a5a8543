#include <doctest.h>

#include <cmath>

#include "markovwz/catalog.hpp"
#include "markovwz/markov.hpp"
#include "support.hpp"

using namespace markovwz;
using namespace markovwz::markov;
using testing::R;

namespace {

QParams sample() { return testing::sample_tuples().front(); }

Rational idx(index_t n) { return Rational(static_cast<unsigned long>(n)); }

MarkovPair zero_pair() {
  GridFunction zero{[](index_t, index_t) { return Rational(0); }, "0"};
  return {zero, zero, "zero"};
}

}  // namespace

TEST_CASE("pair condition at the origin for the 3phi2 pair") {
  const Markov3Phi2 m(sample());
  const auto c = check_pair_condition(m.pair(), 0, 0);
  CHECK(c.holds);
  CHECK(c.residual == Rational(0));
  CHECK(check_pair_condition(zero_pair(), 3, 4).holds);
}

TEST_CASE("perturbed C breaks the pair condition") {
  const Markov3Phi2 m(sample());
  const auto c = check_pair_condition(m.pair(R("1/1000")), 0, 0);
  CHECK_FALSE(c.holds);
  CHECK(c.residual != Rational(0));
  const auto g = check_pair_grid(m.pair(R("1/1000")), 5, 5);
  CHECK_FALSE(g.holds);
  REQUIRE(g.first_failure);
  CHECK(g.first_failure->first == 0);
  CHECK(g.first_failure->second == 0);
}

TEST_CASE("undefined grid values report their location") {
  // c = 2 with q = 1/2 makes (c;q)_z vanish from z = 2 on
  const Markov3Phi2 m({Rational(3), Rational(5), Rational(2), R("1/11"), R("1/2")});
  CHECK_THROWS_AS(check_pair_condition(m.pair(), 0, 2), EvaluationError);
  try {
    (void)check_pair_condition(m.pair(), 0, 2);
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("(x,z) = (") != std::string::npos);
  }
}

TEST_CASE("Green rectangle") {
  const Markov3Phi2 m(sample());
  const auto pair = m.pair();
  const auto s11 = green_rectangle(pair, 1, 1);
  CHECK(s11.lhs == s11.rhs);
  CHECK(s11.lhs == pair.U(0, 0) - pair.U(1, 0));
  CHECK(s11.rhs == pair.V(0, 0) - pair.V(0, 1));
  const auto s = green_rectangle(pair, 10, 10);
  CHECK(s.lhs == s.rhs);
  CHECK(s.lhs != Rational(0));
  CHECK_THROWS_AS(green_rectangle(pair, 0, 3), DomainError);
  const auto z = green_rectangle(zero_pair(), 4, 7);
  CHECK(z.lhs == Rational(0));
  CHECK(z.rhs == Rational(0));
}

TEST_CASE("transform check: discrepancy equals the edge gap and edges shrink") {
  const Markov3Phi2 m(sample());
  const auto pair = m.pair();
  const auto t25 = transform_check(pair, 25, 25);
  CHECK(t25.discrepancy() == t25.edge_gap());
  const auto t1 = transform_check(pair, 1, 1);
  const auto g1 = green_rectangle(pair, 1, 1);
  CHECK(t1.u_sum - t1.u_edge == g1.lhs);
  CHECK(t1.v_sum - t1.v_edge == g1.rhs);
  Rational prev = -1;
  for (index_t n : {40, 20, 10}) {
    const auto t = transform_check(pair, n, n);
    const Rational edges = t.u_edge.abs() + t.v_edge.abs();
    if (prev.sign() >= 0) CHECK(prev < edges);
    prev = edges;
  }
}

TEST_CASE("3phi2 closed forms") {
  const QParams p = sample();
  const Markov3Phi2 m(p);
  const Rational t = m.t();
  CHECK(t == R("30/77"));
  CHECK(m.A(0) == Rational(1));
  CHECK(m.B(0) == (Rational(1) - t).reciprocal());
  CHECK(m.C(0) == t * (p.c + p.d - p.a - p.b) / ((Rational(1) - t) * (Rational(1) - t * p.q)));
  CHECK(m.V0(0) == (Rational(1) - t * (p.a + p.b + p.q) + t * (p.c + p.d)) /
                       ((Rational(1) - t) * (Rational(1) - t * p.q)));
  for (index_t x = 0; x <= 5; ++x) {
    const Rational expected = p.q.pow(static_cast<long>(x * (x - (x > 0 ? 1 : 0)))) * (p.c * p.d).pow(x) /
                              (hg::q_pochhammer(p.c, p.q, x) * hg::q_pochhammer(p.d, p.q, x));
    CHECK(m.F(x, 0) == expected);
    CHECK(m.V0(x) == m.pair().V(x, 0));
    CHECK(m.M0(x) == m.M0_over_A(x) * m.A(x));
  }
  for (index_t z = 0; z < 8; ++z) CHECK(m.F(0, z) == m.series_term(z));
}

TEST_CASE("3phi2 parameter validation") {
  CHECK_THROWS_AS(Markov3Phi2({Rational(0), 1, 1, 1, R("1/2")}), DomainError);
  CHECK_THROWS_AS(Markov3Phi2({1, 1, 1, 1, Rational(2)}), DomainError);
  CHECK_THROWS_AS(Markov3Phi2({1, 1, 1, 1, R("1/2")}), DomainError);  // t = 2
  const Markov3Phi2 m(sample());
  CHECK_THROWS_AS(m.F(Markov3Phi2::kIndexCap + 1, 0), DomainError);
}

TEST_CASE("coefficient equations vanish on the closed forms") {
  const Markov3Phi2 m(sample());
  for (index_t x = 0; x <= 10; ++x) {
    for (const auto& r : coefficient_residuals(m, x)) CHECK(r == Rational(0));
  }
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Markov3Phi2 mk(testing::random_tuple(rng));
    for (index_t x = 0; x <= 5; ++x) {
      for (const auto& r : coefficient_residuals(mk, x)) CHECK(r == Rational(0));
    }
  }
  const auto bad = coefficient_residuals(m.params(), 2, m.A(2) + 1, m.A(3), m.B(2), m.C(2));
  CHECK(bad[0] != Rational(0));
}

TEST_CASE("fourth coefficient equation holds for arbitrary values") {
  const QParams p = sample();
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto r = coefficient_residuals(p, k % 6, testing::small_rational(rng), testing::small_rational(rng),
                                         testing::small_rational(rng), testing::small_rational(rng));
    CHECK(r[3] == Rational(0));
  }
}

TEST_CASE("certificate identity and bridge") {
  for (const auto& p : testing::sample_tuples()) {
    const Markov3Phi2 m(p);
    const Certificate cert = m.certificate();
    for (index_t x = 0; x <= 6; ++x) {
      for (index_t z = 0; z <= 6; ++z) CHECK(certificate_residual(cert, x, z) == Rational(0));
    }
    const auto pair = pair_from_certificate(cert, 15);
    const auto A = certificate_multipliers(cert, 15);
    CHECK(A[0] == Rational(1));
    for (index_t x = 0; x <= 15; ++x) {
      CHECK(A[x] == m.A(x));
      CHECK(pair.U(x, 0) == m.A(x) * m.F(x, 0));
      CHECK(pair.V(x, 0) == m.M0(x) * m.F(x, 0));
    }
    CHECK_THROWS_AS(pair.U(40, 0), DomainError);
  }
}

TEST_CASE("constant certificate gives U = 1 and V = 0") {
  Certificate c;
  c.F = TermExtension{[](index_t, index_t) { return Rational(1); }, "1", std::nullopt};
  c.P = [](index_t) { return Rational(1); };
  c.Q = [](index_t) { return Rational(-1); };
  c.R = [](index_t, index_t) { return Rational(0); };
  c.label = "constant";
  const auto pair = pair_from_certificate(c, 10);
  for (index_t x = 0; x <= 10; ++x) {
    for (index_t z = 0; z <= 5; ++z) {
      CHECK(pair.U(x, z) == Rational(1));
      CHECK(pair.V(x, z) == Rational(0));
    }
  }
  CHECK(check_pair_grid(pair, 9, 5).holds);
}

TEST_CASE("vanishing P makes the certificate singular") {
  Certificate c;
  c.F = TermExtension{[](index_t, index_t) { return Rational(1); }, "1", std::nullopt};
  c.P = [](index_t x) { return Rational(static_cast<long>(x) - 2); };
  c.Q = [](index_t) { return Rational(1); };
  c.R = [](index_t, index_t) { return Rational(0); };
  CHECK_THROWS_WITH(pair_from_certificate(c, 5), "certificate singular at x = 2");
}

TEST_CASE("verify_certificate") {
  const auto fam = markov_3phi2_certificate_family();
  const QParams p = sample();
  const std::vector<Rational> ps{p.a, p.b, p.c, p.d, p.q};
  const auto v = verify_certificate(fam, ps, 19, 19, 50, 0);
  CHECK(v.passed);
  CHECK(v.points_checked == 400 + 100);

  const auto single = verify_certificate(fam, ps, 0, 0, 0, 0);
  CHECK(single.passed);
  CHECK(single.points_checked == 1);

  CertificateFamily broken = fam;
  broken.instantiate = [fam](std::span<const Rational> xs) {
    Certificate c = fam.instantiate(xs);
    c.R = [R0 = c.R](index_t x, index_t z) { return R0(x, z) + 1; };
    return c;
  };
  const auto b = verify_certificate(broken, ps, 5, 5, 10, 0);
  CHECK_FALSE(b.passed);
  REQUIRE(b.first_failure);
  CHECK(b.first_failure->x == 0);
  CHECK(b.first_failure->z == 0);

  // same seed, same verdict
  const auto again = verify_certificate(fam, ps, 3, 3, 20, 42);
  const auto again2 = verify_certificate(fam, ps, 3, 3, 20, 42);
  CHECK(again.points_checked == again2.points_checked);
}

TEST_CASE("Markov's parameters map onto the |q| < 1 form") {
  const auto id = markov_param_map(1, 1, 1, 1, 2);
  CHECK(id.a == Rational(1));
  CHECK(id.q == R("1/2"));
  CHECK(id.t == Rational(2));
  CHECK_THROWS_AS(Markov3Phi2({id.a, id.b, id.c, id.d, id.q}), DomainError);

  const auto m = markov_param_map(3, 5, 7, 11, 2);
  CHECK(m.a == R("1/3"));
  CHECK(m.b == R("1/5"));
  CHECK(m.c == R("1/7"));
  CHECK(m.d == R("1/11"));
  CHECK(m.q == R("1/2"));
  CHECK(m.t == R("30/77"));

  const hg::BHGSpec spec{{m.a, m.b, m.q}, {m.c, m.d}, m.q, m.t};
  for (index_t n = 0; n <= 10; ++n) CHECK(markov_original_term(3, 5, 7, 11, 2, n) == hg::bhg_term(spec, n));

  CHECK_THROWS_AS(markov_param_map(0, 1, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(markov_param_map(1, 1, 1, 1, R("1/2")), DomainError);
}

TEST_CASE("Schellbach terms") {
  const SchellbachParams p(1, 1, 2, 2);
  CHECK(p.t() == Rational(1));
  CHECK(schellbach_polynomial(p, 0) == Rational(3));
  CHECK(schellbach_term(p, 0) == R("3/2"));
  CHECK(schellbach_term(p, 1) == R("1/8"));
  CHECK(schellbach_term(p, 2) == R("1/60"));
  CHECK(schellbach_term(p, 3) == R("108/40320"));
  for (index_t x = 0; x < 20; ++x) {
    // 3 x!^2 / (2x+2)!
    Rational f = 1;
    for (index_t k = 1; k <= x; ++k) f *= idx(k) * idx(k);
    Rational g = 1;
    for (index_t k = 1; k <= 2 * x + 2; ++k) g *= idx(k);
    CHECK(schellbach_term(p, x) == Rational(3) * f / g);
    CHECK(schellbach_term(p, x + 1) == schellbach_term(p, x) * schellbach_ratio(p, x));
  }
  Rational s;
  for (index_t x = 0; x <= 3; ++x) s += schellbach_term(p, x);
  CHECK(s == R("3/2") + R("1/8") + R("1/60") + R("108/40320"));
  CHECK(s < Rational::parse_decimal("1.6449340668482264"));
}

TEST_CASE("Schellbach parameter validation") {
  CHECK_THROWS_AS(SchellbachParams(1, 1, 1, 1), DomainError);          // t = -1
  CHECK_THROWS_AS(SchellbachParams(1, 1, 0, 5), DomainError);          // c = 0
  CHECK_THROWS_AS(SchellbachParams(3, 1, 2, R("9/2")), DomainError);   // c - a = -1
}

TEST_CASE("Schellbach asymptotic trend flattens") {
  const SchellbachParams p(1, 1, 2, 2);
  const double r8 = schellbach_asymptotics(p, 8);
  const double r16 = schellbach_asymptotics(p, 16);
  const double r32 = schellbach_asymptotics(p, 32);
  CHECK(std::abs(r16 / r8 - 1) < 0.1);
  CHECK(std::abs(r32 / r16 - 1) < 0.1);
  CHECK_THROWS_AS(schellbach_asymptotics(p, 1), DomainError);
}

TEST_CASE("Schellbach and direct 3F2 partial sums share a limit") {
  // 3F2(1,1,1;2,2;1) = zeta(2); direct side bounded by the Euler-Maclaurin tail
  const auto s = catalog::evaluate(catalog::entry_schellbach(1, 1, 2, 2), 30);
  const auto d = catalog::evaluate(catalog::entry_direct(catalog::DirectKind::zeta2), 60);
  CHECK(s.enclosure.intersects(d.enclosure));
  const auto spec = schellbach_direct_spec(SchellbachParams(1, 1, 2, 2));
  for (index_t n = 0; n < 10; ++n) CHECK(hg::hg_term(spec, n) == idx(n + 1).pow(-2));
}

TEST_CASE("stepwise solver reproduces the 3phi2 closed forms with u1") {
  const Markov3Phi2 m(sample());
  const auto res = solve_multipliers_stepwise(m.extension(), MultiplierForm::u1, 10, 6);
  REQUIRE(std::holds_alternative<MultiplierData>(res));
  const auto& d = std::get<MultiplierData>(res);
  CHECK(d.x_max() == 10);
  for (index_t x = 0; x <= 10; ++x) {
    CHECK(d.A(x) == m.A(x));
    CHECK(d.m_coeffs[x][0] == m.B(x));
    CHECK(d.m_coeffs[x][1] == m.C(x));
  }
  CHECK(d.A(11) == m.A(11));
}

TEST_CASE("stepwise solver closes on the 4F3 family with u2") {
  const auto F = hg_extension_4f3(1, 0, 2);
  const auto res = solve_multipliers_stepwise(F, MultiplierForm::u2, 10, 9);
  REQUIRE(std::holds_alternative<MultiplierData>(res));
  const auto& d = std::get<MultiplierData>(res);
  CHECK(d.u_coeffs[0] == std::vector<Rational>{1, 0});
  const auto pair = pair_from_multipliers(F, d);
  CHECK(check_pair_grid(pair, 9, 9).holds);
  const auto g = green_rectangle(pair, 10, 10);
  CHECK(g.lhs == g.rhs);
  // the transformed series approaches zeta(3) quickly
  Rational v;
  for (index_t x = 0; x <= 10; ++x) v += pair.V(x, 0);
  const Rational z3 = Rational::parse_decimal(testing::kZeta3);
  CHECK((v - z3).abs() < R("1/1000000000"));
}

TEST_CASE("stepwise solver reports non-closure") {
  const auto alt = hg_extension_4f3_alternating(1, 2);
  const auto res = solve_multipliers_stepwise(alt, MultiplierForm::u2, 4, 9);
  REQUIRE(std::holds_alternative<SolveFailure>(res));
  CHECK(std::get<SolveFailure>(res).x == 0);
  CHECK(std::get<SolveFailure>(res).reason.find("ansatz does not close") != std::string::npos);

  const auto ok = solve_multipliers_stepwise(alt, MultiplierForm::u3, 4, 10);
  REQUIRE(std::holds_alternative<MultiplierData>(ok));
  CHECK(check_pair_grid(pair_from_multipliers(alt, std::get<MultiplierData>(ok)), 4, 6).holds);

  // a basic extension with t != cd/(abq) does not fit u1
  const auto free_t = bhg_extension_3phi2(sample(), R("1/3"));
  const auto bad = solve_multipliers_stepwise(free_t, MultiplierForm::u1, 3, 6);
  REQUIRE(std::holds_alternative<SolveFailure>(bad));
  CHECK(std::get<SolveFailure>(bad).reason.find("ansatz does not close") != std::string::npos);
}

TEST_CASE("stepwise solver argument checks") {
  const auto F = hg_extension_4f3(1, 0, 2);
  CHECK_THROWS_AS(solve_multipliers_stepwise(F, MultiplierForm::u1, 3, 6), DomainError);
  CHECK_THROWS_AS(solve_multipliers_stepwise(F, MultiplierForm::u2, 3, 6), DomainError);
  CHECK(unknowns_per_step(MultiplierForm::u1) == 3);
  CHECK(unknowns_per_step(MultiplierForm::u2) == 5);
  CHECK(unknowns_per_step(MultiplierForm::u3) == 6);
  CHECK(parse_form("u3") == MultiplierForm::u3);
  CHECK_THROWS_AS(parse_form("u4"), DomainError);
}

TEST_CASE("underdetermined steps are reported") {
  // F vanishing identically leaves every unknown free
  TermExtension zero{[](index_t, index_t) { return Rational(0); }, "0", std::nullopt};
  const auto res = solve_multipliers_stepwise(zero, MultiplierForm::u2, 2, 9);
  REQUIRE(std::holds_alternative<SolveFailure>(res));
  CHECK(std::get<SolveFailure>(res).reason.find("underdetermined") != std::string::npos);
}

TEST_CASE("remainder diagnostics") {
  std::vector<hg::TermSequence> zeros(3, hg::TermSequence([](index_t) { return Rational(0); }, nullptr, 0));
  for (const auto& r : remainder_diagnostics(zeros, 5, 2, 20)) CHECK(r == Rational(0));

  std::vector<hg::TermSequence> geo{hg::term_sequence(hg::HGSpec{{1}, {}, R("1/2")})};
  const auto est = remainder_diagnostics(geo, 6, 0, 40);
  for (index_t m = 0; m <= 6; ++m) {
    const Rational exact = Rational(2) * R("1/2").pow(static_cast<long>(m));
    CHECK(est[m] < exact);
    CHECK(exact - est[m] == Rational(2) * R("1/2").pow(41));
  }

  const Markov3Phi2 mk(sample());
  const auto rows = pair_difference_rows(mk.pair(), 4);
  const auto r = remainder_diagnostics(rows, 6, 4, 12);
  for (index_t m = 1; m <= 6; ++m) CHECK(r[m].abs() < r[m - 1].abs());
}
