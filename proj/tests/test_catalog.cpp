#include <doctest.h>

#include "markovwz/catalog.hpp"
#include "markovwz/markov.hpp"
#include "markovwz/report.hpp"
#include "support.hpp"

using namespace markovwz;
using namespace markovwz::catalog;
using testing::R;

namespace {

// Reference values to 60 digits, from an independent mpmath run.
const char* kEta2 = "0.822467033424113218236207583323012594609474950603399218867779";
const char* kEta3 = "0.901542677369695714049803621133587493073739719255374161344204";
const char* kHurwitzHalf = "8.4143983221171599977981671305801499353549040463834921725459";
const char* kHurwitzThird = "27.5610611997008037762278779774075092845420953130148810828645";
const char* kQphi = "1.40549551661017831850426227310525820387492980998963765340539";
const char* kKummer = "8.98355528662009329726515395650100079087236603954639298451786";

Rational ref(const char* s) { return Rational::parse_decimal(s); }

Rational partial(const FormulaEntry& e, index_t n) {
  Rational s = e.offset;
  for (const auto& t : e.terms.prefix(n)) s += t;
  return s;
}

}  // namespace

TEST_CASE("first terms of the zeta(3) entries") {
  const auto ap = entry_apery();
  CHECK(ap.terms.first() == 1);
  CHECK(ap.terms.term(1) == R("5/4"));
  CHECK(ap.terms.term(2) == R("-5/96"));
  CHECK(partial(ap, 2) == R("115/96"));
  CHECK(ap.ratio_bound->rho == R("1/4"));
  CHECK(ap.alternating);

  const auto mh = entry_markov_hurwitz(1);
  CHECK(mh.terms.first() == 0);
  CHECK(mh.terms.term(0) == R("5/4"));
  CHECK(mh.terms.term(1) == R("-5/96"));
  CHECK(mh.ratio_bound->rho == R("1/4"));

  const auto r27 = entry_ratio27_zeta3();
  CHECK(r27.terms.term(1) == R("29/24"));
  CHECK(r27.terms.term(2) == R("-11/1728"));
  CHECK(r27.ratio_bound->rho == R("1/27"));

  const auto az = entry_az_zeta3();
  CHECK(az.terms.term(0) == R("77/64"));
  CHECK(az.terms.term(1) == R("-133/124416"));
  CHECK(az.ratio_bound->rho == R("1/1024"));
}

TEST_CASE("first terms of the zeta(2) and slow entries") {
  const auto z2 = entry_zeta2_27();
  CHECK(z2.offset == R("5/3"));
  CHECK(z2.terms.term(1) == R("-83/3780"));
  CHECK(z2.terms.term(2) == Rational(27) * R("55/624") / Rational(10395));

  const auto d3 = entry_direct(DirectKind::zeta3);
  CHECK(partial(d3, 2) == R("9/8"));
  CHECK(d3.slow);
  CHECK_FALSE(d3.geometric());
  const auto e3 = entry_direct(DirectKind::eta3);
  CHECK(e3.terms.term(1) == Rational(1));
  CHECK(e3.terms.term(2) == R("-1/8"));

  const auto k = entry_kummer();
  CHECK(k.terms.term(0) == Rational(1));
  CHECK(k.terms.term(1) == R("729/1000"));
  CHECK(Rational(1) - k.terms.ratio(1000) < R("1/500"));
}

TEST_CASE("termwise specialization of the Hurwitz formula") {
  const auto mh = entry_markov_hurwitz(1);
  const auto ap = entry_apery();
  for (index_t n = 0; n <= 32; ++n) CHECK(mh.terms.term(n) == ap.terms.term(n + 1));
}

TEST_CASE("quoted asymptotic ratios") {
  for (const auto& [e, q] : {std::pair{entry_apery(), R("1/4")}, std::pair{entry_ratio27_zeta3(), R("1/27")},
                             std::pair{entry_az_zeta3(), R("1/1024")}}) {
    REQUIRE(e.asymptotic_ratio);
    CHECK(*e.asymptotic_ratio == q);
    const Rational r = e.terms.ratio(32).abs();
    CHECK((r - q).abs() <= q / 4);
  }
}

TEST_CASE("one-term enclosure") {
  const auto r = evaluate(entry_apery(), 1);
  CHECK(r.partial_sum == R("5/4"));
  CHECK(r.enclosure.lower() == R("5/4") - R("5/96"));
  CHECK(r.enclosure.upper() == R("5/4") + R("5/96"));
  CHECK(r.enclosure.contains(ref(testing::kZeta3)));
  CHECK(r.digits_proven == 0);
  CHECK_THROWS_AS(evaluate(entry_apery(), 0), DomainError);
}

TEST_CASE("alternating entries use the tighter bound") {
  const auto e = entry_apery();
  const auto r = evaluate(e, 10);
  CHECK(r.enclosure.width() == Rational(2) * e.terms.term(11).abs());
  const auto w = evaluate(entry_direct(DirectKind::eta2), 10);
  CHECK(w.enclosure.width() == entry_direct(DirectKind::eta2).terms.term(11).abs());
}

TEST_CASE("thirteen terms of the 1/27 series give twenty digits") {
  // the reference rounded half-even to 20 digits ends in ...540
  const auto r = evaluate(entry_ratio27_zeta3(), 13, 20);
  CHECK(r.digits_proven >= 20);
  CHECK(r.rendering.str() == "1.20205690315959428540");
  // zeta(3) sits 2.6e-21 below the truncation step at ...28540, so
  // truncated digits stop earlier but stay a prefix of the literal digits
  const auto t = evaluate(entry_ratio27_zeta3(), 13, 20, Rounding::truncate);
  CHECK(t.digits_proven == 18);
  CHECK(std::string(testing::kZeta3Printed).rfind(t.rendering.str(), 0) == 0);
  CHECK(terms_needed(entry_ratio27_zeta3(), 20) <= 13);
}

TEST_CASE("33 digits from 50 terms") {
  CHECK(terms_needed(entry_apery(), 33) == 50);
  for (const auto& e : {entry_apery(), entry_markov_hurwitz(1)}) {
    const auto r = evaluate(e, 50, 33);
    CHECK(r.digits_proven == 33);
    CHECK(r.rendering.str() == testing::kZeta3Printed);
  }
  CHECK(terms_needed(entry_apery(), 0) == 1);
}

TEST_CASE("terms_needed is minimal") {
  for (const auto& e : {entry_apery(), entry_az_zeta3(), entry_zeta2_27()}) {
    for (std::size_t d : {5u, 17u, 40u}) {
      const index_t n = terms_needed(e, d);
      CHECK(evaluate(e, n, d).digits_proven >= d);
      if (n > 1) CHECK(evaluate(e, n - 1, d).digits_proven < d);
    }
  }
  CHECK_THROWS_WITH(terms_needed(entry_kummer(), 3), "no geometric bound");
  CHECK_THROWS_AS(terms_needed(entry_direct(DirectKind::zeta2), 3), DomainError);
}

TEST_CASE("ratio bound violations are caught") {
  auto e = entry_apery();
  e.ratio_bound->rho = R("1/5");
  const auto bad = first_ratio_violation(e, 64);
  REQUIRE(bad);
  CHECK(e.terms.ratio(*bad).abs() > R("1/5"));
  for (index_t n = 1; n < *bad; ++n) CHECK(e.terms.ratio(n).abs() <= R("1/5"));
  CHECK_THROWS_AS(evaluate(e, 5), EvaluationError);
  CHECK_FALSE(first_ratio_violation(entry_apery(), 200));
  CHECK(max_ratio(entry_apery().terms, 1, 40) < R("1/4"));
}

// Counts stay low enough that the enclosures are wider than the 60-digit references' error.
TEST_CASE("every geometric entry encloses its reference value") {
  const Rational z3 = ref(testing::kZeta3);
  const Rational z2 = ref(testing::kZeta2);
  for (const auto& e : entries_for_constant("zeta3")) {
    if (!e.geometric()) continue;
    for (index_t n : {1, 2, 5, 12}) CHECK(evaluate(e, n).enclosure.contains(z3));
  }
  for (const auto& e : entries_for_constant("zeta2")) {
    if (!e.geometric()) continue;
    for (index_t n : {1, 2, 5, 12}) CHECK(evaluate(e, n).enclosure.contains(z2));
  }
}

TEST_CASE("direct summation encloses the reference values") {
  const Rational z3 = ref(testing::kZeta3);
  const Rational z2 = ref(testing::kZeta2);
  for (auto tail : {DirectTail::integral, DirectTail::euler_maclaurin}) {
    for (index_t n : {1, 10, 100}) {
      CHECK(evaluate(entry_direct(DirectKind::zeta3, 1, tail), n).enclosure.contains(z3));
      CHECK(evaluate(entry_direct(DirectKind::zeta2, 1, tail), n).enclosure.contains(z2));
    }
  }
  for (index_t n : {1, 10, 101}) {
    CHECK(evaluate(entry_direct(DirectKind::eta2), n).enclosure.contains(ref(kEta2)));
    CHECK(evaluate(entry_direct(DirectKind::eta3), n).enclosure.contains(ref(kEta3)));
  }
  const auto h = evaluate(entry_direct(DirectKind::hurwitz3, R("1/2")), 50);
  CHECK(h.enclosure.contains(ref(kHurwitzHalf)));
  // the integral bound alone is far from 20 digits at 200 terms
  CHECK(evaluate(entry_direct(DirectKind::zeta2, 1, DirectTail::integral), 200).digits_proven < 5);
  CHECK(evaluate(entry_direct(DirectKind::zeta2), 200).digits_proven >= 20);
}

TEST_CASE("Hurwitz zeta(3,a) agrees across formulas") {
  for (const auto& [a, value] : {std::pair{R("1/2"), kHurwitzHalf}, std::pair{R("1/3"), kHurwitzThird}}) {
    const auto m = entry_markov_hurwitz(a);
    const auto r = evaluate(m, terms_needed(m, 25), 25);
    CHECK(r.enclosure.contains(ref(value)));
    CHECK(r.digits_proven >= 25);
    const auto d = evaluate(entry_direct(DirectKind::hurwitz3, a), 200);
    CHECK(d.enclosure.intersects(r.enclosure));
  }
}

TEST_CASE("Hurwitz parameter validation") {
  CHECK_THROWS_AS(entry_markov_hurwitz(0), DomainError);
  CHECK_THROWS_AS(entry_markov_hurwitz(-2), DomainError);
  CHECK_NOTHROW(entry_markov_hurwitz(R("-1/2")));
  CHECK_THROWS_AS(entry_direct(DirectKind::hurwitz3, 0), DomainError);
}

TEST_CASE("3phi2 sum directly and through the transformed series") {
  const Rational a = R("1/3"), b = R("1/5"), c = R("1/7"), d = R("1/11"), q = R("1/2");
  const auto dir = entry_qphi_direct(a, b, c, d, q);
  const auto tr = entry_qphi_transformed(a, b, c, d, q);
  const auto rd = evaluate(dir, terms_needed(dir, 20), 20);
  const auto rt = evaluate(tr, terms_needed(tr, 20), 20);
  CHECK(rd.digits_proven >= 20);
  CHECK(rt.digits_proven >= 20);
  CHECK(rd.rendering.str() == rt.rendering.str());
  CHECK(rd.enclosure.contains(ref(kQphi)));
  CHECK(rt.enclosure.contains(ref(kQphi)));
  CHECK(rt.terms_used < rd.terms_used);

  const markov::Markov3Phi2 m({a, b, c, d, q});
  for (index_t n = 0; n < 10; ++n) {
    CHECK(dir.terms.term(n) == m.series_term(n));
    CHECK(tr.terms.term(n) == m.V0(n));
  }
}

TEST_CASE("a terminating transformed series gives a point enclosure") {
  // c = a makes (c/a;q)_x vanish for x >= 1; t = 1/5
  const Rational a = R("1/3"), b = R("1/5"), d = R("1/50"), q = R("1/2");
  const auto tr = entry_qphi_transformed(a, b, a, d, q);
  const auto r = evaluate(tr, 1);
  CHECK(r.enclosure.width() == Rational(0));
  const markov::Markov3Phi2 m({a, b, a, d, q});
  CHECK(r.partial_sum == m.V0(0));
  const auto dir = entry_qphi_direct(a, b, a, d, q);
  CHECK(evaluate(dir, terms_needed(dir, 20)).enclosure.contains(m.V0(0)));
}

TEST_CASE("Kummer's slow series") {
  const auto k = entry_kummer();
  const auto r = evaluate(k, 400);
  CHECK(r.enclosure.contains(ref(kKummer)));
  CHECK(r.enclosure.lower() == r.partial_sum);
  CHECK(r.digits_proven < 3);
}

TEST_CASE("Bernoulli numbers and the Euler-Maclaurin tail") {
  const auto B = bernoulli_numbers(12);
  CHECK(B[0] == Rational(1));
  CHECK(B[1] == R("-1/2"));
  CHECK(B[2] == R("1/6"));
  CHECK(B[3] == Rational(0));
  CHECK(B[4] == R("-1/30"));
  CHECK(B[12] == R("-691/2730"));

  Rational head;
  for (index_t n = 1; n < 10; ++n) head += Rational(static_cast<long>(n)).pow(-3);
  const auto tail = euler_maclaurin_tail(3, 0, 10);
  CHECK(tail.contains(ref(testing::kZeta3) - head));
  CHECK(tail.width() < R("1/100000000000000000000"));
  CHECK_THROWS_AS(euler_maclaurin_tail(1, 0, 10), DomainError);
  CHECK_THROWS_AS(euler_maclaurin_tail(2, -10, 10), DomainError);
  CHECK(parse_direct_tail("integral") == DirectTail::integral);
  CHECK(to_string(DirectTail::euler_maclaurin) == "euler-maclaurin");
  CHECK_THROWS_AS(parse_direct_tail("none"), std::invalid_argument);
}

TEST_CASE("registry and entry construction") {
  CHECK(registry().size() == 14);
  for (const auto& info : registry()) {
    const auto e = make_entry(info.id);
    CHECK(e.id == info.id);
  }
  CHECK(make_entry("markov-hurwitz", {{"a", R("1/2")}}).terms.term(0) == entry_markov_hurwitz(R("1/2")).terms.term(0));
  CHECK_THROWS_AS(make_entry("nosuch"), DomainError);
  CHECK_THROWS_AS(make_entry("apery", {{"a", 1}}), DomainError);
  CHECK(entries_for_constant("zeta3").size() == 5);
  CHECK(entries_for_constant("zeta2").size() == 3);
  CHECK_THROWS_AS(entries_for_constant("pi"), DomainError);
  CHECK_THROWS_AS(entry_schellbach(1, 1, 1, 1), DomainError);
}

TEST_CASE("report records round trip through JSON and CSV") {
  std::vector<ReportRecord> recs;
  for (const auto& e : entries_for_constant("zeta3")) recs.push_back(to_record(evaluate(e, 12, 0)));
  recs.push_back(to_record(evaluate(entry_kummer(), 20, 0)));
  CHECK_FALSE(recs.back().ratio_bound);
  CHECK(records_from_json(records_to_json(recs)) == recs);
  CHECK(records_from_csv(records_to_csv(recs)) == recs);
  CHECK(records_to_csv(recs).rfind(csv_header(), 0) == 0);

  ReportRecord odd = recs.front();
  odd.id = "x,\"y\"";
  odd.rendering = "a\"b";
  CHECK(records_from_csv(records_to_csv({odd})).front() == odd);
  CHECK_THROWS_AS(records_from_csv("bad header\n"), ParseError);
  CHECK_THROWS_AS(records_from_csv(csv_header() + "\n1,apery\n"), ParseError);
  CHECK_THROWS(records_from_json("{\"schema\":\"2\",\"reports\":[]}"));
}
