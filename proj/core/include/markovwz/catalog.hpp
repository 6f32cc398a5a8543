#pragma once

// Registry of series for zeta(2), zeta(3), Hurwitz zeta(3,a) and related sums,
// with certified tail bounds and digit-certified evaluation.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markovwz/decimal.hpp"
#include "markovwz/hgterm.hpp"
#include "markovwz/rational.hpp"

namespace markovwz::catalog {

/// |t(n+1)| <= rho |t(n)| for every n >= valid_from.
struct RatioBound {
  Rational rho;
  index_t valid_from = 0;
  /// True when the bound is established for all n >= valid_from by an
  /// explicit inequality rather than by the finite scan alone.
  bool proven_for_all = false;
};

/// Enclosure of the remainder sum_{n >= next} t(n), offset from the partial sum.
using TailEnclosure = std::function<Enclosure(index_t next, const hg::TermSequence& terms)>;

enum class DirectTail {
  integral,         // sum_{n>N} n^-3 <= 1/(2N^2), sum_{n>N} n^-2 <= 1/N
  euler_maclaurin,  // integral plus Bernoulli corrections with a signed remainder
};

std::string to_string(DirectTail t);
DirectTail parse_direct_tail(std::string_view text);

struct FormulaEntry {
  std::string id;
  /// What the series sums to, e.g. "zeta(3)".
  std::string constant;
  std::string provenance;
  hg::TermSequence terms;
  /// Added to the series, e.g. 5/3 for the 27^-k zeta(2) formula.
  Rational offset;
  std::optional<RatioBound> ratio_bound;
  /// Signs alternate strictly (checked on the scanned range).
  bool alternating = false;
  /// Remainder enclosure for entries without a geometric ratio bound.
  TailEnclosure tail;
  /// Converges slower than any geometric rate.
  bool slow = false;
  /// Quoted asymptotic ratio, for reporting.
  std::optional<Rational> asymptotic_ratio;

  bool geometric() const { return ratio_bound.has_value(); }
};

/// Verifies |t(n+1)| <= rho |t(n)| exactly for valid_from <= n <= up_to.
/// Returns the first violating n, if any.
std::optional<index_t> first_ratio_violation(const FormulaEntry& e, index_t up_to);

/// Largest |t(n+1)/t(n)| over [from, up_to].
Rational max_ratio(const hg::TermSequence& terms, index_t from, index_t up_to);

// Registration scans the ratio bound exactly up to this index.
inline constexpr index_t kRegistrationScan = 64;

/// zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (C(2n,n) n^3). Ratio 1/4.
FormulaEntry entry_apery();

/// sum_{n>=0} 1/(a+n)^3 = (1/4) sum_{n>=0} (-1)^n n!^6/(2n+1)!
///   * (5(n+1)^2 + 6(a-1)(n+1) + 2(a-1)^2) / (a(a+1)...(a+n))^4. Ratio 1/4.
FormulaEntry entry_markov_hurwitz(const Rational& a);

/// zeta(3) = (1/4) sum_{n>=1} (-1)^(n-1) (56n^2-32n+5)/((2n-1)^2 n^3) (n!)^3/(3n)!. Ratio 1/27.
FormulaEntry entry_ratio27_zeta3();

/// zeta(3) = sum_{n>=0} (-1)^n n!^10 (205n^2+250n+77) / (64 (2n+1)!^5). Ratio 2^-10.
FormulaEntry entry_az_zeta3();

/// zeta(2) = 5/3 + sum_{k>=1} (-1)^k (2k-1)!!^3/(6k-1)!! (1/(4k^2) + 5/((6k+1)(6k+3))). Ratio 1/27.
FormulaEntry entry_zeta2_27();

/// Schellbach's geometric series for 3F2(a, b, 1; c, d; 1).
FormulaEntry entry_schellbach(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

enum class DirectKind { zeta2, zeta3, eta2, eta3, hurwitz3 };

/// Plain summation: zeta(k) = sum n^-k, eta(k) = sum (-1)^(n-1) n^-k,
/// zeta(3,a) = sum_{n>=0} (a+n)^-3 (requires a > 0).
FormulaEntry entry_direct(DirectKind kind, const Rational& a = 1, DirectTail tail = DirectTail::euler_maclaurin);

/// 4F3(9/2, 9/2, 9/2, 1; 5, 5, 5; 1) read as sum ((9/2)_n/(5)_n)^3.
/// Terms decay like n^(-3/2); the tail is bounded by 2 (N + 9/2) t(N).
FormulaEntry entry_kummer();

/// sum_z (a,b;q)_z/(c,d;q)_z t^z with t = cd/(abq), summed directly.
FormulaEntry entry_qphi_direct(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                               const Rational& q);

/// The same sum through Markov's transformed terms V(x,0).
FormulaEntry entry_qphi_transformed(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                    const Rational& q);

struct EvaluationReport {
  std::string id;
  std::string constant;
  index_t terms_used = 0;
  Rational partial_sum;
  Enclosure enclosure;
  DecimalRendering rendering;
  std::size_t digits_proven = 0;
  std::optional<Rational> ratio_bound;
};

/// Sums the first n_terms terms (plus the offset) and encloses the remainder.
///
/// Geometric entries: remainder half-width |t(N+1)|/(1-rho), or |t(N+1)| for
/// alternating entries, whichever is smaller; terms between N+1 and the
/// bound's valid_from are added in absolute value. The ratio bound is
/// rescanned exactly up to max(64, 4 (N+1)) unless proven for all n.
/// requested_digits = 0 renders as many digits as the width permits.
EvaluationReport evaluate(const FormulaEntry& entry, index_t n_terms, std::size_t requested_digits = 0,
                          Rounding rounding = Rounding::half_even);

/// Smallest N with evaluate(entry, N).digits_proven >= digits. Throws
/// DomainError("no geometric bound") for non-geometric entries.
index_t terms_needed(const FormulaEntry& entry, std::size_t digits, Rounding rounding = Rounding::half_even,
                     index_t cap = 20000);

/// Parameters for parametric entries, by name ("a", "b", "c", "d", "q").
using EntryParams = std::map<std::string, Rational>;

struct EntryInfo {
  std::string id;
  std::string constant_key;  // "zeta2", "zeta3", or "" when not comparable
  std::vector<std::string> parameters;
  std::string summary;
};

/// Every registered entry id in listing order.
const std::vector<EntryInfo>& registry();

/// Builds a registered entry. Unknown ids throw DomainError.
FormulaEntry make_entry(const std::string& id, const EntryParams& params = {},
                        DirectTail tail = DirectTail::euler_maclaurin);

/// Entries that target "zeta2" or "zeta3", with default parameters.
std::vector<FormulaEntry> entries_for_constant(const std::string& constant_key,
                                               DirectTail tail = DirectTail::euler_maclaurin);

/// Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(index_t n);

/// Enclosure of sum_{n >= m} (n + shift)^-s for integer s >= 2 and
/// m + shift > 0, from Euler-Maclaurin with `order` correction terms. The
/// remainder of a completely monotone summand has the sign of, and is no
/// larger than, the first omitted correction.
Enclosure euler_maclaurin_tail(long s, const Rational& shift, index_t m, index_t order = 12);

}  // namespace markovwz::catalog
