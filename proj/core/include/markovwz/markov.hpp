#pragma once

// Markov's series transformation.
//
// A Markov pair (U, V) on the lattice x, z >= 0 satisfies
//
//   U(x,z) - U(x+1,z) = V(x,z) - V(x,z+1),
//
// so boundary sums of the rectangle [0,i) x [0,j) agree (discrete Green
// identity). When the far edges vanish in the limit, sum_z U(0,z) equals
// sum_x V(x,0), and the second series usually converges much faster.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "markovwz/hgterm.hpp"
#include "markovwz/rational.hpp"

namespace markovwz::markov {

using GridEval = std::function<Rational(index_t x, index_t z)>;

struct GridFunction {
  GridEval eval;
  std::string label;

  Rational operator()(index_t x, index_t z) const { return eval(x, z); }
};

/// F(x,z) such that F(0,z) is the z-th term of the series being transformed.
struct TermExtension {
  GridEval eval;
  std::string label;
  /// Set for basic hypergeometric extensions; required by form u1.
  std::optional<Rational> base_q;

  Rational operator()(index_t x, index_t z) const { return eval(x, z); }
};

struct MarkovPair {
  GridFunction U;
  GridFunction V;
  std::string provenance;
};

// ---------------------------------------------------------------------------
// Pair checks

struct PairCheck {
  bool holds = false;
  Rational residual;
};

/// residual = (U(x,z) - U(x+1,z)) - (V(x,z) - V(x,z+1)).
PairCheck check_pair_condition(const MarkovPair& pair, index_t x, index_t z);

struct GridVerdict {
  bool holds = true;
  std::size_t points_checked = 0;
  std::optional<std::pair<index_t, index_t>> first_failure;
  Rational residual;
};

/// check_pair_condition at every (x,z) in [0,x_max] x [0,z_max].
GridVerdict check_pair_grid(const MarkovPair& pair, index_t x_max, index_t z_max);

struct RectangleSums {
  Rational lhs;  // sum_{z<j} U(0,z) - sum_{z<j} U(i,z)
  Rational rhs;  // sum_{x<i} V(x,0) - sum_{x<i} V(x,j)
};

RectangleSums green_rectangle(const MarkovPair& pair, index_t i, index_t j);

struct TransformCheck {
  Rational u_sum;   // sum_{z<j} U(0,z)
  Rational v_sum;   // sum_{x<i} V(x,0)
  Rational u_edge;  // sum_{z<j} U(i,z)
  Rational v_edge;  // sum_{x<i} V(x,j)

  Rational discrepancy() const { return (u_sum - v_sum).abs(); }
  /// |v_edge - u_edge|; equals discrepancy() whenever the pair condition holds.
  Rational edge_gap() const { return (v_edge - u_edge).abs(); }
};

TransformCheck transform_check(const MarkovPair& pair, index_t i, index_t j);

// ---------------------------------------------------------------------------
// WZ certificates

/// P(x) F(x,z) + Q(x) F(x+1,z) = R(x,z+1) F(x,z+1) - R(x,z) F(x,z).
struct Certificate {
  TermExtension F;
  std::function<Rational(index_t)> P;
  std::function<Rational(index_t)> Q;
  GridEval R;
  std::string label;
};

/// Left side minus right side of the certificate identity at (x,z).
Rational certificate_residual(const Certificate& cert, index_t x, index_t z);

/// Turns a certificate into a pair with A(0) = 1.
///
/// Multiplying the certificate identity by Phi(x) and matching it against
/// A(x+1) F(x+1,z) - A(x) F(x,z) = M(x,z+1) F(x,z+1) - M(x,z) F(x,z) gives
/// A(x) = -Phi P, A(x+1) = Phi Q, M = Phi R, hence
///
///   A(x+1)/A(x) = -Q(x)/P(x),   M(x,z)/A(x) = -R(x,z)/P(x).
///
/// U = A F and V = M F. A is tabulated for x <= x_cap + 1; evaluating past
/// the cap throws DomainError. P(x) = 0 throws "certificate singular at x".
MarkovPair pair_from_certificate(const Certificate& cert, index_t x_cap = 64);

/// Multiplier tables implied by a certificate (A(0..x_cap+1)).
std::vector<Rational> certificate_multipliers(const Certificate& cert, index_t x_cap);

/// A certificate depending on a parameter tuple.
struct CertificateFamily {
  std::string name;
  std::vector<std::string> parameter_names;
  std::function<Certificate(std::span<const Rational>)> instantiate;
  /// Draws an admissible random parameter tuple.
  std::function<std::vector<Rational>(std::mt19937_64&)> sample;
};

struct CertificateFailure {
  std::vector<Rational> params;
  index_t x = 0;
  index_t z = 0;
  Rational residual;
};

struct CertificateVerdict {
  bool passed = true;
  std::size_t points_checked = 0;
  std::optional<CertificateFailure> first_failure;
};

/// Exhaustive check on [0,x_max] x [0,z_max] at `params`, then one check per
/// random instantiation at a random grid point (and the origin). The random
/// stream is std::mt19937_64 seeded with `seed`.
CertificateVerdict verify_certificate(const CertificateFamily& family, std::span<const Rational> params,
                                      index_t x_max, index_t z_max, std::size_t random_points,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// The 3phi2 example

struct QParams {
  Rational a, b, c, d, q;
};

/// Markov's treatment of sum_z (a,b;q)_z/(c,d;q)_z t^z, t = cd/(abq).
///
/// Closed forms, with A(0) = 1:
///   F(x,z)  = (a,b;q)_z t^z / (c,d;q)_{x+z} * (cd q^{2z})^x q^{x(x-1)}
///   A(x)    = (c/a, c/b, d/a, d/b; q)_x / (q^x (t;q)_{2x})
///   B(x)    = A(x) / (1 - t q^{2x})
///   C(x)    = A(x) t q^{2x} ((c+d) q^x - (a+b)) / ((1 - t q^{2x})(1 - t q^{2x+1}))
///   M(x,z)  = B(x) + C(x) q^z
///   V(x,0)  = (c/a,c/b,d/a,d/b;q)_x/(c,d;q)_x (cd)^x q^{x(x-2)}
///             * (1 - t q^{2x}(a+b+q) + t q^{3x}(c+d)) / (t;q)_{2x+2}
class Markov3Phi2 {
 public:
  /// Requires nonzero a, b, c, d; 0 < |q| < 1; |t| < 1.
  explicit Markov3Phi2(QParams p);

  const QParams& params() const { return p_; }
  const Rational& t() const { return t_; }

  Rational F(index_t x, index_t z) const;
  Rational A(index_t x) const;
  Rational B(index_t x) const;
  Rational C(index_t x) const;
  Rational M(index_t x, index_t z) const;
  /// M(x,0)/A(x) in closed form.
  Rational M0_over_A(index_t x) const;
  Rational M0(index_t x) const { return M(x, 0); }
  /// General term of the transformed series, closed form.
  Rational V0(index_t x) const;
  /// z-th term of the original series.
  Rational series_term(index_t z) const;

  TermExtension extension() const;
  /// U = A F, V = (B + C q^z) F. A nonzero `perturb_c` is added to every C(x).
  MarkovPair pair(const Rational& perturb_c = 0) const;

  /// Certificate with P(x) = t q^{2x} - 1, Q(x) from the recurrence for A,
  /// R(x,z) = 1 + t q^{2x+z} ((c+d) q^x - (a+b)) / (1 - t q^{2x+1}).
  Certificate certificate() const;

  /// Original series as a BHG spec: upper {a, b, q}, lower {c, d}, argument t.
  hg::BHGSpec series_spec() const;

  /// Largest x or z accepted by the evaluators.
  static constexpr index_t kIndexCap = 4096;

 private:
  Rational qpow(long e) const { return p_.q.pow(e); }
  Rational denominator_1mtq(index_t e) const;  // 1 - t q^e, throws if zero
  void check_index(index_t x, index_t z) const;

  QParams p_;
  Rational t_;
};

CertificateFamily markov_3phi2_certificate_family();

/// The four coefficient equations of the pair condition after removing the common
/// factor, evaluated on given values. Entries are lhs - rhs:
///   [0] A_x - B_x (1 - t q^{2x})
///   [1] -A_x (c+d) q^x - (C_x - B_x (c+d) q^x + B_x (a+b) q^{2x} t - C_x q^{2x+1} t)
///   [2] (A_x - A_{x+1}) cd q^{2x} - (B_x (cd - ab t) q^{2x} + C_x ((a+b) q^{2x+1} t - (c+d) q^x))
///   [3] -C_x (cd q^{2x} - ab q^{2x+1} t)
std::array<Rational, 4> coefficient_residuals(const QParams& p, index_t x, const Rational& A_x,
                                              const Rational& A_next, const Rational& B_x,
                                              const Rational& C_x);

/// Residuals with the closed forms substituted.
std::array<Rational, 4> coefficient_residuals(const Markov3Phi2& m, index_t x);

struct MappedParams {
  Rational a, b, c, d, q, t;
};

/// From Markov's (r, r', s, s', bq) with |bq| > 1: a = 1/r, b = 1/r', c = 1/s,
/// d = 1/s', q = 1/bq, t = r r' bq / (s s').
MappedParams markov_param_map(const Rational& r, const Rational& r2, const Rational& s, const Rational& s2,
                              const Rational& bq);

/// n-th term of the series as Markov wrote it:
/// prod_{k<n} (r bq^k - 1)(r' bq^k - 1) / ((s bq^k - 1)(s' bq^k - 1)) * bq^n.
Rational markov_original_term(const Rational& r, const Rational& r2, const Rational& s, const Rational& s2,
                              const Rational& bq, index_t n);

// ---------------------------------------------------------------------------
// Schellbach's formula (q -> 1 limit)

class SchellbachParams {
 public:
  /// Requires t = c + d - a - b - 1 > 0, c and d not nonpositive integers,
  /// and c-a, c-b, d-a, d-b not nonpositive integers.
  SchellbachParams(Rational a, Rational b, Rational c, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Rational& t() const { return t_; }

 private:
  Rational a_, b_, c_, d_, t_;
};

/// p(a,b,c,d,x) = (c+d-a-1+2x)(c+d-b-1+2x) - (c-1+x)(d-1+x).
Rational schellbach_polynomial(const SchellbachParams& p, index_t x);

/// (c-a, c-b, d-a, d-b)_x p(a,b,c,d,x) / ((c,d)_x (t)_{2x+2}).
Rational schellbach_term(const SchellbachParams& p, index_t x);

/// Closed-form ratio schellbach_term(x+1)/schellbach_term(x).
Rational schellbach_ratio(const SchellbachParams& p, index_t x);

hg::TermSequence schellbach_sequence(const SchellbachParams& p);

/// 3F2(a, b, 1; c, d; 1) as an HG spec.
hg::HGSpec schellbach_direct_spec(const SchellbachParams& p);

/// term(x) * 4^x * x^(a+b-1/2) as a double, computed from logarithms of the
/// exact term. Tends to a constant; for trend inspection only. Requires x >= 2.
double schellbach_asymptotics(const SchellbachParams& p, index_t x);

// ---------------------------------------------------------------------------
// Stepwise multiplier solver

enum class MultiplierForm {
  u1,  // U = A F,               M = B + C q^z
  u2,  // U = (A + B z) F,       M = C + D z + E z^2
  u3,  // U = (A + B z + C z^2) F, M = F + G z + H z^2
};

std::string to_string(MultiplierForm f);
MultiplierForm parse_form(std::string_view text);

/// Unknowns solved at each step: next U coefficients plus M coefficients.
std::size_t unknowns_per_step(MultiplierForm f);

struct MultiplierData {
  MultiplierForm form = MultiplierForm::u1;
  /// u_coeffs[x] = coefficients of the U multiplier at x, for x = 0..x_max+1.
  std::vector<std::vector<Rational>> u_coeffs;
  /// m_coeffs[x] = coefficients of M at x, for x = 0..x_max.
  std::vector<std::vector<Rational>> m_coeffs;
  std::optional<Rational> q;

  index_t x_max() const { return m_coeffs.empty() ? 0 : m_coeffs.size() - 1; }
  const Rational& A(index_t x) const { return u_coeffs.at(x).at(0); }
  Rational U_multiplier(index_t x, index_t z) const;
  Rational M(index_t x, index_t z) const;
};

struct SolveFailure {
  index_t x = 0;
  std::string reason;  // "ansatz underdetermined at x" or "ansatz does not close"
};

using SolveResult = std::variant<MultiplierData, SolveFailure>;

/// Solves the pair condition step by step in x with the chosen ansatz.
///
/// At x = 0 the U multiplier is normalized to A = 1 with the higher
/// coefficients zero. Step x samples z = 0..z_samples-1, solves the exact
/// linear system for the step unknowns, and checks every sample. Requires
/// z_samples >= unknowns_per_step(form) + 2. Form u1 needs extension.base_q.
SolveResult solve_multipliers_stepwise(const TermExtension& extension, MultiplierForm form, index_t x_max,
                                       index_t z_samples);

/// U = (sum u_k z^k) F, V = M F; valid for x <= x_max.
MarkovPair pair_from_multipliers(const TermExtension& extension, const MultiplierData& data);

/// BHG extension (a,b;q)_z t^z / (c,d;q)_{x+z} (cd q^{2z})^x q^{x(x-1)} with a free t.
TermExtension bhg_extension_3phi2(const QParams& p, const Rational& t);

/// HG extension (a, a+h, a-h)_z / (b, b+h, b-h)_{x+z} of 4F3(a,a+h,a-h,1; b,b+h,b-h).
TermExtension hg_extension_4f3(const Rational& a, const Rational& h, const Rational& b);

/// HG extension (-1)^z (a)_z^3 / (b)_{x+z}^3 of 4F3(a,a,a,1; b,b,b; -1).
TermExtension hg_extension_4f3_alternating(const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// Finite remainder diagnostics

/// R_m estimates sum_{k<=k_max} sum_{m<=n<=n_cap} a_n^(k), where row k is
/// rows[k] (indices n counted from each row's first index), m = 0..m_max.
std::vector<Rational> remainder_diagnostics(std::span<const hg::TermSequence> rows, index_t m_max,
                                            index_t k_max, index_t n_cap);

/// Rows a_n^(k) = V(n,k) - V(n,k+1) for k = 0..k_max. Row k sums to
/// U(0,k) - lim U(i,k); column n sums to V(n,0) - lim V(n,j).
std::vector<hg::TermSequence> pair_difference_rows(const MarkovPair& pair, index_t k_max);

}  // namespace markovwz::markov
