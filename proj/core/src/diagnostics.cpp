#include "markovwz/markov.hpp"

namespace markovwz::markov {

std::vector<Rational> remainder_diagnostics(std::span<const hg::TermSequence> rows, index_t m_max,
                                            index_t k_max, index_t n_cap) {
  // suffix[m] accumulates sum over rows of a_n for m <= n <= n_cap
  std::vector<Rational> estimates(m_max + 1);
  const index_t row_count = std::min<index_t>(k_max + 1, rows.size());
  for (index_t k = 0; k < row_count; ++k) {
    const auto terms = rows[k].prefix(n_cap + 1);
    Rational tail;
    std::vector<Rational> suffix(n_cap + 2);
    for (index_t n = n_cap + 1; n-- > 0;) {
      tail += terms[n];
      suffix[n] = tail;
    }
    for (index_t m = 0; m <= m_max; ++m) {
      if (m <= n_cap) estimates[m] += suffix[m];
    }
  }
  return estimates;
}

std::vector<hg::TermSequence> pair_difference_rows(const MarkovPair& pair, index_t k_max) {
  std::vector<hg::TermSequence> rows;
  rows.reserve(k_max + 1);
  for (index_t k = 0; k <= k_max; ++k) {
    rows.emplace_back([V = pair.V, k](index_t n) { return V(n, k) - V(n, k + 1); }, nullptr, 0);
  }
  return rows;
}

}  // namespace markovwz::markov
