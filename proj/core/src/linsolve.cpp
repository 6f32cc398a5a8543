#include "markovwz/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace markovwz {

LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row count and rhs size differ");
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("ragged coefficient matrix");
  }

  LinearSolution out;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && rows[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational inv = rows[row][col].reciprocal();
    for (std::size_t c = col; c < n; ++c) rows[row][c] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  out.rank = row;
  for (std::size_t r = row; r < m; ++r) {
    if (!rhs[r].is_zero()) out.consistent = false;
  }
  if (out.consistent && out.rank == n) {
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = rhs[r];
    out.x = std::move(x);
  }
  return out;
}

}  // namespace markovwz
