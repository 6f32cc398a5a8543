#pragma once

#include <optional>
#include <vector>

#include "markovwz/rational.hpp"

namespace markovwz {

struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = true;
  /// Present when the system is consistent with full column rank.
  std::optional<std::vector<Rational>> x;
};

/// Exact Gauss-Jordan elimination for rows * x = rhs. Overdetermined systems
/// are fine; every row is checked for consistency.
LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace markovwz
