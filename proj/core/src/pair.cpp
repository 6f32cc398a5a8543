#include "markovwz/markov.hpp"

namespace markovwz::markov {

namespace {

Rational at(const GridFunction& f, index_t x, index_t z) {
  try {
    return f(x, z);
  } catch (const DivisionByZero&) {
    throw EvaluationError(f.label + " undefined at (x,z) = (" + std::to_string(x) + "," + std::to_string(z) +
                          "): division by zero");
  } catch (const EvaluationError& e) {
    throw EvaluationError(f.label + " undefined at (x,z) = (" + std::to_string(x) + "," + std::to_string(z) +
                          "): " + e.what());
  }
}

void require_positive(index_t i, index_t j) {
  if (i < 1 || j < 1) throw DomainError("rectangle sides i and j must be >= 1");
}

}  // namespace

PairCheck check_pair_condition(const MarkovPair& pair, index_t x, index_t z) {
  const Rational residual =
      (at(pair.U, x, z) - at(pair.U, x + 1, z)) - (at(pair.V, x, z) - at(pair.V, x, z + 1));
  return {residual.is_zero(), residual};
}

GridVerdict check_pair_grid(const MarkovPair& pair, index_t x_max, index_t z_max) {
  GridVerdict v;
  for (index_t x = 0; x <= x_max; ++x) {
    for (index_t z = 0; z <= z_max; ++z) {
      const PairCheck c = check_pair_condition(pair, x, z);
      ++v.points_checked;
      if (!c.holds) {
        v.holds = false;
        v.first_failure = {x, z};
        v.residual = c.residual;
        return v;
      }
    }
  }
  return v;
}

RectangleSums green_rectangle(const MarkovPair& pair, index_t i, index_t j) {
  require_positive(i, j);
  RectangleSums s;
  for (index_t z = 0; z < j; ++z) s.lhs += at(pair.U, 0, z) - at(pair.U, i, z);
  for (index_t x = 0; x < i; ++x) s.rhs += at(pair.V, x, 0) - at(pair.V, x, j);
  return s;
}

TransformCheck transform_check(const MarkovPair& pair, index_t i, index_t j) {
  require_positive(i, j);
  TransformCheck t;
  for (index_t z = 0; z < j; ++z) {
    t.u_sum += at(pair.U, 0, z);
    t.u_edge += at(pair.U, i, z);
  }
  for (index_t x = 0; x < i; ++x) {
    t.v_sum += at(pair.V, x, 0);
    t.v_edge += at(pair.V, x, j);
  }
  return t;
}

}  // namespace markovwz::markov
