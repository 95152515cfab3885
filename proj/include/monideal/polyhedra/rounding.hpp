#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/rational.hpp"
#include "monideal/polyhedra/simplex.hpp"

namespace monideal {

/// Cost model: the check visits prod(box_k + 1) cells; each costs one
/// dynamic-programming update over the q generators plus one exact simplex
/// on a d x q tableau.
struct RoundingLimits {
  std::uint64_t max_cells = 2'000'000;
};

struct RoundingCell {
  ExponentVector w;
  Integer integer_optimum;  // max <y,1> over y in N^q with A y <= w
  Rational lp_optimum;      // same over y in R^q_{>=0}
};

struct RoundingVerdict {
  bool holds = true;
  std::uint64_t cells_checked = 0;
  std::optional<RoundingCell> violation;  // first violating w in scan order
};

/// Optimum of the LP relaxation  max <y,1>  s.t.  A y <= w, y >= 0, where the
/// columns of A are the generator exponents.
inline Rational rounding_lp_optimum(const MonomialIdeal& ideal, const ExponentVector& w) {
  const std::size_t d = ideal.dim(), q = ideal.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(q));
  std::vector<Rational> b(d), c(q, Rational(1));
  for (std::size_t k = 0; k < d; ++k) {
    b[k] = Rational(w[k]);
    for (std::size_t i = 0; i < q; ++i) a[k][i] = Rational(ideal[i][k]);
  }
  auto sol = maximize_nonneg(a, b, c);
  if (!sol) throw InvalidArgument("integer rounding LP is unbounded (ideal is the unit ideal)");
  return sol->value;
}

/// Desk check of the integer rounding property on the box [0, box].
///
/// Integer optima for the whole box come from one unbounded-knapsack pass:
/// opt(w) = max(0, 1 + opt(w - v_i) over generators v_i <= w).
inline RoundingVerdict integer_rounding_check(const MonomialIdeal& ideal, const ExponentVector& box,
                                              const RoundingLimits& limits = {}) {
  if (box.dim() != ideal.dim()) throw DimensionMismatch("rounding box dimension does not match ideal");
  if (!ideal.is_zero_dimensional()) throw NotZeroDimensional("integer rounding check needs a zero-dimensional ideal");
  if (ideal.is_unit()) throw InvalidArgument("integer rounding check is unbounded for the unit ideal");

  const std::size_t d = ideal.dim();
  std::vector<std::uint64_t> stride(d);
  std::uint64_t cells = 1;
  for (std::size_t k = 0; k < d; ++k) {
    stride[k] = cells;
    cells *= static_cast<std::uint64_t>(box[k] + 1);
    if (cells > limits.max_cells) throw ResourceExceeded("integer rounding box exceeds the configured cell ceiling");
  }

  std::vector<std::int64_t> opt(cells, 0);
  RoundingVerdict verdict;
  std::vector<Exponent> cur(d, 0);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    if (idx > 0) {
      std::size_t k = 0;
      while (cur[k] == box[k]) cur[k++] = 0;
      ++cur[k];
    }
    std::int64_t best = 0;
    for (const auto& g : ideal.generators()) {
      bool fits = true;
      std::uint64_t off = 0;
      for (std::size_t k = 0; k < d && fits; ++k) {
        if (g[k] > cur[k]) fits = false;
        else off += static_cast<std::uint64_t>(g[k]) * stride[k];
      }
      if (fits) best = std::max(best, 1 + opt[idx - off]);
    }
    opt[idx] = best;

    ExponentVector w(cur);
    Rational lp = rounding_lp_optimum(ideal, w);
    ++verdict.cells_checked;
    if (floor_of(lp) != Integer(best)) {
      verdict.holds = false;
      verdict.violation = RoundingCell{w, Integer(best), lp};
      break;
    }
  }
  return verdict;
}

}  // namespace monideal
