#pragma once

#include <optional>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/rational.hpp"

namespace monideal {

struct LpSolution {
  Rational value;
  std::vector<Rational> point;
};

/// Exact dense simplex for  max c.y  s.t.  A y <= b, y >= 0  with b >= 0.
///
/// The slack basis is feasible because b >= 0, so no phase one is needed.
/// Bland's rule guarantees termination. Returns nullopt when unbounded.
inline std::optional<LpSolution> maximize_nonneg(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (const auto& bi : b)
    if (bi < 0) throw InvalidArgument("simplex right-hand side must be non-negative");
  if (b.size() != m) throw DimensionMismatch("simplex: rows of A and b differ");

  // Tableau rows 0..m-1 constraints, row m objective (reduced costs, negated c).
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("simplex: row length differs from objective length");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < 0) { enter = j; break; }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return std::nullopt;

    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.value = t[m][cols - 1];
  sol.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.point[basis[i]] = t[i][cols - 1];
  return sol;
}

}  // namespace monideal
