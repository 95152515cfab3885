#pragma once

#include <cstdint>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/polyhedra/newton.hpp"

namespace monideal {

struct ClosureLimits {
  /// Ceiling on lattice points visited by the box enumeration (d >= 3).
  std::uint64_t max_box_cells = 20'000'000;
};

namespace detail {

inline void require_closure_input(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) throw InvalidArgument("power must be >= 1");
  if (!ideal.is_zero_dimensional()) throw NotZeroDimensional("closure enumeration region is unbounded");
}

/// Lattice points of m*Q in two variables: for each x the least y above the chain.
inline MonomialIdeal closure_by_chain(const NewtonPolyhedron& q, unsigned m) {
  const auto& gens = q.generators();
  Exponent max_x = 0;
  for (const auto& g : gens) max_x = std::max(max_x, g[0]);
  const Exponent x_end = detail::checked_mul(max_x, m);
  std::vector<ExponentVector> points;
  for (Exponent x = 0; x <= x_end; ++x) {
    Integer y_min = 0;
    for (const auto& f : q.facets()) {
      if (f.coeffs[1] == 0) continue;
      // coeffs[0]*x + coeffs[1]*y + m*constant >= 0 with coeffs[1] > 0.
      Rational bound = -(f.coeffs[0] * Rational(x) + f.constant * Rational(m)) / f.coeffs[1];
      Integer c = ceil_of(bound);
      if (c > y_min) y_min = c;
    }
    points.push_back(ExponentVector{x, y_min.get_si()});
  }
  return MonomialIdeal(2, std::move(points));
}

/// Enumerates the box prod [0, m * max_k] and keeps lattice points of m*Q.
inline MonomialIdeal closure_by_box(const NewtonPolyhedron& q, unsigned m, const ClosureLimits& limits) {
  const std::size_t d = q.dim();
  std::vector<Exponent> hi(d, 0);
  for (const auto& g : q.generators())
    for (std::size_t k = 0; k < d; ++k) hi[k] = std::max(hi[k], g[k]);
  std::uint64_t cells = 1;
  for (auto& h : hi) {
    h = detail::checked_mul(h, m);
    cells *= static_cast<std::uint64_t>(h + 1);
    if (cells > limits.max_box_cells) throw ResourceExceeded("closure box exceeds the configured cell ceiling");
  }
  std::vector<ExponentVector> points;
  std::vector<Exponent> cur(d, 0);
  while (true) {
    ExponentVector a(cur);
    if (q.contains_scaled(a, m)) points.push_back(std::move(a));
    std::size_t k = 0;
    while (k < d && cur[k] == hi[k]) cur[k++] = 0;
    if (k == d) break;
    ++cur[k];
  }
  return MonomialIdeal(d, std::move(points));
}

}  // namespace detail

/// Integral closure of I^m: the monomials whose exponents lie in m*Q.
inline MonomialIdeal power_closure(const MonomialIdeal& ideal, unsigned m, const ClosureLimits& limits = {}) {
  detail::require_closure_input(ideal, m);
  if (ideal.is_unit()) return ideal;
  NewtonPolyhedron q(ideal);
  return q.has_chain() ? detail::closure_by_chain(q, m) : detail::closure_by_box(q, m, limits);
}

inline MonomialIdeal integral_closure(const MonomialIdeal& ideal, const ClosureLimits& limits = {}) {
  return power_closure(ideal, 1, limits);
}

}  // namespace monideal
