#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monideal/core/staircase.hpp"
#include "monideal/polyalg/ideal_ops.hpp"
#include "monideal/rees/fiber.hpp"
#include "monideal/rees/syzygy.hpp"

namespace monideal::rees {

/// Two tests for whether the Rees ideal is generated by T*phi and the 2 x 2
/// minors of the Jacobian dual. The minor test is unconditional; the height
/// test is only meaningful when the Rees algebra is Cohen-Macaulay, which the
/// caller vouches for with a reduction-number verdict.
struct ExpectedEquations {
  bool by_minors = false;              // I_{n-2}(phi) = I_1(phi)^{n-2}
  std::int64_t fiber_minor_height = 0;  // height of I_2(B0) in k[T]
  bool by_height = false;               // that height equals n - 2
  bool hypothesis_verified = false;     // reduction number <= 1 certified
  bool routes_agree = true;             // by_minors == by_height, checked only when verified
};

/// Height of I_2(B0) in k[T1..Tn].
inline std::int64_t fiber_minor_height(const JacobianDual& d, std::size_t n, const poly::GroebnerLimits& limits = {}) {
  std::vector<Polynomial> gens;
  for (const auto& q : two_by_two_minors(d.b0))
    if (!q.value.is_zero()) gens.push_back(q.value);
  if (gens.empty()) return 0;
  const auto dim = poly::dim_quotient(gens, limits);
  return static_cast<std::int64_t>(n) - dim;
}

inline ExpectedEquations expected_equations_check(const StaircaseIdeal2& s,
                                                  const std::optional<ReductionVerdict>& reduction = std::nullopt,
                                                  const poly::GroebnerLimits& limits = {}) {
  const std::size_t n = s.size();
  const auto phi = syzygy_matrix(s);
  const auto c = content_ideal(phi);
  ExpectedEquations out;
  const MonomialIdeal content(2, {ExponentVector{c.r, 0}, ExponentVector{0, c.s}});
  if (n == 2) {
    out.by_minors = true;
  } else {
    out.by_minors = minors(phi, n - 2) == power(content, static_cast<unsigned>(n - 2));
  }
  out.fiber_minor_height = fiber_minor_height(jacobian_dual(s), n, limits);
  out.by_height = out.fiber_minor_height == static_cast<std::int64_t>(n) - 2;
  out.hypothesis_verified = reduction && reduction->bound == ReductionBound::AtMostOne && reduction->certified;
  if (out.hypothesis_verified) out.routes_agree = out.by_minors == out.by_height;
  return out;
}

enum class ReesRoute { Colon, Elimination };

inline std::string to_string(ReesRoute r) { return r == ReesRoute::Colon ? "colon" : "elimination"; }

/// Defining ideal of the Rees algebra in k[x, y, T1..Tn] (degrevlex).
///
/// Colon: (T * phi) : I, which is the whole ideal when the Rees algebra is
/// Cohen-Macaulay. Elimination: the kernel of T_i -> f_i t, computed by
/// eliminating t from (T_i - f_i t) in k[t, x, y, T]; always valid.
inline poly::GroebnerBasis rees_ideal(const StaircaseIdeal2& s, ReesRoute route, const poly::GroebnerLimits& limits = {}) {
  const std::size_t n = s.size();
  const auto ring = rees_ring(n);
  if (route == ReesRoute::Colon) return poly::ideal_colon_ideal(linear_equations(s), generator_polynomials(s, ring), limits);

  if (n + 3 > poly::kMaxVars) throw InvalidArgument("too many generators for the elimination ring");
  const auto big = TermOrder::elimination(n + 3, 1);
  const auto t = Polynomial::variable(big, 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto p = s.point(i);
    auto f = Polynomial::term(big, poly::Monomial::from({0, p[0], p[1]}));
    gens.push_back(Polynomial::variable(big, 2 + i) - f * t);
  }
  return poly::eliminate(gens, 1, limits);
}

/// Largest total degree in T1..Tn among the terms of p.
inline std::int32_t t_degree(const Polynomial& p) {
  std::int32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.m.deg - t.m.e[0] - t.m.e[1]);
  return d;
}

/// Whether the basis elements of T-degree at most 2 already generate q.
inline bool generated_in_t_degree_two(const poly::GroebnerBasis& q, const poly::GroebnerLimits& limits = {}) {
  std::vector<Polynomial> low;
  for (const auto& g : q.basis)
    if (t_degree(g) <= 2) low.push_back(g);
  if (low.empty()) return q.is_zero();
  return poly::buchberger(low, limits) == q;
}

struct ReesOptions {
  bool compute_full_ideal = true;
  ReductionProbeOptions probe{};
  poly::GroebnerLimits limits{};
};

struct ReesPresentation {
  StaircaseIdeal2 staircase;
  MonomialMatrix phi;
  JacobianDual dual;
  std::vector<Polynomial> linear;  // T * phi
  std::vector<Quadric> quadrics;   // all 2 x 2 minors of B, unreduced
  ReductionVerdict reduction;
  ExpectedEquations expected;
  std::optional<poly::GroebnerBasis> full_ideal;     // elimination route
  std::optional<poly::GroebnerBasis> colon_ideal;    // colon route
  std::optional<bool> routes_agree;
  std::optional<bool> contains_known_equations;     // linear and quadrics lie in the full ideal
  std::optional<bool> quadratically_generated;
  std::vector<Polynomial> extra_generators;         // basis elements not in (T*phi, I_2(B))
};

inline ReesPresentation rees_presentation(const StaircaseIdeal2& s, const ReesOptions& opts = {}) {
  ReesPresentation p{s, syzygy_matrix(s), jacobian_dual(s), linear_equations(s), {}, {}, {}, {}, {}, {}, {}, {}, {}};
  p.quadrics = two_by_two_minors(p.dual.b);
  p.reduction = reduction_number_probe(s, opts.probe);
  p.expected = expected_equations_check(s, p.reduction, opts.limits);
  if (!opts.compute_full_ideal) return p;

  const auto full = rees_ideal(s, ReesRoute::Elimination, opts.limits);
  p.full_ideal = full;
  bool inside = true;
  std::vector<Polynomial> known = p.linear;
  for (const auto& q : p.quadrics) {
    if (q.value.is_zero()) continue;
    known.push_back(q.value);
  }
  for (const auto& f : known) inside = inside && poly::ideal_member(f, full);
  p.contains_known_equations = inside;
  const auto known_basis = poly::buchberger(known, opts.limits);
  for (const auto& g : full.basis)
    if (!poly::ideal_member(g, known_basis)) p.extra_generators.push_back(g);
  if (p.reduction.bound == ReductionBound::AtMostOne) {
    p.colon_ideal = rees_ideal(s, ReesRoute::Colon, opts.limits);
    p.routes_agree = *p.colon_ideal == full;
    p.quadratically_generated = generated_in_t_degree_two(full, opts.limits);
  }
  return p;
}

}  // namespace monideal::rees
