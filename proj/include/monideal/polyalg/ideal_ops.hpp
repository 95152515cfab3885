#pragma once

#include <cstdint>
#include <vector>

#include "monideal/polyalg/groebner.hpp"

namespace monideal::poly {

inline bool ideal_member(const Polynomial& p, const GroebnerBasis& g) { return reduce(p, g).is_zero(); }

/// Moves p into a ring with `order.nvars` variables, sending variable i to
/// variable i + offset.
inline Polynomial embed(const Polynomial& p, const TermOrder& order, std::size_t offset) {
  if (p.nvars() + offset > order.nvars) throw DimensionMismatch("target ring too small for embedding");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < p.nvars(); ++i) m.e[i + offset] = t.m.e[i];
    m.deg = t.m.deg;
    terms.push_back(Term{m, t.c});
  }
  return Polynomial(order, std::move(terms));
}

/// Drops the first `offset` variables, which p must not use.
inline Polynomial project(const Polynomial& p, const TermOrder& order, std::size_t offset) {
  if (order.nvars + offset != p.nvars()) throw DimensionMismatch("projection ring has the wrong size");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.m.uses_any(0, offset)) throw InvalidArgument("polynomial uses a variable being projected away");
    Monomial m;
    for (std::size_t i = 0; i < order.nvars; ++i) m.e[i] = t.m.e[i + offset];
    m.deg = t.m.deg;
    terms.push_back(Term{m, t.c});
  }
  return Polynomial(order, std::move(terms));
}

/// Generators of (gens) intersected with k[x_{k}, ..., x_{n-1}], the ring
/// without the first k variables, as a reduced degrevlex basis there.
inline GroebnerBasis eliminate(const std::vector<Polynomial>& gens, std::size_t k, const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw InvalidArgument("elimination of an empty generator list");
  const std::size_t n = gens.front().nvars();
  if (k == 0 || k >= n) throw InvalidArgument("must eliminate between 1 and n-1 variables");
  const auto block = TermOrder::elimination(n, k);
  std::vector<Polynomial> in;
  for (const auto& g : gens) in.push_back(g.with_order(block));
  auto gb = buchberger(in, limits);
  const auto rest = TermOrder::degrevlex(n - k);
  GroebnerBasis out{rest, {}};
  for (const auto& g : gb.basis)
    if (!g.leading_monomial().uses_any(0, k)) out.basis.push_back(project(g, rest, k));
  return out;
}

/// A intersected with B via u*A + (1-u)*B and elimination of u. Returned in
/// the ring and order of A.
inline GroebnerBasis intersect(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                               const GroebnerLimits& limits = {}) {
  if (a.empty() || b.empty()) throw InvalidArgument("intersection needs non-empty generator lists");
  const TermOrder order = a.front().order();
  const std::size_t n = order.nvars;
  if (n + 1 > kMaxVars) throw InvalidArgument("no room for the auxiliary variable");
  const auto big = TermOrder::elimination(n + 1, 1);
  const auto u = Polynomial::variable(big, 0);
  const auto one_minus_u = Polynomial::constant(big, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(u * embed(f, big, 1));
  for (const auto& f : b) {
    a.front().require_same_ring(f);
    gens.push_back(one_minus_u * embed(f, big, 1));
  }
  auto e = eliminate(gens, 1, limits);
  std::vector<Polynomial> back;
  for (const auto& g : e.basis) back.push_back(g.with_order(order));
  if (back.empty()) return GroebnerBasis{order, {}};
  return buchberger(back, limits);
}

/// J : f.
inline GroebnerBasis ideal_colon(const std::vector<Polynomial>& j, const Polynomial& f, const GroebnerLimits& limits = {}) {
  if (f.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  auto meet = intersect(j, {f}, limits);
  if (meet.is_zero()) return meet;
  std::vector<Polynomial> quotients;
  for (const auto& g : meet.basis) quotients.push_back(divide_exact(g, f));
  return buchberger(quotients, limits);
}

/// J : I, the intersection of J : f over the generators f of I.
inline GroebnerBasis ideal_colon_ideal(const std::vector<Polynomial>& j, const std::vector<Polynomial>& i,
                                       const GroebnerLimits& limits = {}) {
  if (i.empty()) throw InvalidArgument("colon by an empty generator list");
  GroebnerBasis acc = ideal_colon(j, i.front(), limits);
  for (std::size_t k = 1; k < i.size(); ++k) {
    if (acc.is_zero()) break;
    acc = intersect(acc.basis, ideal_colon(j, i[k], limits).basis, limits);
  }
  return acc;
}

/// Largest set of variables containing the support of no monomial in `lead`.
inline std::int64_t independent_set_size(const std::vector<Monomial>& lead, std::size_t nvars) {
  std::int64_t best = -1;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const auto& m : lead) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars && inside; ++v)
        if (m.e[v] && !(mask >> v & 1u)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<std::int64_t>(best, __builtin_popcount(mask));
  }
  return best;
}

/// Krull dimension of k[x]/(gens); -1 for the unit ideal.
inline std::int64_t dim_quotient(const std::vector<Polynomial>& gens, const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw InvalidArgument("dimension of an empty generator list");
  const std::size_t n = gens.front().nvars();
  std::vector<Polynomial> in;
  for (const auto& g : gens) in.push_back(g.with_order(TermOrder::degrevlex(n)));
  auto gb = buchberger(in, limits);
  std::vector<Monomial> lead;
  for (const auto& g : gb.basis) lead.push_back(g.leading_monomial());
  return independent_set_size(lead, n);
}

}  // namespace monideal::poly
