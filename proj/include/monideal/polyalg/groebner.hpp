#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/polyalg/polynomial.hpp"

namespace monideal::poly {

struct GroebnerLimits {
  std::size_t max_basis = 5000;    // polynomials created during one run
  std::int32_t max_degree = 400;   // total degree of any new basis element
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial. An empty basis is the zero ideal.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> basis;

  bool is_unit() const { return basis.size() == 1 && basis.front().leading_monomial().is_one(); }
  bool is_zero() const { return basis.empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && a.basis == b.basis;
  }
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& g) {
  for (const auto* p : g)
    if (p->leading_monomial().divides(m)) return p;
  return nullptr;
}

inline Polynomial normal_form(const Polynomial& p, const std::vector<const Polynomial*>& g) {
  std::vector<Term> rest;
  Polynomial r = p;
  while (!r.is_zero()) {
    const Monomial lm = r.leading_monomial();
    if (const auto* d = find_reducer(lm, g)) {
      r = r.minus_scaled(r.leading_coefficient() / d->leading_coefficient(), lm / d->leading_monomial(), *d);
    } else {
      rest.push_back(r.terms().front());
      r = r.tail();
    }
  }
  return Polynomial(p.order(), std::move(rest));
}

}  // namespace detail

/// Full normal form of p modulo g by exact division, so p - result lies in (g).
inline Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& g) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& q : g) {
    p.require_same_ring(q);
    if (!q.is_zero()) ptrs.push_back(&q);
  }
  return detail::normal_form(p, ptrs);
}

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// sugar selection strategy (smallest sugar degree, then smallest lcm), which
/// behaves like the homogeneous case on inhomogeneous input.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw InvalidArgument("Groebner basis of an empty generator list");
  const TermOrder order = gens.front().order();
  for (const auto& g : gens) gens.front().require_same_ring(g);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int32_t sugar = 0;
  };
  std::vector<Polynomial> store;
  std::vector<std::int32_t> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto active_ptrs = [&]() {
    std::vector<const Polynomial*> out;
    for (std::size_t i = 0; i < store.size(); ++i)
      if (active[i]) out.push_back(&store[i]);
    return out;
  };

  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(sugar[i] + l.deg - store[i].leading_monomial().deg, sugar[j] + l.deg - store[j].leading_monomial().deg);
  };

  auto update = [&](Polynomial h, std::int32_t h_sugar) {
    if (store.size() >= limits.max_basis) throw ResourceExceeded("Groebner basis exceeded the configured size");
    if (h.total_degree() > limits.max_degree) throw ResourceExceeded("Groebner basis exceeded the configured degree");
    const std::size_t hi = store.size();
    store.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(1);
    const Monomial& lh = store[hi].leading_monomial();

    std::vector<Pair> c, d;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) {
        const Monomial l = lcm(lh, store[g].leading_monomial());
        c.push_back({hi, g, l, pair_sugar(hi, g, l)});
      }
    while (!c.empty()) {
      Pair p = c.front();
      c.erase(c.begin());
      bool keep = coprime(lh, store[p.j].leading_monomial());
      if (!keep) {
        keep = true;
        for (const auto& q : c)
          if (q.lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && !(lcm(store[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(store[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : d)
      if (!coprime(lh, store[p.j].leading_monomial())) next.push_back(p);
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(store[g].leading_monomial())) active[g] = 0;
  };

  for (const auto& g : gens) {
    auto h = detail::normal_form(g, active_ptrs());
    if (!h.is_zero()) update(h.monic(), h.total_degree());
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const auto& f = store[p.i];
    const auto& g = store[p.j];
    Polynomial s = f.times_term(p.lcm / f.leading_monomial(), Rational(1))
                       .minus_scaled(Rational(1), p.lcm / g.leading_monomial(), g);
    auto h = detail::normal_form(s, active_ptrs());
    if (!h.is_zero()) update(h.monic(), std::max(p.sugar, h.total_degree()));
  }

  // Inter-reduce the minimal basis.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < store.size(); ++i)
    if (active[i]) minimal.push_back(store[i]);
  GroebnerBasis out{order, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    const auto& g = minimal[i];
    auto tail = detail::normal_form(g.tail(), others);
    out.basis.push_back(Polynomial::term(order, g.leading_monomial()) + tail);
  }
  std::sort(out.basis.begin(), out.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

inline Polynomial reduce(const Polynomial& p, const GroebnerBasis& g) { return reduce(p, g.basis); }

}  // namespace monideal::poly
