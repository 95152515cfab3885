#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/staircase.hpp"
#include "monideal/fullness/fullness.hpp"
#include "monideal/rees/syzygy.hpp"

namespace monideal::rees {

/// Minimal generator counts of the powers I^0, ..., I^jmax. For an m-full
/// ideal the count j(n-1)+1 is expected and compared.
struct FiberHilbert {
  std::vector<std::size_t> mu;
  bool m_full = false;
  std::vector<std::size_t> expected;  // filled only when m_full
  bool matches_expected = true;
};

inline FiberHilbert fiber_hilbert(const StaircaseIdeal2& s, unsigned jmax) {
  if (jmax < 1) throw InvalidArgument("fiber Hilbert function needs jmax >= 1");
  FiberHilbert out;
  out.mu.push_back(1);
  const auto ideal = s.ideal();
  MonomialIdeal acc = ideal;
  for (unsigned j = 1; j <= jmax; ++j) {
    out.mu.push_back(acc.size());
    if (j < jmax) acc = multiply(acc, ideal);
  }
  out.m_full = is_m_full(s).is_m_full;
  if (out.m_full) {
    for (unsigned j = 0; j <= jmax; ++j) out.expected.push_back(j * (s.size() - 1) + 1);
    out.matches_expected = out.expected == out.mu;
  }
  return out;
}

enum class ReductionBound { AtMostOne, AtLeastTwo };

inline std::string to_string(ReductionBound b) { return b == ReductionBound::AtMostOne ? "at_most_one" : "at_least_two"; }

struct ReductionProbeOptions {
  std::uint64_t seed = 7;
  unsigned trials = 5;
  std::int64_t coefficient_bound = 10;  // coefficients from [-bound, bound] without 0
};

/// AtMostOne is certified by an explicit J with I^2 = JI near the origin.
/// AtLeastTwo only means that no tried J worked.
struct ReductionVerdict {
  ReductionBound bound = ReductionBound::AtLeastTwo;
  bool certified = false;
  int witness_trial = -1;  // 0 for the pure-power pair, k for random trial k
  std::vector<Polynomial> witness;  // the pair (f, g) generating J, in k[x, y]
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::int64_t coefficient_bound = 0;
};

namespace detail {

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational q = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
    }
    ++r;
  }
  return r;
}

// I^2 = JI near the origin iff I^2 = JI + m I^2 (Nakayama). A polynomial in
// I^2 maps to I^2 / m I^2 through its coefficients on the minimal
// generators of I^2, so the test is whether the products f*h and g*h span
// that space.
inline bool squares_into(const StaircaseIdeal2& s, const Polynomial& f, const Polynomial& g) {
  const auto ideal = s.ideal();
  const auto square = multiply(ideal, ideal);
  const auto gens = generator_polynomials(s, f.order());
  std::vector<std::vector<Rational>> rows;
  for (const auto* j : {&f, &g})
    for (const auto& h : gens) {
      const auto prod = *j * h;
      std::vector<Rational> row(square.size());
      for (const auto& t : prod.terms())
        for (std::size_t c = 0; c < square.size(); ++c)
          if (square[c][0] == t.m.e[0] && square[c][1] == t.m.e[1]) row[c] = t.c;
      rows.push_back(std::move(row));
    }
  return rank(std::move(rows)) == square.size();
}

}  // namespace detail

/// Looks for a two-generated J inside I with I^2 = JI locally at the origin:
/// first (x^{a_1}, y^{b_1}), then `trials` pairs of random combinations of
/// the generators drawn from a seeded mt19937_64.
inline ReductionVerdict reduction_number_probe(const StaircaseIdeal2& s, const ReductionProbeOptions& opts = {}) {
  if (opts.trials < 1) throw InvalidArgument("reduction probe needs at least one trial");
  if (opts.coefficient_bound < 1) throw InvalidArgument("coefficient bound must be positive");
  ReductionVerdict v;
  v.trials = opts.trials;
  v.seed = opts.seed;
  v.coefficient_bound = opts.coefficient_bound;
  const auto order = TermOrder::degrevlex(2);
  const auto gens = generator_polynomials(s, order);
  auto certify = [&](int trial, const Polynomial& f, const Polynomial& g) {
    v.bound = ReductionBound::AtMostOne;
    v.certified = true;
    v.witness_trial = trial;
    v.witness = {f, g};
    return v;
  };
  if (detail::squares_into(s, gens.front(), gens.back())) return certify(0, gens.front(), gens.back());

  std::mt19937_64 rng(opts.seed);
  const auto width = static_cast<std::uint64_t>(2 * opts.coefficient_bound);
  auto coefficient = [&]() {
    auto k = static_cast<std::int64_t>(rng() % width);  // 0 .. 2B-1
    return Rational(k < opts.coefficient_bound ? k - opts.coefficient_bound : k - opts.coefficient_bound + 1);
  };
  for (unsigned t = 1; t <= opts.trials; ++t) {
    Polynomial f(order), g(order);
    for (const auto& h : gens) f = f + h.scaled(coefficient());
    for (const auto& h : gens) g = g + h.scaled(coefficient());
    if (f.is_zero() || g.is_zero()) continue;
    if (detail::squares_into(s, f, g)) return certify(static_cast<int>(t), f, g);
  }
  return v;
}

}  // namespace monideal::rees
