#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/staircase.hpp"
#include "monideal/polyhedra/closure.hpp"

namespace monideal {

struct MFullVerdict {
  bool is_m_full = false;
  std::size_t k = 0;  // split index in 1..n, meaningful when is_m_full
  Exponent witness_order = 0;
  std::string failure;  // first violated condition, empty when m-full
};

/// Decides m-fullness from the gap pattern and cross-checks it against
/// order(I) = n - 1.
///
/// k is the first index whose y-gap is at least 2 (or n if there is none).
/// The ideal is m-full iff every x-gap from k onward equals 1.
inline MFullVerdict is_m_full(const StaircaseIdeal2& s) {
  const std::size_t n = s.size();
  MFullVerdict v;
  v.witness_order = order(s.ideal());
  v.k = n;
  for (std::size_t i = 1; i < n; ++i)
    if (s.y_gap(i) >= 2) {
      v.k = i;
      break;
    }
  v.is_m_full = true;
  for (std::size_t i = v.k; i < n; ++i)
    if (s.x_gap(i) != 1) {
      v.is_m_full = false;
      v.failure = "x-gap a_" + std::to_string(i) + " - a_" + std::to_string(i + 1) + " = " +
                  std::to_string(s.x_gap(i)) + " != 1 after split index k = " + std::to_string(v.k);
      break;
    }
  const bool by_order = v.witness_order == static_cast<Exponent>(n - 1);
  if (by_order != v.is_m_full)
    throw InconsistencyError("gap test and order test disagree on m-fullness");
  return v;
}

inline bool is_x_tight(const StaircaseIdeal2& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s.x_gap(i) != 1) return false;
  return true;
}

inline bool is_y_tight(const StaircaseIdeal2& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s.y_gap(i) != 1) return false;
  return true;
}

/// Antidiagonal segment m_p, ..., m_q of degree `degree`, where position j
/// stands for x^{degree-j} y^j. x*m_p and y*m_q lie in the reference ideal, so
/// the alternating sum m_p - m_{p+1} + ... times (x+y) telescopes into it.
struct ChainElement {
  Exponent degree = 0;
  Exponent p = 0;
  Exponent q = 0;
};

struct LinearColon {
  MonomialIdeal ideal;
  std::vector<ChainElement> chains;  // maximal segments, by degree then position
};

/// Monomial content of J : (x+y) together with the maximal chains realizing it.
inline LinearColon colon_by_linear_chains(const MonomialIdeal& j) {
  if (j.dim() != 2) throw InvalidArgument("colon by x+y is implemented for 2 variables");
  if (!j.is_zero_dimensional()) throw NotZeroDimensional("colon by x+y needs a zero-dimensional ideal");
  if (j.is_unit()) return {j, {}};

  // Every monomial of degree >= A + B - 1 already lies in J.
  const Exponent top = j.max_exponent(0) + j.max_exponent(1) - 1;
  std::vector<ExponentVector> found(j.generators().begin(), j.generators().end());
  std::vector<ChainElement> chains;
  for (Exponent e = 0; e <= top; ++e) {
    const auto len = static_cast<std::size_t>(e + 1);
    std::vector<char> left(len), right(len);
    bool seen = false;
    for (std::size_t p = 0; p < len; ++p) {
      const auto y = static_cast<Exponent>(p);
      seen = seen || j.contains(ExponentVector{e - y + 1, y});
      left[p] = seen;
    }
    seen = false;
    for (std::size_t q = len; q-- > 0;) {
      const auto y = static_cast<Exponent>(q);
      seen = seen || j.contains(ExponentVector{e - y, y + 1});
      right[q] = seen;
    }
    for (std::size_t p = 0; p < len;) {
      if (!(left[p] && right[p])) {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q + 1 < len && left[q + 1] && right[q + 1]) ++q;
      chains.push_back({e, static_cast<Exponent>(p), static_cast<Exponent>(q)});
      for (std::size_t i = p; i <= q; ++i) found.push_back(ExponentVector{e - static_cast<Exponent>(i), static_cast<Exponent>(i)});
      p = q + 1;
    }
  }
  return {MonomialIdeal(2, std::move(found)), std::move(chains)};
}

inline MonomialIdeal colon_by_linear(const MonomialIdeal& j) { return colon_by_linear_chains(j).ideal; }

namespace detail {

/// Number of monomials outside a zero-dimensional 2-variable ideal.
inline std::uint64_t colength2(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  auto s = to_staircase(ideal);
  std::uint64_t total = 0;
  // Columns x in [a_{i+1}, a_i) have height b_{n-i}, the y-exponent of P_{i+1}.
  for (std::size_t i = 1; i < s.size(); ++i)
    total += static_cast<std::uint64_t>(s.x_gap(i)) * static_cast<std::uint64_t>(s.b(s.size() - i));
  return total;
}

}  // namespace detail

struct MFullClosureLimits {
  std::uint64_t max_steps = 0;  // 0: use the colength difference to the integral closure
};

/// Iterates I_{j+1} = M(m I_j : (x+y)) from I_0 = I; returns every iterate,
/// ending with the fixed point.
inline std::vector<MonomialIdeal> m_full_closure_chain(const MonomialIdeal& ideal, const MFullClosureLimits& limits = {}) {
  if (ideal.dim() != 2) throw InvalidArgument("m-full closure is implemented for 2 variables");
  if (!ideal.is_zero_dimensional()) throw NotZeroDimensional("m-full closure needs a zero-dimensional ideal");
  std::uint64_t ceiling = limits.max_steps;
  if (ceiling == 0) ceiling = detail::colength2(ideal) - detail::colength2(integral_closure(ideal)) + 1;

  const auto m = MonomialIdeal::maximal(2);
  std::vector<MonomialIdeal> chain{ideal};
  for (std::uint64_t step = 0;; ++step) {
    if (step >= ceiling) throw ResourceExceeded("m-full closure did not stabilize within the step ceiling");
    auto next = colon_by_linear(multiply(m, chain.back()));
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
}

inline MonomialIdeal m_full_closure(const MonomialIdeal& ideal, const MFullClosureLimits& limits = {}) {
  return m_full_closure_chain(ideal, limits).back();
}

/// Splits an m-full staircase as X * Y with X x-tight and Y y-tight, at the
/// index k of is_m_full. X collects generators k..n over y^{k-1}, Y collects
/// generators 1..k over x^{n-k}; an empty side is the unit ideal.
inline std::pair<MonomialIdeal, MonomialIdeal> tight_factorization(const StaircaseIdeal2& s) {
  const auto verdict = is_m_full(s);
  if (!verdict.is_m_full) throw InvalidArgument("tight factorization needs an m-full ideal: " + verdict.failure);
  const std::size_t n = s.size(), k = verdict.k;
  std::vector<ExponentVector> xs, ys;
  for (std::size_t i = k; i <= n; ++i) {
    auto p = s.point(i);
    xs.push_back(ExponentVector{p[0], p[1] - static_cast<Exponent>(k - 1)});
  }
  for (std::size_t i = 1; i <= k; ++i) {
    auto p = s.point(i);
    ys.push_back(ExponentVector{p[0] - static_cast<Exponent>(n - k), p[1]});
  }
  MonomialIdeal x(2, std::move(xs)), y(2, std::move(ys));
  if (multiply(x, y) != s.ideal()) throw InconsistencyError("tight factors do not multiply back to the ideal");
  return {std::move(x), std::move(y)};
}

}  // namespace monideal
