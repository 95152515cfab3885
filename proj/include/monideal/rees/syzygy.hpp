#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/staircase.hpp"
#include "monideal/polyalg/polynomial.hpp"

namespace monideal::rees {

using poly::Polynomial;
using poly::TermOrder;

/// A zero entry (sign 0) or +-x^e0 y^e1.
struct MatrixEntry {
  int sign = 0;
  ExponentVector exps = ExponentVector::zero(2);

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

struct MonomialMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<MatrixEntry>> entries;  // entries[row][col]

  MonomialMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r, std::vector<MatrixEntry>(c)) {}

  const MatrixEntry& at(std::size_t r, std::size_t c) const { return entries.at(r).at(c); }
  MatrixEntry& at(std::size_t r, std::size_t c) { return entries.at(r).at(c); }
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Variable names of the presentation ring: x, y, T1, ..., Tn.
inline std::vector<std::string> rees_variable_names(std::size_t n) {
  std::vector<std::string> names{"x", "y"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("T" + std::to_string(i));
  return names;
}

inline std::vector<std::string> fiber_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("T" + std::to_string(i));
  return names;
}

/// Ring k[x, y, T1..Tn] with degrevlex, the order every Rees computation ends in.
inline TermOrder rees_ring(std::size_t n) {
  if (n + 2 > poly::kMaxVars) throw InvalidArgument("too many generators for the presentation ring");
  return TermOrder::degrevlex(n + 2);
}

/// x^e0 y^e1 (times c) inside a ring whose first two variables are x, y.
inline Polynomial xy_monomial(const TermOrder& order, const ExponentVector& e, const Rational& c = 1) {
  auto m = poly::Monomial::from({e[0], e[1]});
  return Polynomial::term(order, m, c);
}

inline Polynomial entry_polynomial(const TermOrder& order, const MatrixEntry& e) {
  if (e.is_zero()) return Polynomial(order);
  return xy_monomial(order, e.exps, Rational(e.sign));
}

inline Polynomial t_variable(const TermOrder& order, std::size_t i, std::size_t offset = 2) {
  return Polynomial::variable(order, offset + i - 1);
}

/// Generators of the ideal as polynomials, in staircase order (x^{a_1} first).
inline std::vector<Polynomial> generator_polynomials(const StaircaseIdeal2& s, const TermOrder& order) {
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i <= s.size(); ++i) out.push_back(xy_monomial(order, s.point(i)));
  return out;
}

/// The n x (n-1) lower-bidiagonal presentation matrix: column j pairs
/// generators j and j+1 with y^{y_gap(j)} on the diagonal and -x^{x_gap(j)}
/// below it. The relation [generators] * matrix = 0 is verified.
inline MonomialMatrix syzygy_matrix(const StaircaseIdeal2& s) {
  const std::size_t n = s.size();
  MonomialMatrix phi(n, n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    phi.at(j - 1, j - 1) = MatrixEntry{1, ExponentVector{0, s.y_gap(j)}};
    phi.at(j, j - 1) = MatrixEntry{-1, ExponentVector{s.x_gap(j), 0}};
  }
  const auto order = TermOrder::degrevlex(2);
  const auto gens = generator_polynomials(s, order);
  for (std::size_t c = 0; c < phi.cols; ++c) {
    Polynomial sum(order);
    for (std::size_t r = 0; r < phi.rows; ++r) sum = sum + gens[r] * entry_polynomial(order, phi.at(r, c));
    if (!sum.is_zero()) throw InconsistencyError("syzygy column does not annihilate the generators");
  }
  return phi;
}

struct ContentPair {
  Exponent r = 0, s = 0;
  friend bool operator==(const ContentPair&, const ContentPair&) = default;
};

/// (r, s) with (x^r, y^s) the ideal of all entries of a syzygy-shaped matrix.
inline ContentPair content_ideal(const MonomialMatrix& phi) {
  ContentPair c{-1, -1};
  for (const auto& row : phi.entries)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      if (e.exps[0] > 0 && e.exps[1] == 0) c.r = c.r < 0 ? e.exps[0] : std::min(c.r, e.exps[0]);
      else if (e.exps[1] > 0 && e.exps[0] == 0) c.s = c.s < 0 ? e.exps[1] : std::min(c.s, e.exps[1]);
      else throw InvalidArgument("matrix entry is not a pure power of x or of y");
    }
  if (c.r < 0 || c.s < 0) throw InvalidArgument("matrix lacks x-entries or y-entries");
  return c;
}

namespace detail {

// Laplace expansion along the first column of the submatrix.
inline Polynomial determinant(const MonomialMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols, const TermOrder& order) {
  if (rows.empty()) return Polynomial::constant(order, 1);
  Polynomial det(order);
  const std::vector<std::size_t> rest_cols(cols.begin() + 1, cols.end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& e = m.at(rows[k], cols.front());
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest_rows = rows;
    rest_rows.erase(rest_rows.begin() + static_cast<std::ptrdiff_t>(k));
    auto sub = determinant(m, rest_rows, rest_cols, order);
    if (sub.is_zero()) continue;
    auto term = entry_polynomial(order, e) * sub;
    det = k % 2 == 0 ? det + term : det - term;
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Ideal of k x k minors. Every monomial occurring in some minor is taken as
/// a generator (for the bidiagonal shape the minors are single monomials).
inline MonomialIdeal minors(const MonomialMatrix& phi, std::size_t k) {
  if (k > std::min(phi.rows, phi.cols)) throw InvalidArgument("minor size exceeds the matrix");
  if (k == 0) return MonomialIdeal::unit(2);
  const auto order = TermOrder::degrevlex(2);
  std::vector<ExponentVector> gens;
  detail::for_each_subset(phi.rows, k, [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(phi.cols, k, [&](const std::vector<std::size_t>& cols) {
      const auto det = detail::determinant(phi, rows, cols, order);
      for (const auto& t : det.terms()) gens.push_back(ExponentVector{t.m.e[0], t.m.e[1]});
    });
  });
  if (gens.empty()) throw InvalidArgument("all minors vanish");
  return MonomialIdeal(2, std::move(gens));
}

/// T * phi = [x^r, y^s] * B, with B linear in T. B0 keeps the entries of B
/// that have no x or y factor, as forms in k[T1..Tn].
struct JacobianDual {
  ContentPair content;
  std::vector<std::vector<Polynomial>> b;   // 2 x (n-1), ring k[x, y, T]
  std::vector<std::vector<Polynomial>> b0;  // 2 x (n-1), ring k[T]
};

inline JacobianDual jacobian_dual(const StaircaseIdeal2& s) {
  const std::size_t n = s.size();
  const auto phi = syzygy_matrix(s);
  const auto c = content_ideal(phi);
  const auto ring = rees_ring(n);
  const auto tring = TermOrder::degrevlex(n);
  JacobianDual d{c, std::vector<std::vector<Polynomial>>(2), std::vector<std::vector<Polynomial>>(2)};
  for (std::size_t j = 1; j < n; ++j) {
    const Exponent dx = s.x_gap(j) - c.r, dy = s.y_gap(j) - c.s;
    d.b[0].push_back(xy_monomial(ring, ExponentVector{dx, 0}, -1) * t_variable(ring, j + 1));
    d.b[1].push_back(xy_monomial(ring, ExponentVector{0, dy}) * t_variable(ring, j));
    d.b0[0].push_back(dx == 0 ? -t_variable(tring, j + 1, 0) : Polynomial(tring));
    d.b0[1].push_back(dy == 0 ? t_variable(tring, j, 0) : Polynomial(tring));
  }
  const auto xr = xy_monomial(ring, ExponentVector{c.r, 0});
  const auto ys = xy_monomial(ring, ExponentVector{0, c.s});
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Polynomial col(ring);
    for (std::size_t r = 0; r < n; ++r) col = col + t_variable(ring, r + 1) * entry_polynomial(ring, phi.at(r, j));
    if (!(col == xr * d.b[0][j] + ys * d.b[1][j])) throw InconsistencyError("Jacobian dual identity fails");
  }
  return d;
}

/// The n-1 linear equations T * phi in k[x, y, T].
inline std::vector<Polynomial> linear_equations(const StaircaseIdeal2& s) {
  const auto phi = syzygy_matrix(s);
  const auto ring = rees_ring(s.size());
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < phi.cols; ++j) {
    Polynomial col(ring);
    for (std::size_t r = 0; r < phi.rows; ++r) col = col + t_variable(ring, r + 1) * entry_polynomial(ring, phi.at(r, j));
    out.push_back(col);
  }
  return out;
}

struct Quadric {
  std::size_t first_col, second_col;  // 1-based columns of the 2 x 2 minor
  Polynomial value;
};

/// All 2 x 2 minors of a 2-row matrix, zero ones included.
inline std::vector<Quadric> two_by_two_minors(const std::vector<std::vector<Polynomial>>& m) {
  std::vector<Quadric> out;
  const std::size_t c = m.at(0).size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) out.push_back({i + 1, j + 1, m[0][i] * m[1][j] - m[0][j] * m[1][i]});
  return out;
}

}  // namespace monideal::rees
