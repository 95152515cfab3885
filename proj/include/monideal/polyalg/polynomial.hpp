#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/rational.hpp"
#include "monideal/polyalg/monomial.hpp"

namespace monideal::poly {

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// by decreasing monomial under the polynomial's term order, with no zero
/// coefficients and no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(TermOrder order) : order_(order) {}

  Polynomial(TermOrder order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) { normalize(); }

  static Polynomial constant(TermOrder order, const Rational& c) {
    return Polynomial(order, {Term{Monomial{}, c}});
  }
  static Polynomial term(TermOrder order, const Monomial& m, const Rational& c = 1) {
    return Polynomial(order, {Term{m, c}});
  }
  static Polynomial variable(TermOrder order, std::size_t i) {
    if (i >= order.nvars) throw InvalidArgument("variable index outside the ring");
    return term(order, Monomial::var(i));
  }

  std::size_t nvars() const noexcept { return order_.nvars; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Monomial& leading_monomial() const { return lead().m; }
  const Rational& leading_coefficient() const { return lead().c; }

  /// Everything but the leading term.
  Polynomial tail() const {
    Polynomial out(order_);
    if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
  }

  std::int32_t total_degree() const {
    std::int32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }

  /// Same polynomial, re-sorted for another order on the same variables.
  Polynomial with_order(const TermOrder& order) const {
    if (order.nvars != nvars()) throw DimensionMismatch("term order has a different number of variables");
    return Polynomial(order, terms_);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coefficient());
  }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return Polynomial(order_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.c *= c;
    return out;
  }

  Polynomial times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(order_);
    Polynomial out = *this;
    for (auto& t : out.terms_) {
      t.m = t.m * m;
      t.c *= c;
    }
    return out;  // multiplying by a monomial preserves the order of terms
  }

  /// this - c * m * g, by a single merge.
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
    require_same_ring(g);
    if (c == 0) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].m * m;
      int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].m, gm);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.push_back(Term{gm, -c * g.terms_[j].c});
        ++j;
      } else {
        Rational v = terms_[i].c - c * g.terms_[j].c;
        if (v != 0) out.push_back(Term{gm, v});
        ++i;
        ++j;
      }
    }
    Polynomial p(order_);
    p.terms_ = std::move(out);
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.minus_scaled(Rational(-1), Monomial{}, b); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.minus_scaled(Rational(1), Monomial{}, b); }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial out(a.order_);
    for (const auto& t : b.terms_) out = out.minus_scaled(-t.c, t.m, a);
    return out;
  }

  /// Equality as polynomials (term order is ignored).
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars() || a.size() != b.size()) return false;
    if (!(a.order_ == b.order_)) return a == b.with_order(a.order_);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }

  void require_same_ring(const Polynomial& o) const {
    if (o.nvars() != nvars()) throw DimensionMismatch("polynomials live in rings with different variables");
    if (!(o.order_ == order_)) throw InvalidArgument("polynomials use different term orders");
  }

 private:
  const Term& lead() const {
    if (terms_.empty()) throw InvalidArgument("the zero polynomial has no leading term");
    return terms_.front();
  }

  void normalize() {
    for (const auto& t : terms_)
      for (std::size_t i = order_.nvars; i < kMaxVars; ++i)
        if (t.m.e[i]) throw DimensionMismatch("monomial uses a variable outside the ring");
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return order_.greater(a.m, b.m); });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  TermOrder order_;
  std::vector<Term> terms_;
};

/// Exact division by f; throws InvalidArgument when f does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Polynomial q(p.order()), r = p;
  while (!r.is_zero()) {
    const auto& lm = r.leading_monomial();
    if (!f.leading_monomial().divides(lm)) throw InvalidArgument("polynomial is not divisible");
    Monomial m = lm / f.leading_monomial();
    Rational c = r.leading_coefficient() / f.leading_coefficient();
    q = q.minus_scaled(Rational(-1), m, Polynomial::constant(p.order(), c));
    r = r.minus_scaled(c, m, f);
  }
  return q;
}

/// Renders terms in decreasing order, e.g. "x^2*y - 3/2*T1 + 1".
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() < p.nvars()) throw InvalidArgument("not enough variable names to print polynomial");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) out += monideal::to_string(c);
    else if (c == 1) out += mono;
    else out += monideal::to_string(c) + "*" + mono;
    first = false;
  }
  return out;
}

/// Parses sums of terms like "2*x^2*y - 3/4 T1 + 1" over the given variables.
/// Whitespace is ignored; `*` between factors is optional.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names, const TermOrder& order) {
  if (names.size() != order.nvars) throw DimensionMismatch("variable names and term order disagree");
  std::string s;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
      pos.push_back(i);
    }
  std::size_t at = 0;
  auto where = [&]() { return at < pos.size() ? pos[at] : text.size(); };
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, where()); };
  auto number = [&]() {
    std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (start == at) fail("expected a number");
    return Integer(s.substr(start, at - start));
  };

  std::vector<Term> terms;
  if (s.empty()) fail("empty polynomial");
  bool first = true;
  while (at < s.size()) {
    Rational sign = 1;
    if (s[at] == '+' || s[at] == '-') {
      sign = s[at] == '-' ? -1 : 1;
      ++at;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = sign;
    std::vector<std::int64_t> exps(order.nvars, 0);
    bool any = false;
    while (at < s.size() && s[at] != '+' && s[at] != '-') {
      if (any && s[at] == '*') ++at;
      if (at >= s.size()) fail("dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(s[at]))) {
        Rational v(number());
        if (at < s.size() && s[at] == '/') {
          ++at;
          Integer d = number();
          if (d == 0) fail("zero denominator");
          v /= Rational(d);
        }
        coef *= v;
      } else {
        std::size_t best = names.size(), best_len = 0;
        for (std::size_t k = 0; k < names.size(); ++k)
          if (names[k].size() > best_len && s.compare(at, names[k].size(), names[k]) == 0) {
            best = k;
            best_len = names[k].size();
          }
        if (best == names.size()) fail("unknown variable");
        at += best_len;
        std::int64_t e = 1;
        if (at < s.size() && s[at] == '^') {
          ++at;
          if (at < s.size() && s[at] == '-') fail("negative exponent");
          Integer big = number();
          if (!big.fits_sint_p()) fail("exponent too large");
          e = big.get_si();
        }
        exps[best] += e;
      }
      any = true;
    }
    if (!any) fail("expected a term");
    terms.push_back(Term{Monomial::from(exps), coef});
  }
  return Polynomial(order, std::move(terms));
}

}  // namespace monideal::poly
