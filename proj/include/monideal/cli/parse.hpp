#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/monomial_ideal.hpp"

namespace monideal::cli {

/// Parses "x^3, x^2*y^8, x*y^15, y^21". Variables are x and y, or x1..xd
/// for any d (the two styles cannot be mixed); `1` stands for the unit
/// monomial. Whitespace is ignored and `*` between factors is optional.
inline MonomialIdeal parse_ideal(std::string_view text) {
  struct Factor {
    std::size_t var;  // 0-based
    Exponent power;
  };
  std::vector<std::vector<Factor>> monomials;
  bool named = false, indexed = false;
  std::size_t dim = 0;

  std::size_t at = 0;
  auto skip = [&]() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  };
  auto fail = [&](const std::string& what) { throw ParseError(what, at); };
  auto digits = [&]() {
    const std::size_t start = at;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
    if (start == at) fail("expected a number");
    const auto s = text.substr(start, at - start);
    if (s.size() > 18) {
      at = start;
      fail("number too large");
    }
    return static_cast<Exponent>(std::stoll(std::string(s)));
  };

  skip();
  if (at == text.size()) fail("empty ideal");
  while (true) {
    skip();
    std::vector<Factor> mono;
    bool any = false;
    while (true) {
      skip();
      if (at == text.size() || text[at] == ',') break;
      if (any && text[at] == '*') {
        ++at;
        skip();
        if (at == text.size() || text[at] == ',') fail("dangling '*'");
      }
      if (text[at] == '1' && !any) {
        ++at;
        any = true;
        continue;
      }
      std::size_t var = 0;
      if (text[at] == 'x' && at + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[at + 1]))) {
        ++at;
        const std::size_t where = at;
        const Exponent idx = digits();
        if (idx < 1) {
          at = where;
          fail("variable index must be at least 1");
        }
        var = static_cast<std::size_t>(idx - 1);
        indexed = true;
      } else if (text[at] == 'x' || text[at] == 'y') {
        var = text[at] == 'x' ? 0 : 1;
        ++at;
        named = true;
      } else {
        fail(std::isalpha(static_cast<unsigned char>(text[at])) ? "unknown variable" : "unexpected character");
      }
      if (named && indexed) fail("cannot mix x, y with indexed variables");
      Exponent power = 1;
      skip();
      if (at < text.size() && text[at] == '^') {
        ++at;
        skip();
        if (at < text.size() && text[at] == '-') fail("negative exponent");
        power = digits();
      }
      dim = std::max(dim, var + 1);
      mono.push_back({var, power});
      any = true;
    }
    if (!any) fail("expected a monomial");
    monomials.push_back(std::move(mono));
    if (at == text.size()) break;
    ++at;  // the comma
  }

  if (named || dim == 0) dim = std::max<std::size_t>(dim, 2);
  std::vector<ExponentVector> gens;
  for (const auto& mono : monomials) {
    std::vector<Exponent> e(dim, 0);
    for (const auto& f : mono) e[f.var] = monideal::detail::checked_add(e[f.var], f.power);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(dim, std::move(gens));
}

/// Inverse of parse_ideal: generators in descending lexicographic order.
inline std::string format_monomial(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += e.dim() == 2 ? std::string(i == 0 ? "x" : "y") : "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

}  // namespace monideal::cli
