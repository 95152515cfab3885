#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "monideal/core/error.hpp"

namespace monideal::poly {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a polynomial term; unused trailing slots stay zero.
struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};
  std::int32_t deg = 0;

  static Monomial from(const std::vector<std::int64_t>& exps) {
    if (exps.size() > kMaxVars) throw InvalidArgument("too many variables for a polynomial ring");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > std::numeric_limits<std::int32_t>::max() / 2)
        throw InvalidArgument("polynomial exponent out of range");
      m.e[i] = static_cast<std::int32_t>(exps[i]);
      m.deg += m.e[i];
    }
    return m;
  }

  static Monomial var(std::size_t i, std::int32_t power = 1) {
    Monomial m;
    m.e.at(i) = power;
    m.deg = power;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::int64_t s = std::int64_t{a.e[i]} + b.e[i];
      if (s > std::numeric_limits<std::int32_t>::max()) throw OverflowError("polynomial exponent overflow");
      m.e[i] = static_cast<std::int32_t>(s);
    }
    m.deg = a.deg + b.deg;
    return m;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] - b.e[i];
    m.deg = a.deg - b.deg;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  bool uses_any(std::size_t first, std::size_t last) const {
    for (std::size_t i = first; i < last; ++i)
      if (e[i]) return true;
    return false;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

enum class OrderKind { Lex, DegRevLex, Block };

/// Monomial order on the first `nvars` variables.
///
/// Block(k) compares the first k variables by degrevlex and breaks ties with
/// degrevlex on the remaining ones, so it eliminates the first k variables.
struct TermOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t nvars = 0;
  std::size_t block = 0;

  static TermOrder lex(std::size_t n) { return {OrderKind::Lex, check(n), 0}; }
  static TermOrder degrevlex(std::size_t n) { return {OrderKind::DegRevLex, check(n), 0}; }
  static TermOrder elimination(std::size_t n, std::size_t k) {
    if (k > n) throw InvalidArgument("elimination block larger than the ring");
    return {OrderKind::Block, check(n), k};
  }

  /// Negative, zero or positive as a < b, a = b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::DegRevLex:
        return grevlex(a, b, 0, nvars);
      case OrderKind::Block:
        if (int c = grevlex(a, b, 0, block)) return c;
        return grevlex(a, b, block, nvars);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  static std::size_t check(std::size_t n) {
    if (n == 0 || n > kMaxVars) throw InvalidArgument("polynomial ring needs 1.." + std::to_string(kMaxVars) + " variables");
    return n;
  }

  static int grevlex(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = first; i < last; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = last; i-- > first;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace monideal::poly
