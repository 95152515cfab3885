#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "monideal/core/error.hpp"

namespace monideal {

using Exponent = std::int64_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent addition overflows int64");
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent multiplication overflows int64");
  return out;
}

}  // namespace detail

/// A lattice point a in N^d, the exponent of the monomial x^a.
///
/// Ordering is lexicographic on the coordinates, so x_1 is the most
/// significant variable (x > y in two variables).
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) { validate(); }

  ExponentVector(std::initializer_list<Exponent> coords) : coords_(coords) { validate(); }

  static ExponentVector zero(std::size_t dim) { return ExponentVector(std::vector<Exponent>(dim, 0)); }

  /// x_i^power in dim variables.
  static ExponentVector unit(std::size_t dim, std::size_t i, Exponent power = 1) {
    std::vector<Exponent> c(dim, 0);
    c.at(i) = power;
    return ExponentVector(std::move(c));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Exponent> coords() const noexcept { return coords_; }

  Exponent degree() const {
    Exponent d = 0;
    for (Exponent c : coords_) d = detail::checked_add(d, c);
    return d;
  }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Exponent c) { return c == 0; });
  }

  /// Componentwise a <= b, i.e. x^a divides x^b.
  bool divides(const ExponentVector& other) const {
    require_same_dim(other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] > other.coords_[i]) return false;
    return true;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    a.require_same_dim(b);
    std::vector<Exponent> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::checked_add(a.coords_[i], b.coords_[i]);
    return ExponentVector(std::move(c));
  }

  ExponentVector scaled(Exponent m) const {
    std::vector<Exponent> c(dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::checked_mul(coords_[i], m);
    return ExponentVector(std::move(c));
  }

  /// Componentwise max(a - b, 0): the exponent of x^a / gcd(x^a, x^b).
  ExponentVector monus(const ExponentVector& b) const {
    require_same_dim(b);
    std::vector<Exponent> c(dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max<Exponent>(coords_[i] - b.coords_[i], 0);
    return ExponentVector(std::move(c));
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.coords_ <=> b.coords_; }

  void require_same_dim(const ExponentVector& other) const {
    if (dim() != other.dim())
      throw DimensionMismatch("exponent vectors of length " + std::to_string(dim()) + " and " +
                              std::to_string(other.dim()));
  }

 private:
  void validate() const {
    if (coords_.empty()) throw InvalidArgument("exponent vector must have length >= 1");
    for (Exponent c : coords_)
      if (c < 0) throw InvalidArgument("negative exponent " + std::to_string(c));
  }

  std::vector<Exponent> coords_;
};

}  // namespace monideal
