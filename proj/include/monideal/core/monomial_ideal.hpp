#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/exponent.hpp"

namespace monideal {

/// A monomial ideal in d variables, held as its minimal generating set.
///
/// Generators are stored in descending lexicographic order (x_1 > x_2 > ...),
/// which in two variables is the listing x^{a_1}, ..., y^{b_1}. Two ideals are
/// equal iff their generator lists are equal.
class MonomialIdeal {
 public:
  /// Builds the ideal generated by `raw`; non-minimal generators are dropped.
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> raw) : dim_(dim), gens_(std::move(raw)) {
    if (dim_ == 0) throw InvalidArgument("ideal dimension must be >= 1");
    if (gens_.empty()) throw InvalidArgument("monomial ideal needs at least one generator");
    for (const auto& g : gens_)
      if (g.dim() != dim_)
        throw DimensionMismatch("generator of length " + std::to_string(g.dim()) + " in an ideal of dimension " +
                                std::to_string(dim_));
    normalize();
  }

  /// The unit ideal (1).
  static MonomialIdeal unit(std::size_t dim) { return MonomialIdeal(dim, {ExponentVector::zero(dim)}); }

  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t dim) {
    std::vector<ExponentVector> g;
    for (std::size_t i = 0; i < dim; ++i) g.push_back(ExponentVector::unit(dim, i));
    return MonomialIdeal(dim, std::move(g));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::span<const ExponentVector> generators() const noexcept { return gens_; }
  const ExponentVector& operator[](std::size_t i) const { return gens_[i]; }

  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  bool contains(const ExponentVector& a) const {
    if (a.dim() != dim_) throw DimensionMismatch("point dimension does not match ideal dimension");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
  }

  /// Ideal inclusion: every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const {
    require_same_dim(other);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
  }

  /// True iff the ideal contains a pure power of every variable.
  bool is_zero_dimensional() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      bool found = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) {
        for (std::size_t j = 0; j < dim_; ++j)
          if (j != i && g[j] != 0) return false;
        return true;
      });
      if (!found) return false;
    }
    return true;
  }

  /// Largest exponent of variable i among the generators.
  Exponent max_exponent(std::size_t i) const {
    Exponent m = 0;
    for (const auto& g : gens_) m = std::max(m, g[i]);
    return m;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  void require_same_dim(const MonomialIdeal& other) const {
    if (dim_ != other.dim_)
      throw DimensionMismatch("ideals in " + std::to_string(dim_) + " and " + std::to_string(other.dim_) +
                              " variables");
  }

 private:
  void normalize() {
    // Low degree first: a divisor always precedes its multiples.
    std::sort(gens_.begin(), gens_.end(), [](const ExponentVector& a, const ExponentVector& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<ExponentVector> kept;
    kept.reserve(gens_.size());
    for (auto& g : gens_) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>{});
    gens_ = std::move(kept);
  }

  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// The antichain of componentwise-minimal elements of `raw`.
inline MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> raw) {
  return MonomialIdeal(dim, std::move(raw));
}

inline bool contains(const MonomialIdeal& ideal, const ExponentVector& a) { return ideal.contains(a); }

inline MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  lhs.require_same_dim(rhs);
  std::vector<ExponentVector> sums;
  sums.reserve(lhs.size() * rhs.size());
  for (const auto& g : lhs.generators())
    for (const auto& h : rhs.generators()) sums.push_back(g + h);
  return MonomialIdeal(lhs.dim(), std::move(sums));
}

inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) throw InvalidArgument("power exponent must be >= 1");
  MonomialIdeal out = ideal;
  for (unsigned i = 1; i < m; ++i) out = multiply(out, ideal);
  return out;
}

/// The colon (I : x^m), generated by max(g - m, 0) over the generators g.
inline MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExponentVector& m) {
  if (m.dim() != ideal.dim()) throw DimensionMismatch("colon monomial dimension does not match ideal");
  std::vector<ExponentVector> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.generators()) out.push_back(g.monus(m));
  return MonomialIdeal(ideal.dim(), std::move(out));
}

/// Minimum total degree of a generator.
inline Exponent order(const MonomialIdeal& ideal) {
  Exponent best = ideal[0].degree();
  for (const auto& g : ideal.generators()) best = std::min(best, g.degree());
  return best;
}

}  // namespace monideal
