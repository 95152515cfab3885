#pragma once

#include <string>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/monomial_ideal.hpp"

namespace monideal {

/// Two-variable zero-dimensional monomial ideal in staircase normal form.
///
/// The ideal is (x^{a_1}, x^{a_2} y^{b_{n-1}}, ..., x^{a_{n-1}} y^{b_2}, y^{b_1})
/// with a_1 > ... > a_n = 0 and b_1 > ... > b_n = 0. Generator i (1-based)
/// is the point P_i = (a_i, b_{n-i+1}).
///
/// Index convention: every accessor below takes the 1-based index used in
/// the formulas (a(1) = a_1, b(n) = 0). Storage is 0-based; this class is
/// the only place that translates.
class StaircaseIdeal2 {
 public:
  StaircaseIdeal2(std::vector<Exponent> a, std::vector<Exponent> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw InvalidArgument("staircase sequences must have equal length");
    if (a_.size() < 2) throw InvalidArgument("staircase needs n >= 2 generators");
    check_sequence(a_, "a");
    check_sequence(b_, "b");
  }

  std::size_t size() const noexcept { return a_.size(); }

  Exponent a(std::size_t i) const { return a_.at(checked_index(i)); }
  Exponent b(std::size_t j) const { return b_.at(checked_index(j)); }

  const std::vector<Exponent>& a_sequence() const noexcept { return a_; }
  const std::vector<Exponent>& b_sequence() const noexcept { return b_; }

  /// P_i = (a_i, b_{n-i+1}).
  ExponentVector point(std::size_t i) const { return ExponentVector{a(i), b(size() - i + 1)}; }

  /// a_i - a_{i+1}, the x-drop from P_i to P_{i+1} (1 <= i < n).
  Exponent x_gap(std::size_t i) const { return a(i) - a(i + 1); }

  /// b_{n-i} - b_{n-i+1}, the y-rise from P_i to P_{i+1} (1 <= i < n).
  Exponent y_gap(std::size_t i) const { return b(size() - i) - b(size() - i + 1); }

  MonomialIdeal ideal() const {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 1; i <= size(); ++i) gens.push_back(point(i));
    return MonomialIdeal(2, std::move(gens));
  }

  friend bool operator==(const StaircaseIdeal2&, const StaircaseIdeal2&) = default;

 private:
  std::size_t checked_index(std::size_t i) const {
    if (i < 1 || i > a_.size())
      throw InvalidArgument("staircase index " + std::to_string(i) + " outside 1.." + std::to_string(a_.size()));
    return i - 1;
  }

  static void check_sequence(const std::vector<Exponent>& s, const char* name) {
    if (s.back() != 0) throw InvalidArgument(std::string("sequence ") + name + " must end in 0");
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] <= s[i + 1]) throw InvalidArgument(std::string("sequence ") + name + " must be strictly decreasing");
  }

  std::vector<Exponent> a_;
  std::vector<Exponent> b_;
};

/// Staircase form of a zero-dimensional ideal in two variables.
inline StaircaseIdeal2 to_staircase(const MonomialIdeal& ideal) {
  if (ideal.dim() != 2) throw InvalidArgument("staircase form needs exactly 2 variables");
  if (!ideal.is_zero_dimensional()) throw NotZeroDimensional("ideal has no pure power of x or of y");
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no staircase form");
  // Generators are already sorted by descending x-exponent, i.e. ascending y.
  const std::size_t n = ideal.size();
  std::vector<Exponent> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = ideal[i][0];
    b[n - 1 - i] = ideal[i][1];
  }
  return StaircaseIdeal2(std::move(a), std::move(b));
}

}  // namespace monideal
