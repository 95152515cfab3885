#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monideal/core/staircase.hpp"
#include "monideal/fullness/fullness.hpp"
#include "monideal/polyhedra/closure.hpp"

namespace monideal {

enum class CheckStatus { Pass, Fail, Vacuous };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
  }
  return "?";
}

/// One evaluated inequality `lhs relation rhs` at a staircase index.
struct ConditionCheck {
  std::string suite;
  std::string id;
  std::size_t index = 0;
  CheckStatus status = CheckStatus::Vacuous;
  Exponent lhs = 0;
  std::string relation;
  Exponent rhs = 0;
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  bool overall_necessary = true;
  bool overall_sufficient = false;
  std::optional<std::size_t> profile_k;     // smallest k meeting the staircase profile
  std::vector<std::string> suites_passed;   // sufficient suites whose checks all pass
};

namespace detail {

inline Exponent ceil_half(Exponent v) { return v / 2 + (v % 2); }  // v >= 0

inline ConditionCheck compare(std::string suite, std::string id, std::size_t index, Exponent lhs,
                              const char* relation, Exponent rhs) {
  bool ok = std::string(relation) == "==" ? lhs == rhs : lhs <= rhs;
  return {std::move(suite), std::move(id), index, ok ? CheckStatus::Pass : CheckStatus::Fail, lhs, relation, rhs};
}

inline ConditionCheck vacuous(std::string suite, std::string id, std::size_t index) {
  return {std::move(suite), std::move(id), index, CheckStatus::Vacuous, 0, "", 0};
}

/// Whether k satisfies the four-part staircase profile (1-based sequences).
inline bool profile_holds(const StaircaseIdeal2& s, std::size_t k) {
  const std::size_t n = s.size();
  for (std::size_t j = 1; j + k <= n; ++j)
    if (s.a(n - j) != static_cast<Exponent>(j)) return false;
  for (std::size_t j = 1; j + 1 <= k; ++j)
    if (s.b(n - j) != static_cast<Exponent>(j)) return false;
  for (std::size_t j = 2; j + k <= n; ++j)
    if (s.b(j) > ceil_half(s.b(j - 1) + s.b(j + 1))) return false;
  for (std::size_t j = 2; j + 1 <= k; ++j)
    if (s.a(j) > ceil_half(s.a(j - 1) + s.a(j + 1))) return false;
  return true;
}

}  // namespace detail

/// Necessary conditions for normality. A failing check proves the ideal is
/// not normal; passing everything proves nothing.
///
/// Suites: gap_alternative and wide_y_gap_forces_x_tight (per gap index),
/// midpoint_x and midpoint_y (per consecutive triple, vacuous unless the gap
/// hypothesis holds), staircase_profile (existential over k).
inline ConditionReport necessary_conditions(const StaircaseIdeal2& s) {
  const std::size_t n = s.size();
  ConditionReport r;
  for (std::size_t i = 1; i < n; ++i)
    r.checks.push_back(detail::compare("gap_alternative", "min_gap_is_one", i, std::min(s.x_gap(i), s.y_gap(i)), "==", 1));

  for (std::size_t i = 1; i < n; ++i) {
    if (s.y_gap(i) <= 1) {
      r.checks.push_back(detail::vacuous("wide_y_gap_forces_x_tight", "x_gap", i));
      continue;
    }
    r.checks.push_back(detail::compare("wide_y_gap_forces_x_tight", "x_gap", i, s.x_gap(i), "==", 1));
    if (i + 1 < n) r.checks.push_back(detail::compare("wide_y_gap_forces_x_tight", "next_x_gap", i, s.x_gap(i + 1), "==", 1));
  }

  for (std::size_t i = 1; i + 2 <= n; ++i) {
    if (s.y_gap(i) == 1 && s.y_gap(i + 1) == 1)
      r.checks.push_back(detail::compare("midpoint_x", "a_middle", i, s.a(i + 1), "<=", detail::ceil_half(s.a(i) + s.a(i + 2))));
    else
      r.checks.push_back(detail::vacuous("midpoint_x", "a_middle", i));
    if (s.x_gap(i) == 1 && s.x_gap(i + 1) == 1)
      r.checks.push_back(detail::compare("midpoint_y", "b_middle", i, s.b(n - i), "<=",
                                         detail::ceil_half(s.b(n - i - 1) + s.b(n - i + 1))));
    else
      r.checks.push_back(detail::vacuous("midpoint_y", "b_middle", i));
  }

  for (std::size_t k = 1; k <= n && !r.profile_k; ++k)
    if (detail::profile_holds(s, k)) r.profile_k = k;
  r.checks.push_back({"staircase_profile", "exists_k", r.profile_k.value_or(0),
                      r.profile_k ? CheckStatus::Pass : CheckStatus::Fail, static_cast<Exponent>(r.profile_k.value_or(0)),
                      "in", static_cast<Exponent>(n)});

  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail) r.overall_necessary = false;
  return r;
}

/// Sufficient conditions for normality. A passing suite proves the ideal is
/// normal.
///
/// Suites: x_tight_concave_y (all x-gaps 1, b concave), y_tight_concave_x
/// (the mirror image) and, for m-full ideals, m_full_split_concave, which
/// splits the concavity tests at the index k of is_m_full.
inline ConditionReport sufficient_conditions(const StaircaseIdeal2& s) {
  const std::size_t n = s.size();
  ConditionReport r;
  r.overall_necessary = true;  // not evaluated here

  auto run_suite = [&](const std::string& suite, auto&& body) {
    const std::size_t first = r.checks.size();
    body(suite);
    bool ok = true;
    for (std::size_t c = first; c < r.checks.size(); ++c) ok = ok && r.checks[c].status != CheckStatus::Fail;
    if (ok) r.suites_passed.push_back(suite);
  };
  auto concave = [&](const std::string& suite, const char* id, const std::vector<Exponent>& seq1, std::size_t lo,
                     std::size_t hi) {
    // 2 s_j <= s_{j-1} + s_{j+1} for 1-based j in [lo, hi]
    for (std::size_t j = lo; j <= hi; ++j)
      r.checks.push_back(detail::compare(suite, id, j, 2 * seq1[j - 1], "<=", seq1[j - 2] + seq1[j]));
  };

  run_suite("x_tight_concave_y", [&](const std::string& suite) {
    for (std::size_t i = 1; i < n; ++i) r.checks.push_back(detail::compare(suite, "x_gap", i, s.x_gap(i), "==", 1));
    concave(suite, "b_concave", s.b_sequence(), 2, n - 1);
  });
  run_suite("y_tight_concave_x", [&](const std::string& suite) {
    for (std::size_t i = 1; i < n; ++i) r.checks.push_back(detail::compare(suite, "y_gap", i, s.y_gap(i), "==", 1));
    concave(suite, "a_concave", s.a_sequence(), 2, n - 1);
  });
  const auto full = is_m_full(s);
  if (full.is_m_full) {
    run_suite("m_full_split_concave", [&](const std::string& suite) {
      const std::size_t k = full.k;
      concave(suite, "b_concave", s.b_sequence(), 2, n - k);
      concave(suite, "a_concave", s.a_sequence(), 2, k - 1);
    });
  }
  r.overall_sufficient = !r.suites_passed.empty();
  return r;
}

struct NormalityOptions {
  unsigned power_bound = 3;
  ClosureLimits limits{};
};

/// Exact normality test in two variables: the ideal is normal iff it is
/// integrally closed. As a redundant check, powers up to `power_bound` of a
/// normal ideal must also be integrally closed.
inline bool is_normal(const StaircaseIdeal2& s, const NormalityOptions& opts = {}) {
  const auto ideal = s.ideal();
  const bool closed = integral_closure(ideal, opts.limits) == ideal;
  if (closed)
    for (unsigned m = 2; m <= opts.power_bound; ++m)
      if (power_closure(ideal, m, opts.limits) != power(ideal, m))
        throw InconsistencyError("integrally closed ideal has a power that is not integrally closed");
  return closed;
}

}  // namespace monideal
