#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/fullness/fullness.hpp"
#include "monideal/normality/conditions.hpp"

namespace monideal {

struct ConsistencyCheck {
  std::string name;
  bool holds = true;
};

struct Classification {
  StaircaseIdeal2 staircase;
  MFullVerdict m_full;
  MonomialIdeal m_full_closure;
  MonomialIdeal integral_closure;
  ConditionReport necessary;
  ConditionReport sufficient;
  bool normal = false;
  std::optional<std::pair<MonomialIdeal, MonomialIdeal>> tight_factors;  // when m-full
  std::vector<ConsistencyCheck> consistency;

  bool consistent() const {
    for (const auto& c : consistency)
      if (!c.holds) return false;
    return true;
  }
};

/// Runs every test on one staircase and cross-checks the known implications:
/// normal => m-full, normal => necessary conditions pass, sufficient => normal,
/// and I in I* in closure(I).
inline Classification classify(const StaircaseIdeal2& s, const NormalityOptions& opts = {}) {
  const auto ideal = s.ideal();
  auto full = is_m_full(s);
  Classification c{s,
                   full,
                   m_full_closure(ideal),
                   integral_closure(ideal, opts.limits),
                   necessary_conditions(s),
                   sufficient_conditions(s),
                   is_normal(s, opts),
                   std::nullopt,
                   {}};
  if (full.is_m_full) c.tight_factors = tight_factorization(s);
  c.consistency = {
      {"normal_implies_m_full", !c.normal || full.is_m_full},
      {"normal_implies_necessary", !c.normal || c.necessary.overall_necessary},
      {"sufficient_implies_normal", !c.sufficient.overall_sufficient || c.normal},
      {"ideal_within_m_full_closure", c.m_full_closure.contains(ideal)},
      {"m_full_closure_within_integral_closure", c.integral_closure.contains(c.m_full_closure)},
  };
  return c;
}

}  // namespace monideal
