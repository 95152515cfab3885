#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "monideal/cli/parse.hpp"
#include "monideal/normality/classify.hpp"
#include "monideal/polyhedra/pick.hpp"
#include "monideal/polyhedra/rounding.hpp"
#include "monideal/rees/equations.hpp"

namespace monideal::cli {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers; everything else is an
/// exact string ("p/q" or a long integer).
inline Json exact(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline Json exact(const Rational& q) {
  if (q.get_den() == 1) return exact(Integer(q.get_num()));
  return Json(q.get_str());
}

inline Json to_json(const ExponentVector& e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < e.dim(); ++i) out.push_back(e[i]);
  return out;
}

inline Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"text", format_ideal(ideal)}, {"exponents", gens}, {"generator_count", ideal.size()}};
}

inline Json to_json(const StaircaseIdeal2& s) {
  return Json{{"n", s.size()}, {"a", s.a_sequence()}, {"b", s.b_sequence()}};
}

inline Json to_json(const MFullVerdict& v) {
  Json out{{"m_full", v.is_m_full}, {"order", v.witness_order}};
  if (v.is_m_full) out["split_index"] = v.k;
  else out["failure"] = v.failure;
  return out;
}

inline Json to_json(const ConditionCheck& c) {
  Json out{{"suite", c.suite}, {"id", c.id}, {"index", c.index}, {"status", to_string(c.status)}};
  if (c.status != CheckStatus::Vacuous) {
    out["lhs"] = c.lhs;
    out["relation"] = c.relation;
    out["rhs"] = c.rhs;
  }
  return out;
}

inline Json necessary_json(const ConditionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json out{{"all_pass", r.overall_necessary}, {"checks", checks}};
  out["profile_k"] = r.profile_k ? Json(*r.profile_k) : Json(nullptr);
  return out;
}

inline Json sufficient_json(const ConditionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"some_suite_passes", r.overall_sufficient}, {"suites_passed", r.suites_passed}, {"checks", checks}};
}

inline Json to_json(const Classification& c) {
  Json consistency = Json::object();
  for (const auto& k : c.consistency) consistency[k.name] = k.holds;
  Json out{{"staircase", to_json(c.staircase)},
           {"m_full", to_json(c.m_full)},
           {"m_full_closure", to_json(c.m_full_closure)},
           {"integral_closure", to_json(c.integral_closure)},
           {"necessary", necessary_json(c.necessary)},
           {"sufficient", sufficient_json(c.sufficient)},
           {"normal", c.normal},
           {"consistency", consistency},
           {"consistent", c.consistent()}};
  if (c.tight_factors)
    out["tight_factors"] = Json{{"x_tight", to_json(c.tight_factors->first)}, {"y_tight", to_json(c.tight_factors->second)}};
  return out;
}

inline Json to_json(const RoundingVerdict& v, const ExponentVector& box) {
  Json out{{"holds", v.holds}, {"cells_checked", v.cells_checked}, {"box", to_json(box)}};
  if (v.violation)
    out["violation"] = Json{{"w", to_json(v.violation->w)},
                            {"integer_optimum", exact(v.violation->integer_optimum)},
                            {"lp_optimum", exact(v.violation->lp_optimum)},
                            {"lp_floor", exact(floor_of(v.violation->lp_optimum))}};
  return out;
}

inline Json to_json(const LatticePolytope2& p, const PickReport& r) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(Json::array({v.x, v.y}));
  return Json{{"vertices", verts},
              {"area", exact(r.area)},
              {"lattice_points", r.counts.total},
              {"boundary_points", r.counts.boundary},
              {"interior_points", r.counts.interior},
              {"boundary_by_edge_gcd", r.gcd_boundary},
              {"holds", r.holds}};
}

namespace detail {

inline std::string entry_text(const rees::MatrixEntry& e) {
  if (e.is_zero()) return "0";
  std::string m = format_monomial(e.exps);
  return e.sign < 0 ? "-" + m : m;
}

inline Json polys(const std::vector<poly::Polynomial>& ps, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(poly::to_string(p, names));
  return out;
}

inline Json poly_matrix(const std::vector<std::vector<poly::Polynomial>>& m, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(polys(row, names));
  return out;
}

}  // namespace detail

inline Json to_json(const rees::MonomialMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(detail::entry_text(e));
    rows.push_back(r);
  }
  return rows;
}

inline Json to_json(const rees::ReductionVerdict& v) {
  Json out{{"bound", rees::to_string(v.bound)},
           {"certified", v.certified},
           {"trials", v.trials},
           {"seed", v.seed},
           {"coefficient_bound", v.coefficient_bound}};
  if (v.certified) {
    out["witness_trial"] = v.witness_trial;
    const std::vector<std::string> xy{"x", "y"};
    out["witness"] = detail::polys(v.witness, xy);
  }
  return out;
}

inline Json to_json(const rees::ExpectedEquations& e) {
  return Json{{"by_minors", e.by_minors},
              {"by_height", e.by_height},
              {"fiber_minor_height", e.fiber_minor_height},
              {"hypothesis_verified", e.hypothesis_verified},
              {"routes_agree", e.routes_agree}};
}

inline Json to_json(const rees::FiberHilbert& f) {
  Json out{{"mu", f.mu}, {"m_full", f.m_full}};
  if (f.m_full) {
    out["expected"] = f.expected;
    out["matches_expected"] = f.matches_expected;
  }
  return out;
}

inline Json to_json(const rees::ReesPresentation& p) {
  const auto names = rees::rees_variable_names(p.staircase.size());
  const auto tnames = rees::fiber_variable_names(p.staircase.size());
  Json quadrics = Json::array();
  for (const auto& q : p.quadrics)
    quadrics.push_back(Json{{"columns", {q.first_col, q.second_col}}, {"value", poly::to_string(q.value, names)}});
  Json out{{"syzygy_matrix", to_json(p.phi)},
           {"content", Json{{"r", p.dual.content.r}, {"s", p.dual.content.s}}},
           {"jacobian_dual", detail::poly_matrix(p.dual.b, names)},
           {"jacobian_dual_constant_part", detail::poly_matrix(p.dual.b0, tnames)},
           {"linear_equations", detail::polys(p.linear, names)},
           {"quadrics", quadrics},
           {"reduction_number", to_json(p.reduction)},
           {"expected_equations", to_json(p.expected)},
           {"variables", names}};
  if (p.full_ideal) {
    out["defining_ideal"] = detail::polys(p.full_ideal->basis, names);
    out["extra_generators"] = detail::polys(p.extra_generators, names);
    out["contains_known_equations"] = *p.contains_known_equations;
  }
  if (p.routes_agree) out["colon_route_agrees"] = *p.routes_agree;
  if (p.quadratically_generated) out["generated_in_t_degree_two"] = *p.quadratically_generated;
  return out;
}

}  // namespace monideal::cli
