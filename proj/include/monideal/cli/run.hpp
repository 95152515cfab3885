#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "monideal/cli/parse.hpp"
#include "monideal/cli/report.hpp"

namespace monideal::cli {

enum ExitCode { kOk = 0, kError = 1, kInconsistent = 2 };

struct Options {
  unsigned power_bound = 3;
  Exponent wbox = 8;
  std::uint64_t seed = 7;
  unsigned trials = 5;
  std::size_t max_basis = 5000;
  std::int32_t max_degree = 400;
  unsigned jmax = 5;
  bool skip_groebner = false;  // rees/classify: no Groebner basis of the defining ideal
  // scan
  std::size_t scan_n = 4;
  Exponent scan_emax = 8;
  unsigned threads = 0;  // 0: hardware concurrency
  bool only_witnesses = false;
  bool scan_rees = false;
};

struct Outcome {
  Json report;
  int exit_code = kOk;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"closure", "mfull", "normal", "rees", "pick", "irp", "classify", "scan"};
  return names;
}

namespace detail {

inline Json envelope(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

inline StaircaseIdeal2 two_variable_staircase(const MonomialIdeal& ideal) {
  if (ideal.dim() != 2) throw InvalidArgument("this command needs an ideal in x and y");
  return to_staircase(ideal);
}

inline NormalityOptions normality_options(const Options& o) {
  NormalityOptions n;
  n.power_bound = o.power_bound;
  return n;
}

inline rees::ReesOptions rees_options(const Options& o) {
  rees::ReesOptions r;
  r.compute_full_ideal = !o.skip_groebner;
  r.probe.seed = o.seed;
  r.probe.trials = o.trials;
  r.limits.max_basis = o.max_basis;
  r.limits.max_degree = o.max_degree;
  return r;
}

inline Json rees_section(const StaircaseIdeal2& s, const Options& o, int& exit_code) {
  const auto p = rees::rees_presentation(s, rees_options(o));
  Json out = to_json(p);
  out["fiber_hilbert"] = to_json(rees::fiber_hilbert(s, o.jmax));
  const bool ok = p.expected.routes_agree && p.routes_agree.value_or(true) && p.contains_known_equations.value_or(true) &&
                  out["fiber_hilbert"].value("matches_expected", true);
  out["consistent"] = ok;
  if (!ok) exit_code = kInconsistent;
  return out;
}

inline Json classify_section(const StaircaseIdeal2& s, const Options& o, bool with_rees, int& exit_code) {
  const auto c = classify(s, normality_options(o));
  Json out = to_json(c);
  if (!c.consistent()) exit_code = kInconsistent;
  if (with_rees) out["rees"] = rees_section(s, o, exit_code);
  return out;
}

// Strictly decreasing sequences v_1 > ... > v_{len} > 0 with v_1 <= emax.
inline void decreasing_sequences(std::size_t len, Exponent emax, const std::function<void(std::vector<Exponent>&)>& f) {
  std::vector<Exponent> cur;
  std::function<void(Exponent)> rec = [&](Exponent below) {
    if (cur.size() == len) {
      std::vector<Exponent> full = cur;
      full.push_back(0);
      f(full);
      return;
    }
    for (Exponent v = std::min(below - 1, emax); v >= static_cast<Exponent>(len - cur.size()); --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(emax + 1);
}

}  // namespace detail

/// Every staircase with 2 <= n <= n_max generators and exponents <= emax, in
/// a fixed order (n ascending, then a and b in decreasing lexicographic order).
inline std::vector<StaircaseIdeal2> scan_family(std::size_t n_max, Exponent emax) {
  std::vector<StaircaseIdeal2> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::vector<std::vector<Exponent>> seqs;
    detail::decreasing_sequences(n - 1, emax, [&](std::vector<Exponent>& s) { seqs.push_back(s); });
    for (const auto& a : seqs)
      for (const auto& b : seqs) out.emplace_back(a, b);
  }
  return out;
}

inline Outcome run_closure(const MonomialIdeal& ideal, const Options&) {
  Outcome o{detail::envelope("closure")};
  o.report["input"] = to_json(ideal);
  o.report["integral_closure"] = to_json(integral_closure(ideal));
  if (ideal.dim() == 2 && ideal.is_zero_dimensional() && !ideal.is_unit()) {
    const auto chain = m_full_closure_chain(ideal);
    o.report["m_full_closure"] = to_json(chain.back());
    o.report["m_full_closure_steps"] = chain.size() - 1;
  }
  return o;
}

inline Outcome run_mfull(const MonomialIdeal& ideal, const Options&) {
  const auto s = detail::two_variable_staircase(ideal);
  Outcome o{detail::envelope("mfull")};
  o.report["input"] = to_json(ideal);
  const auto v = is_m_full(s);
  o.report["verdict"] = to_json(v);
  o.report["x_tight"] = is_x_tight(s);
  o.report["y_tight"] = is_y_tight(s);
  if (v.is_m_full) {
    const auto [x, y] = tight_factorization(s);
    o.report["tight_factors"] = Json{{"x_tight", to_json(x)}, {"y_tight", to_json(y)}};
  }
  return o;
}

inline Outcome run_normal(const MonomialIdeal& ideal, const Options& opts) {
  const auto s = detail::two_variable_staircase(ideal);
  Outcome o{detail::envelope("normal")};
  o.report["input"] = to_json(ideal);
  o.report["normal"] = is_normal(s, detail::normality_options(opts));
  o.report["necessary"] = necessary_json(necessary_conditions(s));
  o.report["sufficient"] = sufficient_json(sufficient_conditions(s));
  o.report["power_bound"] = opts.power_bound;
  return o;
}

inline Outcome run_rees(const MonomialIdeal& ideal, const Options& opts) {
  const auto s = detail::two_variable_staircase(ideal);
  Outcome o{detail::envelope("rees")};
  o.report["input"] = to_json(ideal);
  o.report["rees"] = detail::rees_section(s, opts, o.exit_code);
  return o;
}

/// Pick's formula on the region under the staircase, conv(0, generators),
/// and on every non-degenerate triangle of three consecutive generators.
inline Outcome run_pick(const MonomialIdeal& ideal, const Options&) {
  const auto s = detail::two_variable_staircase(ideal);
  Outcome o{detail::envelope("pick")};
  o.report["input"] = to_json(ideal);
  std::vector<LatticePoint2> pts{{0, 0}};
  for (std::size_t i = 1; i <= s.size(); ++i) pts.push_back({s.point(i)[0], s.point(i)[1]});
  const auto region = LatticePolytope2::hull(pts);
  o.report["region"] = to_json(region, pick_check(region));
  Json triangles = Json::array();
  bool all = o.report["region"]["holds"].get<bool>();
  for (std::size_t i = 1; i + 2 <= s.size(); ++i) {
    std::vector<LatticePoint2> tri;
    for (std::size_t k = i; k < i + 3; ++k) tri.push_back({s.point(k)[0], s.point(k)[1]});
    if (monideal::detail::cross(tri[0], tri[1], tri[2]) == 0) continue;
    const auto t = LatticePolytope2::hull(tri);
    auto r = pick_check(t);
    all = all && r.holds;
    Json j = to_json(t, r);
    j["first_index"] = i;
    triangles.push_back(j);
  }
  o.report["consecutive_triangles"] = triangles;
  o.report["all_hold"] = all;
  if (!all) o.exit_code = kInconsistent;
  return o;
}

inline Outcome run_irp(const MonomialIdeal& ideal, const Options& opts) {
  Outcome o{detail::envelope("irp")};
  o.report["input"] = to_json(ideal);
  const ExponentVector box(std::vector<Exponent>(ideal.dim(), opts.wbox));
  o.report["rounding"] = to_json(integer_rounding_check(ideal, box), box);
  return o;
}

inline Outcome run_classify(const MonomialIdeal& ideal, const Options& opts) {
  const auto s = detail::two_variable_staircase(ideal);
  Outcome o{detail::envelope("classify")};
  o.report["input"] = to_json(ideal);
  o.report["classification"] = detail::classify_section(s, opts, true, o.exit_code);
  const ExponentVector box{opts.wbox, opts.wbox};
  o.report["classification"]["integer_rounding"] = to_json(integer_rounding_check(ideal, box), box);
  return o;
}

/// Classifies the whole family on `threads` workers; reports are collected
/// per index so the output order never depends on scheduling.
inline Outcome run_scan(const Options& opts) {
  const auto family = scan_family(opts.scan_n, opts.scan_emax);
  std::vector<Json> results(family.size());
  std::vector<int> codes(family.size(), kOk);
  std::vector<std::exception_ptr> errors(family.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      try {
        Json r{{"ideal", format_ideal(family[i].ideal())}};
        r["classification"] = detail::classify_section(family[i], opts, opts.scan_rees, codes[i]);
        results[i] = std::move(r);
      } catch (const InconsistencyError&) {
        codes[i] = kInconsistent;
        errors[i] = std::current_exception();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(family.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Outcome o{detail::envelope("scan")};
  o.report["family"] = Json{{"n_max", opts.scan_n}, {"emax", opts.scan_emax}, {"size", family.size()}};
  Json reports = Json::array(), witnesses = Json::array(), inconsistent = Json::array(), failed = Json::array();
  std::size_t normal = 0, m_full = 0, necessary = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto text = format_ideal(family[i].ideal());
    if (errors[i]) {
      std::string what = "unknown error";
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        what = e.what();
      }
      (codes[i] == kInconsistent ? inconsistent : failed).push_back(Json{{"ideal", text}, {"error", what}});
      continue;
    }
    const auto& c = results[i]["classification"];
    const bool is_normal = c["normal"].get<bool>();
    const bool nec = c["necessary"]["all_pass"].get<bool>();
    normal += is_normal;
    m_full += c["m_full"]["m_full"].get<bool>();
    necessary += nec;
    if (nec && !is_normal) witnesses.push_back(text);
    if (codes[i] == kInconsistent) inconsistent.push_back(Json{{"ideal", text}});
    if (!opts.only_witnesses || (nec && !is_normal)) reports.push_back(std::move(results[i]));
  }
  o.report["reports"] = reports;
  o.report["summary"] = Json{{"total", family.size()},
                             {"normal", normal},
                             {"m_full", m_full},
                             {"necessary_pass", necessary},
                             {"necessary_pass_not_normal", witnesses},
                             {"inconsistent", inconsistent},
                             {"errors", failed}};
  if (!inconsistent.empty()) o.exit_code = kInconsistent;
  else if (!failed.empty()) o.exit_code = kError;
  return o;
}

/// Dispatches a subcommand; `input` is the ideal text (ignored by scan).
inline Outcome run(const std::string& command, const std::string& input, const Options& opts) {
  if (command == "scan") return run_scan(opts);
  const auto ideal = parse_ideal(input);
  Outcome o;
  if (command == "closure") o = run_closure(ideal, opts);
  else if (command == "mfull") o = run_mfull(ideal, opts);
  else if (command == "normal") o = run_normal(ideal, opts);
  else if (command == "rees") o = run_rees(ideal, opts);
  else if (command == "pick") o = run_pick(ideal, opts);
  else if (command == "irp") o = run_irp(ideal, opts);
  else if (command == "classify") o = run_classify(ideal, opts);
  else throw InvalidArgument("unknown subcommand '" + command + "'");
  return o;
}

/// Plain-text rendering: one "path: value" line per leaf.
inline void render_text(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

inline std::string render_text(const Json& j) {
  std::string out;
  render_text(j, "", out);
  return out;
}

}  // namespace monideal::cli
