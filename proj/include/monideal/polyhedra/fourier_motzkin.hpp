#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/rational.hpp"

namespace monideal {

/// Affine inequality  sum_k coeffs[k] * a_k + constant >= 0  on points a in Q^d.
struct Facet {
  std::vector<Rational> coeffs;
  Rational constant;

  Rational evaluate(std::span<const Rational> point) const {
    Rational s = constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * point[k];
    return s;
  }

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Witness that a point lies in R^d_{>=0} + conv(v_1, ..., v_q).
struct MembershipCertificate {
  std::vector<Rational> lambdas;  // one per generator, >= 0, summing to 1
  std::vector<Rational> slack;    // point - sum lambda_i v_i, >= 0

  bool verifies(std::span<const ExponentVector> gens, std::span<const Rational> point) const {
    if (lambdas.size() != gens.size() || slack.size() != point.size()) return false;
    Rational total = 0;
    for (const auto& l : lambdas) {
      if (l < 0) return false;
      total += l;
    }
    if (total != 1) return false;
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (slack[k] < 0) return false;
      Rational s = slack[k];
      for (std::size_t i = 0; i < gens.size(); ++i) s += lambdas[i] * Rational(gens[i][k]);
      if (s != point[k]) return false;
    }
    return true;
  }
};

namespace detail {

/// Fourier-Motzkin projection of the lambda-system
///
///   lambda >= 0,  sum lambda = 1,  sum lambda_i v_i <= a
///
/// onto the a-coordinates. The constants of every intermediate inequality are
/// affine in a, so the projection is done once per generator set; the stage
/// systems are kept so that a certificate can be back-substituted for any
/// point. Redundant rows are pruned with Chernikov's history rule.
class FourierMotzkin {
 public:
  explicit FourierMotzkin(std::span<const ExponentVector> gens) : gens_(gens.begin(), gens.end()) {
    if (gens_.empty()) throw InvalidArgument("Fourier-Motzkin needs at least one generator");
    dim_ = gens_.front().dim();
    const std::size_t q = gens_.size();
    nvars_ = q - 1;  // lambda_q = 1 - sum of the others

    std::vector<Row> rows;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Row r = empty_row(rows.size());
      r.lam[i] = 1;
      rows.push_back(std::move(r));
    }
    {
      Row r = empty_row(rows.size());
      for (auto& c : r.lam) c = -1;
      r.constant = 1;
      rows.push_back(std::move(r));
    }
    const auto& last = gens_.back();
    for (std::size_t k = 0; k < dim_; ++k) {
      Row r = empty_row(rows.size());
      for (std::size_t i = 0; i < nvars_; ++i) r.lam[i] = Rational(last[k] - gens_[i][k]);
      r.par[k] = 1;
      r.constant = Rational(-last[k]);
      rows.push_back(std::move(r));
    }

    // Eliminate lambda_{nvars-1}, ..., lambda_0; stages_[j] involves lambda_0..lambda_j.
    stages_.resize(nvars_);
    for (std::size_t step = 0; step < nvars_; ++step) {
      const std::size_t j = nvars_ - 1 - step;
      stages_[j] = rows;
      rows = eliminate(rows, j, step + 1);
    }
    for (const auto& r : rows) {
      bool constant_only = std::all_of(r.par.begin(), r.par.end(), [](const Rational& c) { return c == 0; });
      if (constant_only) {
        if (r.constant < 0) throw InconsistencyError("Newton polyhedron projection is empty");
        continue;
      }
      Facet f{r.par, r.constant};
      if (std::find(facets_.begin(), facets_.end(), f) == facets_.end()) facets_.push_back(std::move(f));
    }
  }

  const std::vector<Facet>& facets() const noexcept { return facets_; }

  bool contains(std::span<const Rational> point) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.evaluate(point) >= 0; });
  }

  std::optional<MembershipCertificate> certify(std::span<const Rational> point) const {
    if (!contains(point)) return std::nullopt;
    std::vector<Rational> lam(nvars_, Rational(0));
    for (std::size_t j = 0; j < nvars_; ++j) {
      std::optional<Rational> lower, upper;
      for (const auto& r : stages_[j]) {
        Rational rest = r.constant;
        for (std::size_t k = 0; k < dim_; ++k) rest += r.par[k] * point[k];
        for (std::size_t i = 0; i < j; ++i) rest += r.lam[i] * lam[i];
        const Rational& c = r.lam[j];
        if (c > 0) {
          Rational bound = -rest / c;
          if (!lower || bound > *lower) lower = bound;
        } else if (c < 0) {
          Rational bound = rest / (-c);
          if (!upper || bound < *upper) upper = bound;
        }
      }
      lam[j] = lower ? *lower : (upper ? *upper : Rational(0));
    }
    MembershipCertificate cert;
    Rational rest = 1;
    for (const auto& l : lam) {
      cert.lambdas.push_back(l);
      rest -= l;
    }
    cert.lambdas.push_back(rest);
    for (std::size_t k = 0; k < dim_; ++k) {
      Rational s = point[k];
      for (std::size_t i = 0; i < gens_.size(); ++i) s -= cert.lambdas[i] * Rational(gens_[i][k]);
      cert.slack.push_back(s);
    }
    if (!cert.verifies(gens_, point)) throw InconsistencyError("Fourier-Motzkin back-substitution failed");
    return cert;
  }

 private:
  struct Row {
    std::vector<Rational> lam;
    std::vector<Rational> par;
    Rational constant;
    std::vector<bool> history;
  };

  Row empty_row(std::size_t index) const {
    Row r{std::vector<Rational>(nvars_, Rational(0)), std::vector<Rational>(dim_, Rational(0)), Rational(0),
          std::vector<bool>(nvars_ + 1 + dim_, false)};
    r.history[index] = true;
    return r;
  }

  // Scale to a canonical positive multiple so duplicates compare equal.
  static void normalize(Row& r) {
    Rational lead = 0;
    for (const auto& c : r.lam)
      if (c != 0) { lead = abs(c); break; }
    if (lead == 0)
      for (const auto& c : r.par)
        if (c != 0) { lead = abs(c); break; }
    if (lead == 0) lead = r.constant == 0 ? Rational(1) : Rational(abs(r.constant));
    for (auto& c : r.lam) c /= lead;
    for (auto& c : r.par) c /= lead;
    r.constant /= lead;
  }

  static std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t var, std::size_t eliminated) {
    std::vector<Row> out;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
      if (r.lam[var] > 0) pos.push_back(&r);
      else if (r.lam[var] < 0) neg.push_back(&r);
      else out.push_back(r);
    }
    for (const Row* p : pos) {
      for (const Row* n : neg) {
        Row c = *p;
        std::size_t hist = 0;
        for (std::size_t h = 0; h < c.history.size(); ++h) {
          c.history[h] = p->history[h] || n->history[h];
          hist += c.history[h];
        }
        if (hist > eliminated + 1) continue;
        const Rational wp = -n->lam[var];
        const Rational wn = p->lam[var];
        for (std::size_t i = 0; i < c.lam.size(); ++i) c.lam[i] = wp * p->lam[i] + wn * n->lam[i];
        for (std::size_t k = 0; k < c.par.size(); ++k) c.par[k] = wp * p->par[k] + wn * n->par[k];
        c.constant = wp * p->constant + wn * n->constant;
        c.lam[var] = 0;
        normalize(c);
        bool dup = std::any_of(out.begin(), out.end(), [&](const Row& o) {
          return o.lam == c.lam && o.par == c.par && o.constant == c.constant;
        });
        if (!dup) out.push_back(std::move(c));
      }
    }
    return out;
  }

  std::vector<ExponentVector> gens_;
  std::size_t dim_ = 0;
  std::size_t nvars_ = 0;
  std::vector<std::vector<Row>> stages_;
  std::vector<Facet> facets_;
};

}  // namespace detail
}  // namespace monideal
