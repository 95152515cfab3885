#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/core/rational.hpp"
#include "monideal/polyhedra/fourier_motzkin.hpp"

namespace monideal {

/// The Newton polyhedron R^d_{>=0} + conv(v_1, ..., v_q) of a monomial ideal.
///
/// For a zero-dimensional ideal in two variables the polyhedron is stored as
/// its lower-left convex chain of vertices and tested with integer cross
/// products. Everything else goes through a one-off Fourier-Motzkin
/// projection of the lambda-system.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal)
      : gens_(ideal.generators().begin(), ideal.generators().end()), dim_(ideal.dim()) {
    if (dim_ == 2 && ideal.is_zero_dimensional() && !ideal.is_unit()) {
      build_chain();
    } else {
      projection_ = std::make_shared<detail::FourierMotzkin>(gens_);
      facets_ = projection_->facets();
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const ExponentVector> generators() const noexcept { return gens_; }

  bool has_chain() const noexcept { return !chain_.empty(); }

  /// Indices into generators() of the chain vertices, by ascending x.
  const std::vector<std::size_t>& chain() const noexcept { return chain_; }

  /// Half-space description: the polyhedron is { a : f(a) >= 0 for all facets f }.
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  bool contains(std::span<const Rational> point) const {
    require_dim(point.size());
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.evaluate(point) >= 0; });
  }

  /// Membership of the point in m * Q.
  bool contains_scaled(const ExponentVector& a, Exponent m) const {
    require_dim(a.dim());
    for (const auto& f : facets_) {
      Rational s = f.constant * Rational(m);
      for (std::size_t k = 0; k < dim_; ++k) s += f.coeffs[k] * Rational(a[k]);
      if (s < 0) return false;
    }
    return true;
  }

  std::optional<MembershipCertificate> certify(std::span<const Rational> point) const {
    require_dim(point.size());
    if (!contains(point)) return std::nullopt;
    if (!has_chain()) return projection_->certify(point);
    return chain_certificate(point);
  }

 private:
  void require_dim(std::size_t d) const {
    if (d != dim_) throw DimensionMismatch("point dimension does not match Newton polyhedron");
  }

  void build_chain() {
    std::vector<std::size_t> order(gens_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return gens_[i][0] < gens_[j][0]; });
    for (std::size_t idx : order) {
      while (chain_.size() >= 2) {
        const auto& o = gens_[chain_[chain_.size() - 2]];
        const auto& a = gens_[chain_.back()];
        const auto& b = gens_[idx];
        Integer cross = Integer(a[0] - o[0]) * Integer(b[1] - o[1]) - Integer(a[1] - o[1]) * Integer(b[0] - o[0]);
        if (cross > 0) break;
        chain_.pop_back();
      }
      chain_.push_back(idx);
    }
    facets_.push_back(Facet{{Rational(1), Rational(0)}, Rational(0)});
    facets_.push_back(Facet{{Rational(0), Rational(1)}, Rational(0)});
    for (std::size_t e = 0; e + 1 < chain_.size(); ++e) {
      const auto& u = gens_[chain_[e]];
      const auto& v = gens_[chain_[e + 1]];
      Rational nx(u[1] - v[1]), ny(v[0] - u[0]);
      facets_.push_back(Facet{{nx, ny}, -(nx * Rational(u[0]) + ny * Rational(u[1]))});
    }
  }

  MembershipCertificate chain_certificate(std::span<const Rational> p) const {
    MembershipCertificate cert;
    cert.lambdas.assign(gens_.size(), Rational(0));
    const auto& right = gens_[chain_.back()];
    if (p[0] >= Rational(right[0])) {
      cert.lambdas[chain_.back()] = 1;
      cert.slack = {p[0] - Rational(right[0]), p[1] - Rational(right[1])};
      return cert;
    }
    for (std::size_t e = 0; e + 1 < chain_.size(); ++e) {
      const auto& u = gens_[chain_[e]];
      const auto& v = gens_[chain_[e + 1]];
      if (p[0] > Rational(v[0])) continue;
      Rational t = (p[0] - Rational(u[0])) / Rational(v[0] - u[0]);
      cert.lambdas[chain_[e]] = 1 - t;
      cert.lambdas[chain_[e + 1]] = t;
      Rational y_on_edge = Rational(u[1]) + t * Rational(v[1] - u[1]);
      cert.slack = {Rational(0), p[1] - y_on_edge};
      return cert;
    }
    throw InconsistencyError("point inside the chain region but not above any edge");
  }

  std::vector<ExponentVector> gens_;
  std::size_t dim_;
  std::vector<std::size_t> chain_;
  std::vector<Facet> facets_;
  std::shared_ptr<const detail::FourierMotzkin> projection_;
};

inline NewtonPolyhedron newton_polytope(const MonomialIdeal& ideal) { return NewtonPolyhedron(ideal); }

inline std::vector<Rational> to_rational(const ExponentVector& a) {
  std::vector<Rational> out;
  for (Exponent c : a.coords()) out.emplace_back(c);
  return out;
}

inline std::optional<MembershipCertificate> in_newton_polyhedron(const NewtonPolyhedron& q,
                                                                 std::span<const Rational> point) {
  return q.certify(point);
}

inline std::optional<MembershipCertificate> in_newton_polyhedron(const NewtonPolyhedron& q, const ExponentVector& a) {
  auto p = to_rational(a);
  return q.certify(p);
}

}  // namespace monideal
