#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "monideal/core/error.hpp"
#include "monideal/core/rational.hpp"

namespace monideal {

struct LatticePoint2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint2&, const LatticePoint2&) = default;
  friend auto operator<=>(const LatticePoint2&, const LatticePoint2&) = default;
};

namespace detail {

inline Integer cross(const LatticePoint2& o, const LatticePoint2& a, const LatticePoint2& b) {
  return Integer(a.x - o.x) * Integer(b.y - o.y) - Integer(a.y - o.y) * Integer(b.x - o.x);
}

}  // namespace detail

/// Convex lattice polygon, vertices counter-clockwise, no three collinear.
class LatticePolytope2 {
 public:
  /// Convex hull of the given points (Andrew's monotone chain).
  static LatticePolytope2 hull(std::vector<LatticePoint2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw InvalidArgument("polygon needs three non-collinear points");
    std::vector<LatticePoint2> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
      while (k >= 2 && detail::cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && detail::cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
      h[k++] = points[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw InvalidArgument("degenerate polygon: all points are collinear");
    return LatticePolytope2(std::move(h));
  }

  const std::vector<LatticePoint2>& vertices() const noexcept { return vertices_; }

  /// Closed-polygon membership by cross products against each edge.
  bool contains(const LatticePoint2& p) const { return side(p) >= 0; }
  bool on_boundary(const LatticePoint2& p) const { return side(p) == 0; }

 private:
  explicit LatticePolytope2(std::vector<LatticePoint2> v) : vertices_(std::move(v)) {}

  // 1 strictly inside, 0 on the boundary, -1 outside.
  int side(const LatticePoint2& p) const {
    bool boundary = false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[(i + 1) % vertices_.size()];
      Integer c = detail::cross(a, b, p);
      if (c < 0) return -1;
      if (c == 0) boundary = true;
    }
    return boundary ? 0 : 1;
  }

  std::vector<LatticePoint2> vertices_;
};

/// Shoelace area.
inline Rational pick_area(const LatticePolytope2& p) {
  Integer twice = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += Integer(a.x) * Integer(b.y) - Integer(b.x) * Integer(a.y);
  }
  Rational area{twice, Integer(2)};
  area.canonicalize();
  return abs(area);
}

/// Lattice points on the boundary: sum of gcd(|dx|, |dy|) over the edges.
inline std::int64_t boundary_lattice_points(const LatticePolytope2& p) {
  std::int64_t total = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    total += std::gcd(b.x - a.x, b.y - a.y);
  }
  return total;
}

struct LatticeCounts {
  std::int64_t total = 0;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
};

/// Counts lattice points by scanning the bounding box.
inline LatticeCounts scan_lattice_points(const LatticePolytope2& p) {
  const auto& v = p.vertices();
  auto [xmin, xmax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.x < b.x; });
  auto [ymin, ymax] = std::minmax_element(v.begin(), v.end(), [](auto& a, auto& b) { return a.y < b.y; });
  LatticeCounts c;
  for (std::int64_t x = xmin->x; x <= xmax->x; ++x) {
    for (std::int64_t y = ymin->y; y <= ymax->y; ++y) {
      LatticePoint2 q{x, y};
      if (!p.contains(q)) continue;
      ++c.total;
      if (p.on_boundary(q)) ++c.boundary;
      else ++c.interior;
    }
  }
  return c;
}

struct PickReport {
  Rational area;
  LatticeCounts counts;             // from the box scan
  std::int64_t gcd_boundary = 0;    // from edge gcds
  bool holds = false;
};

/// Checks area = |P cap Z^2| - |dP cap Z^2|/2 - 1 = |int P cap Z^2| + |dP cap Z^2|/2 - 1.
inline PickReport pick_check(const LatticePolytope2& p) {
  PickReport r;
  r.area = pick_area(p);
  r.counts = scan_lattice_points(p);
  r.gcd_boundary = boundary_lattice_points(p);
  Rational half_boundary{Integer(r.gcd_boundary), Integer(2)};
  half_boundary.canonicalize();
  Rational first = Rational(r.counts.total) - half_boundary - 1;
  Rational second = Rational(r.counts.interior) + half_boundary - 1;
  r.holds = r.gcd_boundary == r.counts.boundary && first == r.area && second == r.area;
  return r;
}

}  // namespace monideal
