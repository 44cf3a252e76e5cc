#include "zaklab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zaklab {

namespace {

double shoelace(const std::vector<Eigen::Vector2d>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * s;
}

// Proper segment intersection (interiors cross). Shared endpoints of adjacent
// edges do not count.
bool segments_properly_intersect(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                 const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
  auto orient = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q, const Eigen::Vector2d& r) {
    return (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x());
  };
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
         o4 != 0;
}

double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                              const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = (p - a).dot(ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

// phi(s) = (1 - e^{-2 pi i s}) / (2 pi i s), phi(0) = 1. Series branch for
// small s (removable singularity of the edge formula).
complexd phi(double s) {
  const double t = kTwoPi * s;
  if (std::abs(t) < 1e-6) {
    const complexd z(0.0, -t);
    // sum_{k>=0} z^k / (k+1)!
    return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
  }
  const complexd num = 1.0 - std::polar(1.0, -t);
  return num / complexd(0.0, t);
}

complexd interval_ft(const Interval& iv, double omega) {
  const double len = iv.length();
  return len * phi(omega * len) * std::polar(1.0, -kTwoPi * omega * iv.lo);
}

complexd polygon_ft(const Polygon& poly, const Eigen::Vector2d& omega) {
  const double w2 = omega.squaredNorm();
  if (w2 < 1e-16) return complexd(poly.area(), 0.0);
  complexd edge_sum(0.0, 0.0);
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d a = v[i];
    const Eigen::Vector2d e = v[(i + 1) % n] - a;
    const double cross = omega.x() * e.y() - omega.y() * e.x();
    if (cross == 0.0) continue;
    edge_sum += cross * std::polar(1.0, -kTwoPi * omega.dot(a)) * phi(omega.dot(e));
  }
  // divergence theorem with V = omega e^{-2 pi i omega . x}
  return edge_sum / complexd(0.0, -kTwoPi * w2);
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(errc::degenerate_domain, "interval union is empty");
  double total = 0.0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!(parts_[i].lo < parts_[i].hi) || !std::isfinite(parts_[i].lo) ||
        !std::isfinite(parts_[i].hi))
      fail(errc::invalid_argument, "interval must satisfy lo < hi with finite endpoints");
    if (i > 0 && parts_[i - 1].hi > parts_[i].lo)
      fail(errc::invalid_argument, "intervals must be sorted and pairwise disjoint");
    total += parts_[i].length();
  }
  if (total <= 0.0) fail(errc::degenerate_domain, "interval union has zero measure");
}

Polygon::Polygon(std::vector<Eigen::Vector2d> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) fail(errc::invalid_argument, "polygon needs at least 3 vertices");
  for (const auto& v : verts_)
    if (!v.allFinite()) fail(errc::invalid_argument, "polygon vertex not finite");
  area_ = shoelace(verts_);
  if (!(area_ > 0.0))
    fail(errc::invalid_argument, "polygon vertices must be counterclockwise with positive area");
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent edges share a vertex
      if (segments_properly_intersect(verts_[i], verts_[(i + 1) % n], verts_[j],
                                      verts_[(j + 1) % n]))
        fail(errc::invalid_argument, "polygon is self-intersecting");
    }
  }
}

bool Polygon::contains(const Eigen::Vector2d& p) const {
  // Crossing test with strict comparisons; boundary points are grouped with
  // the cell just above / to the right, which is what makes lattice translates
  // of a tiling polygon partition every point.
  bool inside = false;
  const std::size_t n = verts_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double yi = verts_[i].y(), yj = verts_[j].y();
    if ((yi > p.y()) != (yj > p.y())) {
      const double xint = verts_[i].x() + (p.y() - yi) * (verts_[j].x() - verts_[i].x()) / (yj - yi);
      if (p.x() < xint) inside = !inside;
    }
  }
  return inside;
}

double Polygon::boundary_distance(const Eigen::Vector2d& p) const {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, point_segment_distance(p, verts_[i], verts_[(i + 1) % n]));
  return best;
}

BoundingBox Polygon::bbox() const {
  Eigen::VectorXd lo(2), hi(2);
  lo << verts_[0].x(), verts_[0].y();
  hi = lo;
  for (const auto& v : verts_) {
    lo.x() = std::min(lo.x(), v.x());
    lo.y() = std::min(lo.y(), v.y());
    hi.x() = std::max(hi.x(), v.x());
    hi.y() = std::max(hi.y(), v.y());
  }
  return {lo, hi};
}

PolygonUnion::PolygonUnion(std::vector<Polygon> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(errc::degenerate_domain, "polygon union is empty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = i + 1; j < parts_.size(); ++j) {
      const auto& a = parts_[i].vertices();
      const auto& b = parts_[j].vertices();
      for (std::size_t ei = 0; ei < a.size(); ++ei)
        for (std::size_t ej = 0; ej < b.size(); ++ej)
          if (segments_properly_intersect(a[ei], a[(ei + 1) % a.size()], b[ej],
                                          b[(ej + 1) % b.size()]))
            fail(errc::invalid_argument, "polygon union parts overlap");
      for (const auto& v : a)
        if (parts_[j].contains(v) && parts_[j].boundary_distance(v) > 1e-12)
          fail(errc::invalid_argument, "polygon union parts overlap");
      for (const auto& v : b)
        if (parts_[i].contains(v) && parts_[i].boundary_distance(v) > 1e-12)
          fail(errc::invalid_argument, "polygon union parts overlap");
    }
  }
}

DomainSpec make_interval_domain(double lo, double hi) {
  return DomainSpec(IntervalUnion({Interval{lo, hi}}));
}

DomainSpec make_interval_union(const std::vector<std::pair<double, double>>& intervals) {
  std::vector<Interval> parts;
  parts.reserve(intervals.size());
  for (const auto& [a, b] : intervals) parts.push_back(Interval{a, b});
  return DomainSpec(IntervalUnion(std::move(parts)));
}

DomainSpec make_polygon(const std::vector<std::pair<double, double>>& vertices) {
  std::vector<Eigen::Vector2d> verts;
  verts.reserve(vertices.size());
  for (const auto& [x, y] : vertices) verts.emplace_back(x, y);
  return DomainSpec(Polygon(std::move(verts)));
}

DomainSpec make_polygon_union(const std::vector<std::vector<std::pair<double, double>>>& parts) {
  std::vector<Polygon> polys;
  polys.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<Eigen::Vector2d> verts;
    verts.reserve(part.size());
    for (const auto& [x, y] : part) verts.emplace_back(x, y);
    polys.emplace_back(std::move(verts));
  }
  return DomainSpec(PolygonUnion(std::move(polys)));
}

bool contains(const DomainSpec& dom, const Point& p) {
  if (p.size() != dom.dim()) fail(errc::dimension_mismatch, "point dimension != domain dimension");
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          const double x = p[0];
          for (const auto& iv : d.parts())
            if (x >= iv.lo && x < iv.hi) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return d.contains(Eigen::Vector2d(p[0], p[1]));
        } else {
          const Eigen::Vector2d q(p[0], p[1]);
          for (const auto& part : d.parts())
            if (part.contains(q)) return true;
          return false;
        }
      },
      dom.variant());
}

double measure(const DomainSpec& dom) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          double s = 0.0;
          for (const auto& iv : d.parts()) s += iv.length();
          return s;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return d.area();
        } else {
          double s = 0.0;
          for (const auto& part : d.parts()) s += part.area();
          return s;
        }
      },
      dom.variant());
}

double boundary_distance(const DomainSpec& dom, const Point& p) {
  if (p.size() != dom.dim()) fail(errc::dimension_mismatch, "point dimension != domain dimension");
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          double best = std::numeric_limits<double>::infinity();
          for (const auto& iv : d.parts())
            best = std::min({best, std::abs(p[0] - iv.lo), std::abs(p[0] - iv.hi)});
          return best;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return d.boundary_distance(Eigen::Vector2d(p[0], p[1]));
        } else {
          double best = std::numeric_limits<double>::infinity();
          const Eigen::Vector2d q(p[0], p[1]);
          for (const auto& part : d.parts()) best = std::min(best, part.boundary_distance(q));
          return best;
        }
      },
      dom.variant());
}

BoundingBox bounding_box(const DomainSpec& dom) {
  return std::visit(
      [](const auto& d) -> BoundingBox {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          Eigen::VectorXd lo(1), hi(1);
          lo[0] = d.parts().front().lo;
          hi[0] = d.parts().back().hi;
          return {lo, hi};
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return d.bbox();
        } else {
          BoundingBox box = d.parts().front().bbox();
          for (const auto& part : d.parts()) {
            const BoundingBox b = part.bbox();
            box.lo = box.lo.cwiseMin(b.lo);
            box.hi = box.hi.cwiseMax(b.hi);
          }
          return box;
        }
      },
      dom.variant());
}

complexd indicator_ft(const DomainSpec& dom, const Eigen::VectorXd& omega) {
  if (omega.size() != dom.dim())
    fail(errc::dimension_mismatch, "frequency dimension != domain dimension");
  return std::visit(
      [&](const auto& d) -> complexd {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          complexd s(0.0, 0.0);
          for (const auto& iv : d.parts()) s += interval_ft(iv, omega[0]);
          return s;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return polygon_ft(d, Eigen::Vector2d(omega[0], omega[1]));
        } else {
          complexd s(0.0, 0.0);
          const Eigen::Vector2d w(omega[0], omega[1]);
          for (const auto& part : d.parts()) s += polygon_ft(part, w);
          return s;
        }
      },
      dom.variant());
}

}  // namespace zaklab
