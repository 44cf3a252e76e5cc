#ifndef ZAKLAB_GEOMETRY_HPP
#define ZAKLAB_GEOMETRY_HPP

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "zaklab/common.hpp"

namespace zaklab {

using Point = Eigen::VectorXd;

struct BoundingBox {
  Eigen::VectorXd lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
};

// Half-open interval [lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Sorted union of pairwise disjoint half-open intervals.
class IntervalUnion {
public:
  explicit IntervalUnion(std::vector<Interval> parts);
  const std::vector<Interval>& parts() const { return parts_; }

private:
  std::vector<Interval> parts_;
};

// Simple polygon, vertices in counterclockwise order.
//
// Membership uses the classic crossing test with strict comparisons, which
// realizes a half-open boundary: lower and left edges are inside, upper and
// right edges are outside. Integer translates of a tiling polygon therefore
// partition every point, not just almost every point.
class Polygon {
public:
  explicit Polygon(std::vector<Eigen::Vector2d> vertices);
  const std::vector<Eigen::Vector2d>& vertices() const { return verts_; }

  double area() const { return area_; }
  bool contains(const Eigen::Vector2d& p) const;
  double boundary_distance(const Eigen::Vector2d& p) const;
  BoundingBox bbox() const;

private:
  std::vector<Eigen::Vector2d> verts_;
  double area_ = 0.0;
};

// Union of polygons with pairwise disjoint interiors (corner contact allowed).
class PolygonUnion {
public:
  explicit PolygonUnion(std::vector<Polygon> parts);
  const std::vector<Polygon>& parts() const { return parts_; }

private:
  std::vector<Polygon> parts_;
};

class DomainSpec {
public:
  using Variant = std::variant<IntervalUnion, Polygon, PolygonUnion>;

  DomainSpec(IntervalUnion v) : v_(std::move(v)) {}   // NOLINT(google-explicit-constructor)
  DomainSpec(Polygon v) : v_(std::move(v)) {}         // NOLINT(google-explicit-constructor)
  DomainSpec(PolygonUnion v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)

  int dim() const { return std::holds_alternative<IntervalUnion>(v_) ? 1 : 2; }
  const Variant& variant() const { return v_; }

private:
  Variant v_;
};

// Convenience constructors.
DomainSpec make_interval_domain(double lo, double hi);
DomainSpec make_interval_union(const std::vector<std::pair<double, double>>& intervals);
DomainSpec make_polygon(const std::vector<std::pair<double, double>>& vertices);
DomainSpec make_polygon_union(const std::vector<std::vector<std::pair<double, double>>>& parts);

// chi_dom(p) with the half-open convention. Throws on dimension mismatch.
bool contains(const DomainSpec& dom, const Point& p);

// Lebesgue measure (interval length sum / shoelace area sum).
double measure(const DomainSpec& dom);

// Distance from p to the domain boundary (used to jitter samplers off edges).
double boundary_distance(const DomainSpec& dom, const Point& p);

BoundingBox bounding_box(const DomainSpec& dom);

// Closed-form \int_dom exp(-2 pi i omega . x) dx.
//
// d=1 sums the per-interval primitive; d=2 uses the divergence-theorem edge
// sum with a series branch when omega is nearly orthogonal to an edge.
// indicator_ft(dom, 0) == measure(dom) exactly, and
// indicator_ft(dom, -w) == conj(indicator_ft(dom, w)).
complexd indicator_ft(const DomainSpec& dom, const Eigen::VectorXd& omega);

}  // namespace zaklab

#endif
