#include "zaklab/tiling.hpp"

#include <algorithm>
#include <cmath>

namespace zaklab {

namespace {

// Integer box of candidate n with p - M n inside the (inflated) domain box.
struct IndexBox {
  Eigen::VectorXi lo, hi;
};

IndexBox candidate_box(const BoundingBox& dom_box, const Lattice& lat, const Point& p,
                       double inflate) {
  const int d = lat.dim();
  // p - M n in [lo, hi]  <=>  n in M^{-1}(p - [lo, hi])
  Eigen::MatrixXd corners(d, 1 << d);
  for (int c = 0; c < (1 << d); ++c) {
    Eigen::VectorXd y(d);
    for (int k = 0; k < d; ++k)
      y[k] = (c >> k) & 1 ? p[k] - (dom_box.lo[k] - inflate) : p[k] - (dom_box.hi[k] + inflate);
    corners.col(c) = lat.gen_inv() * y;
  }
  IndexBox box{Eigen::VectorXi(d), Eigen::VectorXi(d)};
  for (int k = 0; k < d; ++k) {
    box.lo[k] = static_cast<int>(std::floor(corners.row(k).minCoeff())) - 1;
    box.hi[k] = static_cast<int>(std::ceil(corners.row(k).maxCoeff())) + 1;
  }
  return box;
}

template <typename Fn>
void for_each_index(const IndexBox& box, Fn&& fn) {
  const int d = static_cast<int>(box.lo.size());
  Eigen::VectorXi n = box.lo;
  for (;;) {
    fn(n);
    int k = 0;
    while (k < d) {
      if (++n[k] <= box.hi[k]) break;
      n[k] = box.lo[k];
      ++k;
    }
    if (k == d) return;
  }
}

}  // namespace

std::vector<Eigen::VectorXi> cover_indices(const DomainSpec& dom, const Lattice& lat,
                                           const Point& p) {
  if (lat.dim() != dom.dim() || p.size() != dom.dim())
    fail(errc::dimension_mismatch, "cover_set dimensions disagree");
  const BoundingBox box = bounding_box(dom);
  std::vector<Eigen::VectorXi> out;
  for_each_index(candidate_box(box, lat, p, 0.0), [&](const Eigen::VectorXi& n) {
    if (contains(dom, p - lat.point(n))) out.push_back(n);
  });
  return out;
}

std::vector<Point> cover_set(const DomainSpec& dom, const Lattice& lat, const Point& p) {
  auto idx = cover_indices(dom, lat, p);
  std::vector<Point> out;
  out.reserve(idx.size());
  for (const auto& n : idx) out.push_back(lat.point(n));
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    for (int k = 0; k < a.size(); ++k) {
      if (a[k] < b[k]) return true;
      if (a[k] > b[k]) return false;
    }
    return false;
  });
  return out;
}

TilingReport multitiling_level(const DomainSpec& dom, const Lattice& lat, int n_samples,
                               std::uint64_t seed) {
  if (n_samples < 100) fail(errc::invalid_argument, "multitiling_level needs n_samples >= 100");
  if (measure(dom) < 1e-12) fail(errc::degenerate_domain, "domain has (near) zero measure");
  if (lat.dim() != dom.dim()) fail(errc::dimension_mismatch, "lattice/domain dimensions disagree");

  const int d = dom.dim();
  const BoundingBox dom_box = bounding_box(dom);
  Rng rng(seed);

  TilingReport report;
  report.samples_tested = n_samples;
  double pmax = 0.0;  // |M u| <= sum of column norms for u in [0,1)^d
  for (int j = 0; j < d; ++j) pmax += lat.gen().col(j).norm();
  report.translation_radius = (dom_box.hi - dom_box.lo).norm() + pmax;

  std::map<int, std::int64_t> counts;
  for (int s = 0; s < n_samples; ++s) {
    // jitter away from translate boundaries: resample while some candidate
    // translate has the point within 1e-9 of its edge
    Point p(d);
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
      Eigen::VectorXd u(d);
      for (int k = 0; k < d; ++k) u[k] = rng.uniform01();
      p = lat.gen() * u;
      ok = true;
      for_each_index(candidate_box(dom_box, lat, p, 1e-6), [&](const Eigen::VectorXi& n) {
        if (ok && boundary_distance(dom, p - lat.point(n)) < 1e-9) ok = false;
      });
    }
    counts[static_cast<int>(cover_indices(dom, lat, p).size())]++;
  }

  int best_count = -1;
  double best_fraction = 0.0;
  for (const auto& [k, c] : counts) {
    const double frac = static_cast<double>(c) / n_samples;
    report.cover_histogram[k] = frac;
    if (frac > best_fraction) {
      best_fraction = frac;
      best_count = k;
    }
  }
  const double concentration = 1.0 - 2.0 / std::sqrt(static_cast<double>(n_samples));
  if (best_count >= 1 && best_fraction >= concentration) report.level = best_count;
  return report;
}

double check_sum_on_pieces(const DomainSpec& dom, const Lattice& lat, const SampledFunction& f,
                           int quad_res) {
  if (quad_res < 64) fail(errc::invalid_argument, "check_sum_on_pieces needs quad_res >= 64");
  if (f.dim() != dom.dim() || lat.dim() != dom.dim())
    fail(errc::dimension_mismatch, "check_sum_on_pieces dimensions disagree");

  const int d = dom.dim();
  Eigen::VectorXi steps(d);
  double cell = 1.0;
  for (int k = 0; k < d; ++k) {
    steps[k] = std::max(1, static_cast<int>(std::ceil((f.hi[k] - f.lo[k]) * quad_res)));
    cell *= (f.hi[k] - f.lo[k]) / steps[k];
  }
  const BoundingBox dom_box = bounding_box(dom);

  double num = 0.0, den = 0.0;
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(d);
  Point p(d);
  for (;;) {
    for (int k = 0; k < d; ++k)
      p[k] = f.lo[k] + (idx[k] + 0.5) * (f.hi[k] - f.lo[k]) / steps[k];
    const double v = f.eval(p);
    if (v != 0.0) {
      const double v2 = v * v;
      den += v2;
      std::size_t covers = 0;
      for_each_index(candidate_box(dom_box, lat, p, 0.0), [&](const Eigen::VectorXi& n) {
        if (contains(dom, p - lat.point(n))) ++covers;
      });
      num += v2 * static_cast<double>(covers);
    }
    int k = 0;
    while (k < d) {
      if (++idx[k] < steps[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  if (den * cell < 1e-14) fail(errc::zero_function, "test function has (near) zero L2 norm");
  return num / den;
}

}  // namespace zaklab
