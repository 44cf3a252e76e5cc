#include "zaklab/function.hpp"

#include <cmath>
#include <vector>

#include "zaklab/common.hpp"

namespace zaklab {

SampledFunction indicator_function(const DomainSpec& dom) {
  const BoundingBox box = bounding_box(dom);
  return SampledFunction{[dom](const Point& x) { return contains(dom, x) ? 1.0 : 0.0; }, box.lo,
                         box.hi};
}

SampledFunction gaussian_function(int dim, double halfwidth) {
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim, -halfwidth);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(dim, halfwidth);
  return SampledFunction{[halfwidth](const Point& x) {
                           if (x.lpNorm<Eigen::Infinity>() >= halfwidth) return 0.0;
                           return std::exp(-kPi * x.squaredNorm());
                         },
                         lo, hi};
}

SampledFunction piecewise_constant_function(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                            int pieces_per_dim, std::uint64_t seed) {
  const int d = static_cast<int>(lo.size());
  std::size_t cells = 1;
  for (int k = 0; k < d; ++k) cells *= static_cast<std::size_t>(pieces_per_dim);
  Rng rng(seed);
  std::vector<double> levels(cells);
  for (auto& v : levels) v = rng.uniform(-1.0, 1.0);
  return SampledFunction{[=](const Point& x) {
                           std::size_t flat = 0;
                           for (int k = 0; k < d; ++k) {
                             if (x[k] < lo[k] || x[k] >= hi[k]) return 0.0;
                             const double t = (x[k] - lo[k]) / (hi[k] - lo[k]);
                             auto idx = static_cast<std::size_t>(t * pieces_per_dim);
                             if (idx >= static_cast<std::size_t>(pieces_per_dim))
                               idx = pieces_per_dim - 1;
                             flat = flat * pieces_per_dim + idx;
                           }
                           return levels[flat];
                         },
                         lo, hi};
}

}  // namespace zaklab
