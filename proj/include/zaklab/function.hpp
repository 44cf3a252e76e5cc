#ifndef ZAKLAB_FUNCTION_HPP
#define ZAKLAB_FUNCTION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "zaklab/geometry.hpp"

namespace zaklab {

// Compactly supported test function with a known bounding box, sampled
// pointwise by quadrature loops.
struct SampledFunction {
  std::function<double(const Point&)> eval;
  Eigen::VectorXd lo, hi;  // support bounding box
  int dim() const { return static_cast<int>(lo.size()); }
};

SampledFunction indicator_function(const DomainSpec& dom);

// exp(-pi |x|^2) restricted to [-halfwidth, halfwidth]^d.
SampledFunction gaussian_function(int dim, double halfwidth = 6.0);

// Random piecewise-constant function on the box, deterministic given seed.
SampledFunction piecewise_constant_function(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                            int pieces_per_dim, std::uint64_t seed);

}  // namespace zaklab

#endif
