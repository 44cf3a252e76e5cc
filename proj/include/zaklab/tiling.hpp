#ifndef ZAKLAB_TILING_HPP
#define ZAKLAB_TILING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zaklab/function.hpp"
#include "zaklab/geometry.hpp"
#include "zaklab/lattice.hpp"

namespace zaklab {

struct TilingReport {
  std::optional<int> level;  // empty = not a multi-tiling at any level
  std::int64_t samples_tested = 0;
  std::map<int, double> cover_histogram;  // cover count -> sample fraction
  double translation_radius = 0.0;
};

// All lattice points lambda = M n with p in dom + lambda; exhaustive over the
// finite candidate set derived from the domain bounding box. Sorted
// lexicographically for determinism.
std::vector<Point> cover_set(const DomainSpec& dom, const Lattice& lat, const Point& p);

// Integer coordinates of the cover set (n with p - M n in dom).
std::vector<Eigen::VectorXi> cover_indices(const DomainSpec& dom, const Lattice& lat,
                                           const Point& p);

// Monte-Carlo multi-tiling level detection: samples uniform points of the
// fundamental domain, jittered away from translate boundaries, and reports the
// common cover count when the histogram concentration reaches 1 - 2/sqrt(n).
TilingReport multitiling_level(const DomainSpec& dom, const Lattice& lat, int n_samples,
                               std::uint64_t seed);

// Ratio (sum_lambda ||f||^2_{L2(dom+lambda)}) / ||f||^2 by midpoint
// quadrature; equals the multi-tiling level k up to quadrature error.
double check_sum_on_pieces(const DomainSpec& dom, const Lattice& lat, const SampledFunction& f,
                           int quad_res);

}  // namespace zaklab

#endif
