#ifndef ZAKLAB_ZAK_HPP
#define ZAKLAB_ZAK_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "zaklab/geometry.hpp"
#include "zaklab/lattice.hpp"

namespace zaklab {

struct IndicatorWindow {
  DomainSpec dom;
};

// g(x) = exp(-pi |x|^2)
struct GaussianWindow {
  int dim = 1;
};

class WindowSpec {
public:
  using Variant = std::variant<IndicatorWindow, GaussianWindow>;

  WindowSpec(IndicatorWindow w) : v_(std::move(w)) {}  // NOLINT(google-explicit-constructor)
  WindowSpec(GaussianWindow w) : v_(std::move(w)) {}   // NOLINT(google-explicit-constructor)

  int dim() const;
  bool is_indicator() const { return std::holds_alternative<IndicatorWindow>(v_); }
  const Variant& variant() const { return v_; }
  const DomainSpec* indicator_domain() const;

  double operator()(const Point& x) const;

  // Exact L2 norm squared: measure for indicators, 2^{-d/2} for the Gaussian.
  double l2_norm_sq() const;

private:
  Variant v_;
};

// Default Gaussian truncation radius; the dropped tail is far below double
// precision at unit lattice scale.
inline constexpr int kGaussianTruncation = 20;

// Truncation radius that makes indicator sums exact for evaluation points in
// x_bbox: every n with x + M n hitting the window support satisfies
// ||n||_inf <= radius.
int exact_truncation(const WindowSpec& w, const Lattice& m, const BoundingBox& x_bbox);

// Truncation to use by default: exact_truncation over Q_M for indicators,
// kGaussianTruncation for the Gaussian.
int default_truncation(const WindowSpec& w, const Lattice& m);

// Z_M w(x, xi) = |det M|^{1/2} sum_{||n||_inf <= truncation} w(x + M n) e^{2 pi i xi . M n}.
// Exact (finite sum) for indicator windows; throws TruncationTooSmall when the
// candidate set derived from the support bounding box exceeds the radius.
complexd zak_eval(const WindowSpec& w, const Lattice& m, const Point& x, const Point& xi,
                  int truncation);

// Samples of Z_M w on midpoint grids of Q_M x Q_N, stored x-major
// (flat index = x_flat * res_xi^d + xi_flat). Grid nodes are midpoints of the
// uniform subdivision pulled through the generators, so no node ever lies on a
// cell boundary.
struct ZakGrid {
  Lattice m_lattice;
  Lattice n_lattice;
  WindowSpec window;
  int res_x = 0;
  int res_xi = 0;
  int truncation = 0;
  bool prefactor_included = true;
  bool pair_ok = false;  // check_pair(m, n) verdict at construction
  std::vector<complexd> values;

  int dim() const { return m_lattice.dim(); }
  std::size_t x_count() const;
  std::size_t xi_count() const;
  Point x_node(std::size_t flat) const;
  Point xi_node(std::size_t flat) const;
  const complexd& at(std::size_t x_flat, std::size_t xi_flat) const;
};

ZakGrid zak_grid(const WindowSpec& w, const Lattice& m, const Lattice& n, int res_x, int res_xi,
                 int truncation);

// Section over a xi-grid of Q_N at fixed x (the layout of the magnitude plots).
struct ZakSection {
  Lattice n_lattice;
  Point x;
  int res = 0;
  std::vector<complexd> values;  // res^d nodes, row-major over xi axes
};

ZakSection zak_xi_section(const WindowSpec& w, const Lattice& m, const Lattice& n, const Point& x,
                          int res, int truncation);

// Max residual of the two quasi-periodicity identities
//   Z(x + M s, xi) = e^{-2 pi i xi . M s} Z(x, xi)
//   Z(x, xi + N s) = Z(x, xi)
// over seeded probes in Q_M x Q_N and the given integer shifts.
double check_quasiperiodicity(const WindowSpec& w, const Lattice& m, const Lattice& n,
                              const std::vector<Eigen::VectorXi>& shifts, int probes,
                              std::uint64_t seed);

// Relative error | ||Z_M w||^2_quad - ||w||^2 | / ||w||^2 with midpoint
// quadrature on Q_M x Q_N at quad_res nodes per dimension on each factor.
double check_isometry(const WindowSpec& w, const Lattice& m, const Lattice& n, int quad_res,
                      int truncation);

}  // namespace zaklab

#endif
