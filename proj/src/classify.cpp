#include "zaklab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zaklab/spectral.hpp"

namespace zaklab {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct LocalMin {
  Eigen::VectorXd u, v;  // parameter-space coordinates in [0,1]^d x [0,1]^d
  double magnitude = 0.0;
};

double magnitude_at(const WindowSpec& w, const Lattice& m, const Lattice& n,
                    const Eigen::VectorXd& u, const Eigen::VectorXd& v, int truncation) {
  return std::abs(zak_eval(w, m, m.gen() * u, n.gen() * v, truncation));
}

// One round of local grid refinement: 9 nodes per dimension over a box of
// half-width h around the current argmin, spacing h/4.
LocalMin refine_once(const WindowSpec& w, const Lattice& m, const Lattice& n, const LocalMin& cur,
                     double h, int truncation) {
  const int d = m.dim();
  LocalMin best = cur;
  const int span = 4;  // nodes at c + j h / span, j = -span..span
  std::vector<int> idx(2 * d, -span);
  for (;;) {
    Eigen::VectorXd u = cur.u, v = cur.v;
    for (int k = 0; k < d; ++k) u[k] = std::clamp(cur.u[k] + idx[k] * h / span, 0.0, 1.0);
    for (int k = 0; k < d; ++k) v[k] = std::clamp(cur.v[k] + idx[d + k] * h / span, 0.0, 1.0);
    const double mag = magnitude_at(w, m, n, u, v, truncation);
    if (mag < best.magnitude) best = {u, v, mag};
    int k = 0;
    while (k < 2 * d) {
      if (++idx[k] <= span) break;
      idx[k] = -span;
      ++k;
    }
    if (k == 2 * d) break;
  }
  return best;
}

LocalMin refine_minimum(const WindowSpec& w, const Lattice& m, const Lattice& n, LocalMin start,
                        double spacing, int levels, int truncation) {
  double h = spacing;
  for (int l = 0; l < levels; ++l) {
    start = refine_once(w, m, n, start, h, truncation);
    h /= 4.0;
  }
  return start;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotComplete: return "NotComplete";
    case Verdict::CompleteNotFrame: return "CompleteNotFrame";
    case Verdict::RieszBasisFrame: return "RieszBasisFrame";
    case Verdict::OrthogonalConstantModulus: return "OrthogonalConstantModulus";
    case Verdict::OrthonormalUnitModulus: return "OrthonormalUnitModulus";
  }
  return "?";
}

ClassificationReport classify_gabor(const ZakGrid& grid, double tol_zero, double tol_flat) {
  if (!grid.pair_ok)
    fail(errc::incompatible_pair,
         "classification requires det(MN) = 1 and N^T M integer");

  ClassificationReport rep;
  rep.tol_zero = tol_zero;

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::size_t zeros = 0;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const double mag = std::abs(grid.values[i]);
    if (mag < lo) {
      lo = mag;
      argmin = i;
    }
    hi = std::max(hi, mag);
    if (mag < tol_zero) ++zeros;
  }
  rep.ess_inf_estimate = lo;
  rep.ess_sup_estimate = hi;
  rep.flatness = hi - lo;
  rep.zero_fraction = static_cast<double>(zeros) / static_cast<double>(grid.values.size());

  const double zero_set_threshold = 2.0 * (1.0 / grid.res_x + 1.0 / grid.res_xi);
  if (rep.zero_fraction > zero_set_threshold) {
    rep.verdict = Verdict::NotComplete;
    rep.refined_min = lo;
    return rep;
  }

  // local refinement around the argmin decides measure-zero zero sets
  const int d = grid.dim();
  const std::size_t nxi = grid.xi_count();
  std::size_t xflat = argmin / nxi, xiflat = argmin % nxi;
  LocalMin start;
  start.u.resize(d);
  start.v.resize(d);
  for (int k = 0; k < d; ++k) {
    start.u[k] = (static_cast<double>(xflat % grid.res_x) + 0.5) / grid.res_x;
    xflat /= grid.res_x;
    start.v[k] = (static_cast<double>(xiflat % grid.res_xi) + 0.5) / grid.res_xi;
    xiflat /= grid.res_xi;
  }
  start.magnitude = lo;
  const double spacing = 1.0 / std::min(grid.res_x, grid.res_xi);
  const LocalMin refined = refine_minimum(grid.window, grid.m_lattice, grid.n_lattice, start,
                                          spacing, 12, grid.truncation);
  rep.refined_min = refined.magnitude;

  if (refined.magnitude < tol_zero) {
    rep.verdict = Verdict::CompleteNotFrame;
    return rep;
  }
  rep.verdict = Verdict::RieszBasisFrame;
  if (rep.flatness <= tol_flat * rep.ess_sup_estimate) {
    rep.verdict = std::abs(rep.ess_sup_estimate - 1.0) <= tol_flat
                      ? Verdict::OrthonormalUnitModulus
                      : Verdict::OrthogonalConstantModulus;
  }
  return rep;
}

ZeroSearchResult find_zero(const WindowSpec& w, const Lattice& m, const Lattice& n, int coarse_res,
                           int levels, double tol_zero) {
  if (levels < 1) fail(errc::invalid_argument, "find_zero needs levels >= 1");
  if (coarse_res < 16) fail(errc::invalid_argument, "find_zero needs coarse_res >= 16");
  const int d = m.dim();
  const int truncation = default_truncation(w, m);

  const std::size_t nx = ipow(static_cast<std::size_t>(coarse_res), d);
  LocalMin best;
  best.magnitude = std::numeric_limits<double>::infinity();
  Eigen::VectorXd u(d), v(d);
  for (std::size_t i = 0; i < nx * nx; ++i) {
    std::size_t r = i;
    for (int k = 0; k < d; ++k) {
      u[k] = (static_cast<double>(r % coarse_res) + 0.5) / coarse_res;
      r /= coarse_res;
    }
    for (int k = 0; k < d; ++k) {
      v[k] = (static_cast<double>(r % coarse_res) + 0.5) / coarse_res;
      r /= coarse_res;
    }
    const double mag = magnitude_at(w, m, n, u, v, truncation);
    if (mag < best.magnitude) best = {u, v, mag};
  }

  const LocalMin refined = refine_minimum(w, m, n, best, 1.0 / coarse_res, levels, truncation);
  ZeroSearchResult res;
  res.found = refined.magnitude < tol_zero;
  res.x = m.gen() * refined.u;
  res.xi = n.gen() * refined.v;
  res.magnitude = refined.magnitude;
  res.refinement_levels = levels;
  return res;
}

TheoremHarnessReport theorem_harness(const DomainSpec& dom, const Lattice& m, const Lattice& n) {
  const LatticePairReport pair = check_pair(m, n);
  if (!pair.product_is_unimodular || !pair.ntm_is_integer)
    fail(errc::incompatible_pair, "theorem_harness requires a compatible lattice pair");

  const int d = dom.dim();
  TheoremHarnessReport rep;
  rep.tiling = multitiling_level(dom, m, d == 1 ? 10000 : 4000, 1);

  const WindowSpec window{IndicatorWindow{dom}};
  const int res = d == 1 ? 512 : 32;
  rep.classification = classify_gabor(zak_grid(window, m, n, res, res, 0));

  rep.orthogonality_radius = d == 1 ? 20 : 4;
  rep.orthogonality_residual =
      orthogonality_check(dom, SpectrumSpec(LatticeCosets{n, {Eigen::VectorXd::Zero(d)},
                                                          rep.orthogonality_radius}));

  rep.zero = find_zero(window, m, n, d == 1 ? 64 : 16, 14);

  const bool nondegenerate = rep.classification.verdict == Verdict::RieszBasisFrame ||
                             rep.classification.verdict == Verdict::OrthogonalConstantModulus ||
                             rep.classification.verdict == Verdict::OrthonormalUnitModulus;
  const bool multitiles_strictly = rep.tiling.level.has_value() && *rep.tiling.level > 1;

  rep.riesz_implies_tiling_ok =
      !nondegenerate || (rep.tiling.level == 1 && rep.orthogonality_residual < 1e-8);
  const bool degenerate = rep.classification.verdict == Verdict::CompleteNotFrame ||
                          rep.classification.verdict == Verdict::NotComplete;
  rep.multitiling_implies_zero_ok = !multitiles_strictly || (degenerate && rep.zero.found);
  rep.pass = rep.riesz_implies_tiling_ok && rep.multitiling_implies_zero_ok;
  return rep;
}

}  // namespace zaklab
