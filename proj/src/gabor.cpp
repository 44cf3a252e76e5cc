#include "zaklab/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zaklab/parallel.hpp"

namespace zaklab {

namespace {

// Midpoint nodes over the support box of f, quad_res nodes per unit length.
struct QuadGrid {
  std::vector<Point> nodes;
  double cell = 1.0;
};

QuadGrid midpoint_grid(const SampledFunction& f, int quad_res) {
  const int d = f.dim();
  Eigen::VectorXi steps(d);
  double cell = 1.0;
  for (int k = 0; k < d; ++k) {
    steps[k] = std::max(1, static_cast<int>(std::ceil((f.hi[k] - f.lo[k]) * quad_res)));
    cell *= (f.hi[k] - f.lo[k]) / steps[k];
  }
  QuadGrid grid;
  grid.cell = cell;
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(d);
  for (;;) {
    Point p(d);
    for (int k = 0; k < d; ++k)
      p[k] = f.lo[k] + (idx[k] + 0.5) * (f.hi[k] - f.lo[k]) / steps[k];
    grid.nodes.push_back(std::move(p));
    int k = 0;
    while (k < d) {
      if (++idx[k] < steps[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return grid;
}

// Composite Simpson weights for one interval piece [lo, hi].
void simpson_nodes(double lo, double hi, int panels, std::vector<double>& xs,
                   std::vector<double>& ws) {
  const double h = (hi - lo) / panels;
  xs.clear();
  ws.clear();
  for (int i = 0; i <= 2 * panels; ++i) {
    xs.push_back(lo + 0.5 * h * i);
    double w = (i == 0 || i == 2 * panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    ws.push_back(w * h / 6.0);
  }
}

}  // namespace

std::vector<Point> lattice_shifts(const Lattice& lat, int radius) {
  const int d = lat.dim();
  std::vector<Point> out;
  Eigen::VectorXi n = Eigen::VectorXi::Constant(d, -radius);
  for (;;) {
    out.push_back(lat.point(n));
    int k = 0;
    while (k < d) {
      if (++n[k] <= radius) break;
      n[k] = -radius;
      ++k;
    }
    if (k == d) break;
  }
  return out;
}

Eigen::MatrixXcd gabor_coefficients(const SampledFunction& f, const GaborSystemSpec& sys,
                                    int quad_res) {
  const int d = f.dim();
  if (sys.window.dim() != d || sys.modulations.dim() != d)
    fail(errc::dimension_mismatch, "gabor_coefficients dimensions disagree");
  if (sys.shifts.empty()) fail(errc::invalid_argument, "gabor system needs >= 1 translation");

  const auto freqs = sys.modulations.expand();
  const QuadGrid grid = midpoint_grid(f, quad_res);
  const auto n_shifts = static_cast<Eigen::Index>(sys.shifts.size());
  const auto n_freqs = static_cast<Eigen::Index>(freqs.size());

  // f and window samples per (node, shift)
  std::vector<double> fval(grid.nodes.size());
  parallel_for(grid.nodes.size(), [&](std::size_t i) { fval[i] = f.eval(grid.nodes[i]); });

  const bool indicator = sys.window.is_indicator();
  Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(n_shifts, n_freqs);
  std::vector<Eigen::MatrixXcd> partial(sys.shifts.size());
  parallel_for(sys.shifts.size(), [&](std::size_t li) {
    Eigen::MatrixXcd row = Eigen::MatrixXcd::Zero(1, n_freqs);
    const Point& lambda = sys.shifts[li];
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      if (fval[i] == 0.0) continue;
      const double wv = sys.window(grid.nodes[i] - lambda);
      if (wv == 0.0) continue;
      const double amp = fval[i] * wv * grid.cell;
      for (Eigen::Index g = 0; g < n_freqs; ++g)
        row(0, g) += amp * std::polar(1.0, -kTwoPi * freqs[g].dot(grid.nodes[i]));
    }
    partial[li] = std::move(row);
  });
  for (Eigen::Index l = 0; l < n_shifts; ++l) coeffs.row(l) = partial[l].row(0);

  if (indicator) {
    // every mass-carrying node must meet some translate of the window support
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      if (fval[i] == 0.0) continue;
      bool covered = false;
      for (const auto& lambda : sys.shifts)
        if (sys.window(grid.nodes[i] - lambda) != 0.0) {
          covered = true;
          break;
        }
      if (!covered)
        fail(errc::support_not_covered,
             "part of supp(f) meets no translate of the window support");
    }
  }
  return coeffs;
}

FrameSumReport frame_sum_check(const SampledFunction& f, const GaborSystemSpec& sys,
                               int quad_res) {
  const Eigen::MatrixXcd coeffs = gabor_coefficients(f, sys, quad_res);
  const QuadGrid grid = midpoint_grid(f, quad_res);

  FrameSumReport rep;
  rep.sum_sq_coeffs = coeffs.squaredNorm();
  double nsq = 0.0;
  for (const auto& p : grid.nodes) {
    const double v = f.eval(p);
    nsq += v * v;
  }
  rep.norm_sq = nsq * grid.cell;
  if (rep.norm_sq < 1e-14) fail(errc::zero_function, "test function has (near) zero L2 norm");
  rep.ratio = rep.sum_sq_coeffs / rep.norm_sq;

  std::ostringstream note;
  note << sys.shifts.size() << " translations, " << sys.modulations.expand().size()
       << " modulations, quad_res " << quad_res;
  rep.truncation_note = note.str();
  return rep;
}

double biorthogonality_check(const DomainSpec& dom, const std::vector<Point>& lam_list,
                             const SpectrumSpec& spec, int quad_res) {
  if (dom.dim() != 1)
    fail(errc::unsupported_dimension, "biorthogonality_check is implemented for d = 1");
  if (lam_list.empty()) fail(errc::invalid_argument, "need >= 1 translation");

  // translates must be pairwise disjoint so the per-translate duals assemble
  const auto* iu = std::get_if<IntervalUnion>(&dom.variant());
  for (std::size_t i = 0; i < lam_list.size(); ++i)
    for (std::size_t j = i + 1; j < lam_list.size(); ++j) {
      const double delta = lam_list[j][0] - lam_list[i][0];
      for (const auto& a : iu->parts())
        for (const auto& b : iu->parts())
          if (std::max(a.lo, b.lo + delta) < std::min(a.hi, b.hi + delta))
            fail(errc::invalid_argument, "domain translates overlap");
    }

  const auto freqs = spec.expand();
  for (const auto& lambda : lam_list)
    for (const auto& gamma : freqs)
      if (nearest_integer_distance(gamma.dot(lambda)) > 1e-9)
        fail(errc::condition_e_gamma_lambda,
             "gamma . lambda must be an integer for every used pair");

  const GramSection gram = gram_section(dom, spec);
  const Eigen::MatrixXcd ginv = dual_coefficients(gram);
  const auto n = static_cast<Eigen::Index>(freqs.size());

  // quadrature Q[j][l] ~ <e_j, e_l>_{L2(dom)} with composite Simpson per piece
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
  std::vector<double> xs, ws;
  for (const auto& piece : iu->parts()) {
    const int panels = std::max(8, static_cast<int>(std::ceil(piece.length() * quad_res / 2.0)));
    simpson_nodes(piece.lo, piece.hi, panels, xs, ws);
    Eigen::MatrixXcd basis(static_cast<Eigen::Index>(xs.size()), n);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (Eigen::Index g = 0; g < n; ++g)
        basis(static_cast<Eigen::Index>(i), g) = std::polar(1.0, kTwoPi * freqs[g][0] * xs[i]);
    Eigen::VectorXd wvec = Eigen::Map<Eigen::VectorXd>(ws.data(), static_cast<Eigen::Index>(ws.size()));
    q += basis.transpose() * wvec.asDiagonal() * basis.conjugate();
  }

  // cross-translate blocks vanish by disjointness; within one translate,
  // <e_g chi_{dom+l}, dual_k(. - l)> = e_g(l) * <e_g, dual_k>_{dom}
  const Eigen::MatrixXcd b = q * ginv.conjugate();

  // inner 80% of the section by sup-norm
  double max_norm = 0.0;
  for (const auto& f : freqs) max_norm = std::max(max_norm, f.lpNorm<Eigen::Infinity>());
  const double inner_cut = 0.8 * max_norm + 1e-12;

  double worst = 0.0;
  for (const auto& lambda : lam_list) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (freqs[j].lpNorm<Eigen::Infinity>() > inner_cut) continue;
      const complexd phase = std::polar(1.0, kTwoPi * freqs[j].dot(lambda));
      for (Eigen::Index k = 0; k < n; ++k) {
        if (freqs[k].lpNorm<Eigen::Infinity>() > inner_cut) continue;
        const complexd val = phase * b(j, k);
        worst = std::max(worst, std::abs(val - (j == k ? 1.0 : 0.0)));
      }
    }
  }
  return worst;
}

}  // namespace zaklab
