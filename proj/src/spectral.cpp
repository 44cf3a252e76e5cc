#include "zaklab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace zaklab {

namespace {

void check_separation(const std::vector<Eigen::VectorXd>& freqs) {
  for (std::size_t i = 0; i < freqs.size(); ++i)
    for (std::size_t j = i + 1; j < freqs.size(); ++j)
      if ((freqs[i] - freqs[j]).lpNorm<Eigen::Infinity>() <= 1e-10)
        fail(errc::invalid_argument,
             "duplicate frequencies (separation <= 1e-10) make the Gram singular");
}

}  // namespace

int SpectrumSpec::dim() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteList>) {
          if (s.freqs.empty()) fail(errc::invalid_argument, "empty frequency list");
          return static_cast<int>(s.freqs.front().size());
        } else {
          return s.lattice.dim();
        }
      },
      v_);
}

std::vector<Eigen::VectorXd> SpectrumSpec::expand() const {
  std::vector<Eigen::VectorXd> out = std::visit(
      [](const auto& s) -> std::vector<Eigen::VectorXd> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteList>) {
          return s.freqs;
        } else {
          if (s.cosets.empty()) fail(errc::invalid_argument, "lattice cosets need >= 1 offset");
          const int d = s.lattice.dim();
          std::vector<Eigen::VectorXd> freqs;
          Eigen::VectorXi n = Eigen::VectorXi::Constant(d, -s.index_radius);
          for (;;) {
            for (const auto& a : s.cosets) freqs.push_back(s.lattice.point(n) + a);
            int k = 0;
            while (k < d) {
              if (++n[k] <= s.index_radius) break;
              n[k] = -s.index_radius;
              ++k;
            }
            if (k == d) break;
          }
          return freqs;
        }
      },
      v_);
  std::sort(out.begin(), out.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int k = 0; k < a.size(); ++k) {
      if (a[k] < b[k]) return true;
      if (a[k] > b[k]) return false;
    }
    return false;
  });
  check_separation(out);
  return out;
}

SpectrumSpec SpectrumSpec::restricted(int radius) const {
  return std::visit(
      [&](const auto& s) -> SpectrumSpec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteList>) {
          FiniteList sub;
          for (const auto& f : s.freqs)
            if (f.template lpNorm<Eigen::Infinity>() <= radius) sub.freqs.push_back(f);
          if (sub.freqs.empty())
            fail(errc::invalid_argument, "restriction removed every frequency");
          return SpectrumSpec(sub);
        } else {
          LatticeCosets sub = s;
          sub.index_radius = std::min(radius, s.index_radius);
          return SpectrumSpec(sub);
        }
      },
      v_);
}

GramSection gram_section(const DomainSpec& dom, const SpectrumSpec& spec) {
  const auto freqs = spec.expand();
  if (freqs.size() > 4096) fail(errc::too_many_frequencies, "Gram section capped at 4096");
  if (spec.dim() != dom.dim()) fail(errc::dimension_mismatch, "spectrum/domain dimensions differ");

  const auto n = static_cast<Eigen::Index>(freqs.size());
  GramSection g;
  g.freqs = freqs;
  g.domain_measure = measure(dom);
  g.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    g.entries(j, j) = g.domain_measure;
    for (Eigen::Index k = j + 1; k < n; ++k) {
      // <e_k, e_j> = int_dom e^{2 pi i (g_k - g_j) . x} dx
      const complexd v = indicator_ft(dom, freqs[j] - freqs[k]);
      g.entries(j, k) = v;
      g.entries(k, j) = std::conj(v);
    }
  }
  return g;
}

double orthogonality_check(const DomainSpec& dom, const SpectrumSpec& spec) {
  const GramSection g = gram_section(dom, spec);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < g.entries.rows(); ++j)
    for (Eigen::Index k = 0; k < g.entries.cols(); ++k)
      if (j != k) worst = std::max(worst, std::abs(g.entries(j, k)));
  return worst / g.domain_measure;
}

std::pair<double, double> hermitian_extreme_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(errc::ill_conditioned, "eigenvalue solve failed");
  const auto& w = solver.eigenvalues();
  return {w.minCoeff(), w.maxCoeff()};
}

BoundsEstimate riesz_bounds_estimate(const DomainSpec& dom, const SpectrumSpec& spec,
                                     const std::vector<int>& section_radii) {
  if (section_radii.empty()) fail(errc::invalid_argument, "need at least one section radius");
  for (std::size_t i = 1; i < section_radii.size(); ++i)
    if (section_radii[i] <= section_radii[i - 1])
      fail(errc::invalid_argument, "section radii must be strictly increasing");

  BoundsEstimate est;
  for (int radius : section_radii) {
    const GramSection g = gram_section(dom, spec.restricted(radius));
    const auto [lo, hi] = hermitian_extreme_eigenvalues(g.entries);
    est.section_sizes.push_back(static_cast<int>(g.freqs.size()));
    est.lower_estimates.push_back(lo);
    est.upper_estimates.push_back(hi);
  }
  const std::size_t n = est.lower_estimates.size();
  if (n >= 2) {
    const double a = est.lower_estimates[n - 2];
    const double b = est.lower_estimates[n - 1];
    est.stabilized = std::abs(a - b) < 0.05 * std::max(std::abs(b), 1e-12);
  }
  return est;
}

Eigen::MatrixXcd dual_coefficients(const GramSection& gram) {
  const auto [lo, hi] = hermitian_extreme_eigenvalues(gram.entries);
  if (lo <= 1e-10)
    fail(errc::ill_conditioned, "Gram section minimum eigenvalue <= 1e-10");
  return gram.entries.llt().solve(
      Eigen::MatrixXcd::Identity(gram.entries.rows(), gram.entries.cols()));
}

SpectrumSpec perturb_spectrum(const SpectrumSpec& spec, double c, std::uint64_t seed) {
  if (c < 0) fail(errc::invalid_argument, "perturbation constant must be >= 0");
  Rng rng(seed);
  FiniteList out;
  out.freqs = spec.expand();
  for (auto& f : out.freqs)
    for (int k = 0; k < f.size(); ++k) f[k] += c * (2.0 * rng.uniform01() - 1.0);
  return SpectrumSpec(out);
}

}  // namespace zaklab
