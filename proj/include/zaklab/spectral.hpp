#ifndef ZAKLAB_SPECTRAL_HPP
#define ZAKLAB_SPECTRAL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include "zaklab/geometry.hpp"
#include "zaklab/lattice.hpp"

namespace zaklab {

struct FiniteList {
  std::vector<Eigen::VectorXd> freqs;
};

// { N(n) + a : ||n||_inf <= index_radius, a in cosets }
struct LatticeCosets {
  Lattice lattice;
  std::vector<Eigen::VectorXd> cosets;
  int index_radius = 0;
};

class SpectrumSpec {
public:
  using Variant = std::variant<FiniteList, LatticeCosets>;

  SpectrumSpec(FiniteList v) : v_(std::move(v)) {}     // NOLINT(google-explicit-constructor)
  SpectrumSpec(LatticeCosets v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  const Variant& variant() const { return v_; }
  int dim() const;

  // Expanded, deterministic frequency list; checks the pairwise separation
  // (> 1e-10) so duplicate frequencies cannot masquerade as Riesz failures.
  std::vector<Eigen::VectorXd> expand() const;

  // Same spectrum restricted to ||n||_inf <= radius (cosets) or
  // ||gamma||_inf <= radius (finite lists); restrictions are nested.
  SpectrumSpec restricted(int radius) const;

private:
  Variant v_;
};

struct GramSection {
  std::vector<Eigen::VectorXd> freqs;
  Eigen::MatrixXcd entries;  // G[j][k] = <e_{gamma_k}, e_{gamma_j}>_{L2(dom)}
  double domain_measure = 0.0;
};

// Hermitian Gram matrix of the exponentials over the domain, entries from the
// closed-form indicator transform. Throws TooManyFrequencies above 4096.
GramSection gram_section(const DomainSpec& dom, const SpectrumSpec& spec);

// max off-diagonal |G| / measure(dom).
double orthogonality_check(const DomainSpec& dom, const SpectrumSpec& spec);

struct BoundsEstimate {
  std::vector<int> section_sizes;
  std::vector<double> lower_estimates;
  std::vector<double> upper_estimates;
  bool stabilized = false;
};

// Extreme Gram eigenvalues along nested section radii. Lower estimates are
// non-increasing and upper estimates non-decreasing by eigenvalue interlacing;
// stabilized once the last two lower estimates agree within 5%.
BoundsEstimate riesz_bounds_estimate(const DomainSpec& dom, const SpectrumSpec& spec,
                                     const std::vector<int>& section_radii);

// G^{-1}; its columns express the biorthogonal family
// g_k = sum_j (G^{-1})_{jk} e_j. Throws IllConditioned when the smallest
// eigenvalue is <= 1e-10.
Eigen::MatrixXcd dual_coefficients(const GramSection& gram);

// Moves every expanded frequency by an independent uniform vector of sup-norm
// < c; deterministic given seed, and the identity (bit-for-bit) at c = 0.
SpectrumSpec perturb_spectrum(const SpectrumSpec& spec, double c, std::uint64_t seed);

// Extreme eigenvalues of a Hermitian matrix (min, max).
std::pair<double, double> hermitian_extreme_eigenvalues(const Eigen::MatrixXcd& h);

}  // namespace zaklab

#endif
