#ifndef ZAKLAB_GABOR_HPP
#define ZAKLAB_GABOR_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zaklab/function.hpp"
#include "zaklab/spectral.hpp"
#include "zaklab/zak.hpp"

namespace zaklab {

// Finite truncation of G(g, Lambda x Gamma): window, explicit translation
// list, modulation spectrum.
struct GaborSystemSpec {
  WindowSpec window;
  std::vector<Point> shifts;
  SpectrumSpec modulations;
};

std::vector<Point> lattice_shifts(const Lattice& lat, int radius);

// c_{lambda gamma} = int f(x) w(x - lambda) e^{-2 pi i gamma . x} dx by
// midpoint quadrature at quad_res nodes per unit length over the support box
// of f. Throws SupportNotCovered when part of supp(f) meets no translate of an
// indicator window.
Eigen::MatrixXcd gabor_coefficients(const SampledFunction& f, const GaborSystemSpec& sys,
                                    int quad_res);

struct FrameSumReport {
  double sum_sq_coeffs = 0.0;
  double norm_sq = 0.0;
  double ratio = 0.0;
  std::string truncation_note;
};

FrameSumReport frame_sum_check(const SampledFunction& f, const GaborSystemSpec& sys, int quad_res);

// Builds the biorthogonal family on dom from the Gram inverse, translates it
// along lam_list, and returns the max deviation of the cross-inner-product
// matrix from the identity over inner indices (outer 20% of the section is
// excluded as edge effect). Requires pairwise disjoint translates and
// gamma . lambda integer for all pairs (ConditionEGammaLambda otherwise).
double biorthogonality_check(const DomainSpec& dom, const std::vector<Point>& lam_list,
                             const SpectrumSpec& spec, int quad_res);

}  // namespace zaklab

#endif
