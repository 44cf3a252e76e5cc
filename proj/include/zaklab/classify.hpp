#ifndef ZAKLAB_CLASSIFY_HPP
#define ZAKLAB_CLASSIFY_HPP

#include <string>

#include "zaklab/tiling.hpp"
#include "zaklab/zak.hpp"

namespace zaklab {

enum class Verdict {
  NotComplete,
  CompleteNotFrame,
  RieszBasisFrame,
  OrthogonalConstantModulus,
  OrthonormalUnitModulus,
};

std::string to_string(Verdict v);

struct ClassificationReport {
  double ess_inf_estimate = 0.0;
  double ess_sup_estimate = 0.0;
  double zero_fraction = 0.0;  // fraction of nodes with |Z| < tol_zero
  double tol_zero = 0.0;
  double flatness = 0.0;  // ess_sup - ess_inf
  Verdict verdict = Verdict::NotComplete;
  double refined_min = 0.0;  // grid minimum after local refinement
};

// |Z_M g| statistics -> completeness / frame / Riesz / orthogonality verdict:
//   zero_fraction > 2 (1/res_x + 1/res_xi)        -> NotComplete
//   refined minimum < tol_zero                     -> CompleteNotFrame
//   otherwise RieszBasisFrame (frame and Riesz coincide on lattice products),
//   upgraded to OrthogonalConstantModulus when flatness <= tol_flat * ess_sup
//   and to OrthonormalUnitModulus when also |ess_sup - 1| <= tol_flat.
// Throws IncompatiblePair unless the grid was built from a lattice pair with
// det(MN) = 1 and N^T M integer.
ClassificationReport classify_gabor(const ZakGrid& grid, double tol_zero = 1e-8,
                                    double tol_flat = 1e-6);

struct ZeroSearchResult {
  bool found = false;
  Point x, xi;
  double magnitude = 0.0;
  int refinement_levels = 0;
};

// Coarse grid argmin of |Z| on Q_M x Q_N followed by `levels` rounds of 4x
// local grid refinement in a shrinking window. found = magnitude < tol_zero;
// found == false is a valid outcome (tiling windows have |Z| bounded below).
ZeroSearchResult find_zero(const WindowSpec& w, const Lattice& m, const Lattice& n, int coarse_res,
                           int levels, double tol_zero = 1e-8);

struct TheoremHarnessReport {
  TilingReport tiling;
  ClassificationReport classification;
  double orthogonality_residual = 0.0;  // exponentials E(N Z^d) on dom
  int orthogonality_radius = 0;
  ZeroSearchResult zero;
  // A non-degenerate verdict forces a 1-tiling with orthogonal exponentials.
  bool riesz_implies_tiling_ok = false;
  // A multi-tiling level k > 1 forces a Zak zero and a degenerate verdict.
  bool multitiling_implies_zero_ok = false;
  bool pass = false;
};

// Consistency harness tying together the tiling level, the Zak-magnitude
// classification and the exponential orthogonality check for chi_dom with the
// lattice pair (M, N).
TheoremHarnessReport theorem_harness(const DomainSpec& dom, const Lattice& m, const Lattice& n);

}  // namespace zaklab

#endif
