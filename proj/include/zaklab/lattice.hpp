#ifndef ZAKLAB_LATTICE_HPP
#define ZAKLAB_LATTICE_HPP

#include <Eigen/Dense>
#include <utility>

#include "zaklab/common.hpp"
#include "zaklab/geometry.hpp"

namespace zaklab {

// Full rank lattice M(Z^d) with cached inverse and determinant.
// Immutable after construction; safe to share across threads.
class Lattice {
public:
  static Lattice from_generator(const Eigen::MatrixXd& gen);
  static Lattice scalar(double g) { return from_generator(Eigen::MatrixXd::Constant(1, 1, g)); }
  static Lattice identity(int dim) { return from_generator(Eigen::MatrixXd::Identity(dim, dim)); }

  int dim() const { return static_cast<int>(gen_.rows()); }
  const Eigen::MatrixXd& gen() const { return gen_; }
  const Eigen::MatrixXd& gen_inv() const { return gen_inv_; }
  double det() const { return det_; }

  double volume() const { return std::abs(det_); }
  double density() const { return 1.0 / std::abs(det_); }

  // Dual lattice M^{-T}(Z^d).
  Lattice dual() const { return from_generator(gen_inv_.transpose()); }

  // Lattice point M n.
  Eigen::VectorXd point(const Eigen::VectorXi& n) const { return gen_ * n.cast<double>(); }

  // Shortest generator column length (crude lower bound on the packing radius).
  double shortest_generator() const;

private:
  Lattice(Eigen::MatrixXd gen, Eigen::MatrixXd inv, double det)
      : gen_(std::move(gen)), gen_inv_(std::move(inv)), det_(det) {}

  Eigen::MatrixXd gen_, gen_inv_;
  double det_;
};

struct LatticePairReport {
  double det_product = 0.0;
  bool product_is_unimodular = false;
  Eigen::MatrixXd ntm;
  bool ntm_is_integer = false;
};

// Compatibility conditions for a translation/modulation lattice pair:
// det(MN) = 1 and N^T M integer (entrywise nearest-integer distance <= tol).
LatticePairReport check_pair(const Lattice& m, const Lattice& n, double tol = 1e-9);

// Canonical fundamental domain M [0,1)^d as interval (d=1) or parallelogram (d=2).
DomainSpec fundamental_domain(const Lattice& lat);

// Beurling density of the separable product of coset unions:
// (c1 / |det M|) * (c2 / |det N|).
double density_product(const Lattice& m, const Lattice& n, std::pair<int, int> coset_counts);

}  // namespace zaklab

#endif
