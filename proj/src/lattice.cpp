#include "zaklab/lattice.hpp"

#include <cmath>

namespace zaklab {

Lattice Lattice::from_generator(const Eigen::MatrixXd& gen) {
  if (gen.rows() != gen.cols() || gen.rows() < 1)
    fail(errc::invalid_argument, "lattice generator must be a square matrix");
  if (!gen.allFinite()) fail(errc::invalid_argument, "lattice generator has non-finite entries");
  const double det = gen.determinant();
  if (std::abs(det) < 1e-14) fail(errc::singular_matrix, "lattice generator is singular");
  Eigen::MatrixXd inv = gen.inverse();
  return Lattice(gen, std::move(inv), det);
}

double Lattice::shortest_generator() const {
  double best = gen_.col(0).norm();
  for (int j = 1; j < gen_.cols(); ++j) best = std::min(best, gen_.col(j).norm());
  return best;
}

LatticePairReport check_pair(const Lattice& m, const Lattice& n, double tol) {
  if (m.dim() != n.dim()) fail(errc::dimension_mismatch, "lattice dimensions differ");
  LatticePairReport r;
  r.det_product = m.det() * n.det();
  r.product_is_unimodular = std::abs(r.det_product - 1.0) <= tol;
  r.ntm = n.gen().transpose() * m.gen();
  r.ntm_is_integer = true;
  for (int i = 0; i < r.ntm.rows(); ++i)
    for (int j = 0; j < r.ntm.cols(); ++j)
      if (nearest_integer_distance(r.ntm(i, j)) > tol) r.ntm_is_integer = false;
  return r;
}

DomainSpec fundamental_domain(const Lattice& lat) {
  if (lat.dim() == 1) {
    const double g = lat.gen()(0, 0);
    return make_interval_domain(std::min(0.0, g), std::max(0.0, g));
  }
  if (lat.dim() == 2) {
    const Eigen::Vector2d c0 = lat.gen().col(0);
    const Eigen::Vector2d c1 = lat.gen().col(1);
    std::vector<Eigen::Vector2d> verts = {Eigen::Vector2d::Zero(), c0, c0 + c1, c1};
    if (lat.det() < 0) std::reverse(verts.begin(), verts.end());
    return DomainSpec(Polygon(std::move(verts)));
  }
  fail(errc::unsupported_dimension, "fundamental_domain supports d <= 2");
}

double density_product(const Lattice& m, const Lattice& n, std::pair<int, int> coset_counts) {
  if (coset_counts.first < 1 || coset_counts.second < 1)
    fail(errc::invalid_argument, "coset counts must be positive");
  return (coset_counts.first / m.volume()) * (coset_counts.second / n.volume());
}

}  // namespace zaklab
