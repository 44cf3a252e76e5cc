#include "zaklab/zak.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zaklab/parallel.hpp"

namespace zaklab {

namespace {

// Multi-index walk over [lo, hi]^d (inclusive).
template <typename Fn>
void for_each_index(const Eigen::VectorXi& lo, const Eigen::VectorXi& hi, Fn&& fn) {
  const int d = static_cast<int>(lo.size());
  Eigen::VectorXi n = lo;
  for (;;) {
    fn(n);
    int k = 0;
    while (k < d) {
      if (++n[k] <= hi[k]) break;
      n[k] = lo[k];
      ++k;
    }
    if (k == d) return;
  }
}

// Candidate n-box with x + M n inside the window support box.
void support_index_box(const BoundingBox& box, const Lattice& m, const Point& x,
                       Eigen::VectorXi& lo, Eigen::VectorXi& hi) {
  const int d = m.dim();
  Eigen::MatrixXd corners(d, 1 << d);
  for (int c = 0; c < (1 << d); ++c) {
    Eigen::VectorXd y(d);
    for (int k = 0; k < d; ++k) y[k] = ((c >> k) & 1 ? box.hi[k] : box.lo[k]) - x[k];
    corners.col(c) = m.gen_inv() * y;
  }
  lo.resize(d);
  hi.resize(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = static_cast<int>(std::floor(corners.row(k).minCoeff()));
    hi[k] = static_cast<int>(std::ceil(corners.row(k).maxCoeff()));
  }
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Point grid_node(const Lattice& lat, int res, std::size_t flat) {
  const int d = lat.dim();
  Eigen::VectorXd u(d);
  for (int k = 0; k < d; ++k) {
    u[k] = (static_cast<double>(flat % res) + 0.5) / res;
    flat /= res;
  }
  return lat.gen() * u;
}

}  // namespace

int WindowSpec::dim() const {
  return std::visit(
      [](const auto& w) -> int {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, IndicatorWindow>)
          return w.dom.dim();
        else
          return w.dim;
      },
      v_);
}

const DomainSpec* WindowSpec::indicator_domain() const {
  if (const auto* iw = std::get_if<IndicatorWindow>(&v_)) return &iw->dom;
  return nullptr;
}

double WindowSpec::operator()(const Point& x) const {
  return std::visit(
      [&](const auto& w) -> double {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, IndicatorWindow>)
          return contains(w.dom, x) ? 1.0 : 0.0;
        else
          return std::exp(-kPi * x.squaredNorm());
      },
      v_);
}

double WindowSpec::l2_norm_sq() const {
  return std::visit(
      [](const auto& w) -> double {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, IndicatorWindow>)
          return measure(w.dom);
        else
          return std::pow(2.0, -0.5 * w.dim);
      },
      v_);
}

int exact_truncation(const WindowSpec& w, const Lattice& m, const BoundingBox& x_bbox) {
  const DomainSpec* dom = w.indicator_domain();
  if (!dom) return kGaussianTruncation;
  const BoundingBox sup = bounding_box(*dom);
  const int d = m.dim();
  // worst case over the corners of the evaluation region
  int radius = 0;
  Eigen::VectorXi lo(d), hi(d);
  for (int c = 0; c < (1 << d); ++c) {
    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) x[k] = (c >> k) & 1 ? x_bbox.hi[k] : x_bbox.lo[k];
    support_index_box(sup, m, x, lo, hi);
    radius = std::max({radius, lo.cwiseAbs().maxCoeff(), hi.cwiseAbs().maxCoeff()});
  }
  return radius + 1;
}

int default_truncation(const WindowSpec& w, const Lattice& m) {
  if (!w.is_indicator()) return kGaussianTruncation;
  const DomainSpec qm = fundamental_domain(m);
  return exact_truncation(w, m, bounding_box(qm));
}

complexd zak_eval(const WindowSpec& w, const Lattice& m, const Point& x, const Point& xi,
                  int truncation) {
  const int d = m.dim();
  if (x.size() != d || xi.size() != d || w.dim() != d)
    fail(errc::dimension_mismatch, "zak_eval dimensions disagree");
  if (truncation < 1) fail(errc::invalid_argument, "zak_eval needs truncation >= 1");

  const double prefactor = std::sqrt(m.volume());
  complexd sum(0.0, 0.0);

  if (const DomainSpec* dom = w.indicator_domain()) {
    Eigen::VectorXi lo(d), hi(d);
    support_index_box(bounding_box(*dom), m, x, lo, hi);
    for (int k = 0; k < d; ++k)
      if (lo[k] < -truncation || hi[k] > truncation)
        fail(errc::truncation_too_small,
             "indicator window support exceeds the truncation radius");
    for_each_index(lo, hi, [&](const Eigen::VectorXi& n) {
      const Eigen::VectorXd mn = m.gen() * n.cast<double>();
      if (contains(*dom, x + mn)) sum += std::polar(1.0, kTwoPi * xi.dot(mn));
    });
    return prefactor * sum;
  }

  Eigen::VectorXi lo = Eigen::VectorXi::Constant(d, -truncation);
  Eigen::VectorXi hi = Eigen::VectorXi::Constant(d, truncation);
  for_each_index(lo, hi, [&](const Eigen::VectorXi& n) {
    const Eigen::VectorXd mn = m.gen() * n.cast<double>();
    const double e = kPi * (x + mn).squaredNorm();
    if (e > 745.0) return;  // exp underflows
    sum += std::exp(-e) * std::polar(1.0, kTwoPi * xi.dot(mn));
  });
  return prefactor * sum;
}

std::size_t ZakGrid::x_count() const { return ipow(static_cast<std::size_t>(res_x), dim()); }
std::size_t ZakGrid::xi_count() const { return ipow(static_cast<std::size_t>(res_xi), dim()); }

Point ZakGrid::x_node(std::size_t flat) const { return grid_node(m_lattice, res_x, flat); }
Point ZakGrid::xi_node(std::size_t flat) const { return grid_node(n_lattice, res_xi, flat); }

const complexd& ZakGrid::at(std::size_t x_flat, std::size_t xi_flat) const {
  return values[x_flat * xi_count() + xi_flat];
}

ZakGrid zak_grid(const WindowSpec& w, const Lattice& m, const Lattice& n, int res_x, int res_xi,
                 int truncation) {
  if (res_x < 2 || res_xi < 2) fail(errc::invalid_argument, "zak_grid needs resolutions >= 2");
  if (m.dim() != n.dim()) fail(errc::dimension_mismatch, "lattice dimensions differ");
  if (truncation <= 0) truncation = default_truncation(w, m);

  ZakGrid grid{m, n, w, res_x, res_xi, truncation, true, false, {}};
  const LatticePairReport pair = check_pair(m, n);
  grid.pair_ok = pair.product_is_unimodular && pair.ntm_is_integer;

  const std::size_t nx = grid.x_count();
  const std::size_t nxi = grid.xi_count();
  if (nx * nxi > (std::size_t{1} << 25))
    fail(errc::invalid_argument, "zak_grid would exceed the in-memory node budget");
  grid.values.resize(nx * nxi);

  parallel_for(nx, [&](std::size_t ix) {
    const Point x = grid.x_node(ix);
    for (std::size_t j = 0; j < nxi; ++j)
      grid.values[ix * nxi + j] = zak_eval(w, m, x, grid.xi_node(j), truncation);
  });
  return grid;
}

ZakSection zak_xi_section(const WindowSpec& w, const Lattice& m, const Lattice& n, const Point& x,
                          int res, int truncation) {
  if (res < 2) fail(errc::invalid_argument, "zak_xi_section needs res >= 2");
  if (truncation <= 0) {
    BoundingBox xb{x, x};
    truncation =
        w.is_indicator() ? exact_truncation(w, m, xb) : kGaussianTruncation;
  }
  ZakSection sec{n, x, res, {}};
  const std::size_t count = ipow(static_cast<std::size_t>(res), n.dim());
  sec.values.resize(count);
  const int trunc = truncation;
  parallel_for(count, [&](std::size_t j) {
    sec.values[j] = zak_eval(w, m, x, grid_node(n, res, j), trunc);
  });
  return sec;
}

double check_quasiperiodicity(const WindowSpec& w, const Lattice& m, const Lattice& n,
                              const std::vector<Eigen::VectorXi>& shifts, int probes,
                              std::uint64_t seed) {
  if (probes < 10) fail(errc::invalid_argument, "check_quasiperiodicity needs probes >= 10");
  const int d = m.dim();

  int max_shift = 1;
  for (const auto& s : shifts) max_shift = std::max(max_shift, s.cwiseAbs().maxCoeff());
  int truncation = kGaussianTruncation + max_shift;
  if (w.is_indicator()) {
    const BoundingBox qm = bounding_box(fundamental_domain(m));
    BoundingBox region = qm;
    for (const auto& s : shifts) {
      const Eigen::VectorXd ms = m.gen() * s.cast<double>();
      region.lo = region.lo.cwiseMin(qm.lo + ms).cwiseMin(qm.lo - ms);
      region.hi = region.hi.cwiseMax(qm.hi + ms).cwiseMax(qm.hi - ms);
    }
    truncation = exact_truncation(w, m, region);
  }

  Rng rng(seed);
  double residual = 0.0;
  for (int p = 0; p < probes; ++p) {
    Eigen::VectorXd u(d), v(d);
    for (int k = 0; k < d; ++k) u[k] = rng.uniform01();
    for (int k = 0; k < d; ++k) v[k] = rng.uniform01();
    const Point x = m.gen() * u;
    const Point xi = n.gen() * v;
    const complexd base = zak_eval(w, m, x, xi, truncation);
    for (const auto& s : shifts) {
      const Eigen::VectorXd ms = m.gen() * s.cast<double>();
      const Eigen::VectorXd ns = n.gen() * s.cast<double>();
      const complexd lhs1 = zak_eval(w, m, x + ms, xi, truncation);
      const complexd rhs1 = std::polar(1.0, -kTwoPi * xi.dot(ms)) * base;
      const complexd lhs2 = zak_eval(w, m, x, xi + ns, truncation);
      residual = std::max({residual, std::abs(lhs1 - rhs1), std::abs(lhs2 - base)});
    }
  }
  return residual;
}

double check_isometry(const WindowSpec& w, const Lattice& m, const Lattice& n, int quad_res,
                      int truncation) {
  if (quad_res < 2) fail(errc::invalid_argument, "check_isometry needs quad_res >= 2");
  if (truncation <= 0) truncation = default_truncation(w, m);
  const int d = m.dim();
  const std::size_t nx = ipow(static_cast<std::size_t>(quad_res), d);
  const double norm_sq = w.l2_norm_sq();
  const LatticePairReport pair = check_pair(m, n);

  double quad = 0.0;
  if (w.is_indicator() && pair.ntm_is_integer) {
    // |Z(x, .)|^2 summed over the xi grid collapses: for cover translates
    // n, n' the xi sum of e^{2 pi i v . (N^T M)(n - n')} is 0 unless
    // (N^T M)(n - n') vanishes mod quad_res per axis.
    const DomainSpec& dom = *w.indicator_domain();
    const BoundingBox sup = bounding_box(dom);
    Eigen::MatrixXi ntm(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) ntm(i, j) = static_cast<int>(std::llround(pair.ntm(i, j)));
    std::vector<double> partial(nx);
    parallel_for(nx, [&](std::size_t ix) {
      const Point x = grid_node(m, quad_res, ix);
      Eigen::VectorXi lo(d), hi(d);
      support_index_box(sup, m, x, lo, hi);
      std::vector<Eigen::VectorXi> cov;
      for_each_index(lo, hi, [&](const Eigen::VectorXi& nn) {
        if (contains(dom, x + m.gen() * nn.cast<double>())) cov.push_back(nn);
      });
      double acc = 0.0;
      for (const auto& a : cov)
        for (const auto& b : cov) {
          const Eigen::VectorXi p = ntm * (a - b);
          double term = 1.0;
          for (int k = 0; k < d && term != 0.0; ++k) {
            if (p[k] % quad_res != 0)
              term = 0.0;
            else
              term *= quad_res * ((p[k] / quad_res) % 2 == 0 ? 1.0 : -1.0);
          }
          acc += term;
        }
      partial[ix] = acc;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    quad = m.volume() * total * (m.volume() / nx) * (n.volume() / nx);
  } else {
    const std::size_t nxi = nx;
    std::vector<double> partial(nx);
    parallel_for(nx, [&](std::size_t ix) {
      const Point x = grid_node(m, quad_res, ix);
      double acc = 0.0;
      for (std::size_t j = 0; j < nxi; ++j)
        acc += std::norm(zak_eval(w, m, x, grid_node(n, quad_res, j), truncation));
      partial[ix] = acc;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    quad = total * (m.volume() / nx) * (n.volume() / nxi);
  }
  return std::abs(quad - norm_sq) / norm_sq;
}

}  // namespace zaklab
