#ifndef ZAKLAB_TESTS_ORACLES_HPP
#define ZAKLAB_TESTS_ORACLES_HPP

// Independent reference computations for the test suite. Everything here is
// deliberately implemented on a different route than the library: membership
// by signed-angle winding, Fourier transforms by quadrature, inverses by
// cofactors.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "zaklab/common.hpp"
#include "zaklab/geometry.hpp"

namespace oracles {

using zaklab::complexd;
using zaklab::kPi;
using zaklab::kTwoPi;

// 2x2 inverse by cofactors.
inline Eigen::Matrix2d cofactor_inverse(const Eigen::Matrix2d& m) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Eigen::Matrix2d inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

// Point-in-polygon by total signed angle (PhysBAM-style winding test).
inline bool winding_contains(const std::vector<Eigen::Vector2d>& verts, const Eigen::Vector2d& p) {
  double total = 0.0;
  const std::size_t n = verts.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Vector2d a = verts[k] - p;
    const Eigen::Vector2d b = verts[(k + 1) % n] - p;
    if (a.norm() == 0.0 || b.norm() == 0.0) return true;
    double theta = std::atan2(b.y(), b.x()) - std::atan2(a.y(), a.x());
    if (theta > kPi) theta -= 2 * kPi;
    if (theta < -kPi) theta += 2 * kPi;
    total += theta;
  }
  return std::abs(total) >= kPi;
}

// Midpoint quadrature of int_a^b e^{-2 pi i w x} dx with n nodes.
inline complexd interval_ft_quadrature(double a, double b, double w, int n) {
  complexd sum(0.0, 0.0);
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) sum += std::polar(1.0, -kTwoPi * w * (a + (i + 0.5) * h));
  return sum * h;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
  std::vector<double> nodes, weights;
  explicit GaussLegendre(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) {
          nodes[i] = x;
          weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
          break;
        }
      }
    }
  }
};

// closed-form int_{xl}^{xr} e^{-2 pi i w x} dx
inline complexd strip_ft(double xl, double xr, double w) {
  if (std::abs(w) < 1e-12) return complexd(xr - xl, 0.0);
  return (std::polar(1.0, -kTwoPi * w * xl) - std::polar(1.0, -kTwoPi * w * xr)) /
         complexd(0.0, kTwoPi * w);
}

// Semi-analytic polygon transform: scanline bands between vertex ordinates,
// closed-form x-strips, Gauss-Legendre in y. Independent of the edge-sum route.
inline complexd polygon_ft_scanline(const std::vector<Eigen::Vector2d>& verts,
                                    const Eigen::Vector2d& omega, const GaussLegendre& gl) {
  std::vector<double> ys;
  for (const auto& v : verts) ys.push_back(v.y());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end(), [](double a, double b) { return std::abs(a - b) < 1e-13; }),
           ys.end());

  auto crossings = [&](double y) {
    std::vector<double> xs;
    const std::size_t n = verts.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = verts[k];
      const auto& b = verts[(k + 1) % n];
      if ((a.y() < y && b.y() > y) || (b.y() < y && a.y() > y))
        xs.push_back(a.x() + (y - a.y()) * (b.x() - a.x()) / (b.y() - a.y()));
    }
    std::sort(xs.begin(), xs.end());
    return xs;
  };

  complexd total(0.0, 0.0);
  for (std::size_t b = 0; b + 1 < ys.size(); ++b) {
    const double y0 = ys[b], y1 = ys[b + 1];
    const double c = 0.5 * (y0 + y1), h = 0.5 * (y1 - y0);
    complexd band(0.0, 0.0);
    for (std::size_t g = 0; g < gl.nodes.size(); ++g) {
      const double y = c + h * gl.nodes[g];
      const auto xs = crossings(y);
      complexd strip(0.0, 0.0);
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
        strip += strip_ft(xs[i], xs[i + 1], omega.x());
      band += gl.weights[g] * strip * std::polar(1.0, -kTwoPi * omega.y() * y);
    }
    total += band * h;
  }
  return total;
}

inline complexd domain_ft_oracle(const zaklab::DomainSpec& dom, const Eigen::VectorXd& omega,
                                 const GaussLegendre& gl, int interval_nodes = 2048) {
  using zaklab::IntervalUnion;
  using zaklab::Polygon;
  using zaklab::PolygonUnion;
  return std::visit(
      [&](const auto& d) -> complexd {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          complexd s(0.0, 0.0);
          for (const auto& iv : d.parts())
            s += interval_ft_quadrature(iv.lo, iv.hi, omega[0], interval_nodes);
          return s;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return polygon_ft_scanline(d.vertices(), Eigen::Vector2d(omega[0], omega[1]), gl);
        } else {
          complexd s(0.0, 0.0);
          for (const auto& part : d.parts())
            s += polygon_ft_scanline(part.vertices(), Eigen::Vector2d(omega[0], omega[1]), gl);
          return s;
        }
      },
      dom.variant());
}

}  // namespace oracles

#endif
