#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zaklab/gabor.hpp"
#include "zaklab/presets.hpp"

using namespace zaklab;

namespace {

Eigen::VectorXd freq1(double x) {
  Eigen::VectorXd f(1);
  f << x;
  return f;
}

Point pt1(double x) {
  Point p(1);
  p << x;
  return p;
}

const WindowSpec kUnitInterval{IndicatorWindow{preset_domain("unit-interval")}};

SpectrumSpec integer_lattice(int radius) {
  return SpectrumSpec(LatticeCosets{Lattice::scalar(1.0), {Eigen::VectorXd::Zero(1)}, radius});
}

}  // namespace

TEST_CASE("orthonormal system reproduces its own element") {
  GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(1.0), 3), integer_lattice(5)};
  const SampledFunction f = indicator_function(preset_domain("unit-interval"));
  const Eigen::MatrixXcd c = gabor_coefficients(f, sys, 1024);
  // the (lambda = 0, gamma = 0) coefficient is 1, everything else ~ 0
  double offmax = 0.0;
  for (Eigen::Index l = 0; l < c.rows(); ++l)
    for (Eigen::Index g = 0; g < c.cols(); ++g) {
      const bool center = sys.shifts[static_cast<std::size_t>(l)][0] == 0.0 &&
                          std::abs(sys.modulations.expand()[static_cast<std::size_t>(g)][0]) <
                              1e-12;
      if (center)
        CHECK(std::abs(c(l, g) - 1.0) < 1e-12);
      else
        offmax = std::max(offmax, std::abs(c(l, g)));
    }
  CHECK(offmax < 1e-12);
}

TEST_CASE("coefficient energy matches the per-piece Parseval oracle") {
  // half-integer translations of the unit window against integer modulations
  GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(0.5), 4), integer_lattice(20)};
  const SampledFunction f = indicator_function(make_interval_domain(0.2, 0.7));
  const Eigen::MatrixXcd c = gabor_coefficients(f, sys, 2048);

  // oracle: per translate, closed-form slab coefficients of f restricted to it
  double expected = 0.0;
  for (const auto& lambda : sys.shifts) {
    const double lo = std::max(0.2, lambda[0]);
    const double hi = std::min(0.7, lambda[0] + 1.0);
    if (lo >= hi) continue;
    for (int g = -20; g <= 20; ++g) expected += std::norm(oracles::strip_ft(lo, hi, g));
  }
  CHECK(c.squaredNorm() == doctest::Approx(expected).epsilon(1e-3));

  // the truncated energy is within the analytic tail of 2 ||f||^2
  CHECK(expected < 2 * 0.5);
  CHECK(expected > 2 * 0.5 - 0.03);

  // zero input gives zero coefficients
  SampledFunction zero{[](const Point&) { return 0.0; }, Eigen::VectorXd::Constant(1, 0.0),
                       Eigen::VectorXd::Constant(1, 1.0)};
  CHECK(gabor_coefficients(zero, sys, 256).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coefficients vanish off the supporting translate for tilings") {
  GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(1.0), 4), integer_lattice(10)};
  const SampledFunction f = indicator_function(make_interval_domain(2.1, 2.8));
  const Eigen::MatrixXcd c = gabor_coefficients(f, sys, 2048);
  for (Eigen::Index l = 0; l < c.rows(); ++l) {
    if (sys.shifts[static_cast<std::size_t>(l)][0] == 2.0) continue;
    CHECK(c.row(l).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("uncovered support is detected") {
  GaborSystemSpec sys{kUnitInterval, {pt1(0.0)}, integer_lattice(5)};
  const SampledFunction f = indicator_function(make_interval_domain(0.5, 1.5));
  CHECK_THROWS_AS(gabor_coefficients(f, sys, 256), Error);
}

TEST_CASE("frame sum ratio witnesses the tiling level") {
  SUBCASE("orthonormal baseline has Parseval ratio one") {
    GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(1.0), 5),
                        integer_lattice(40)};
    const FrameSumReport rep = frame_sum_check(gaussian_function(1, 3.0), sys, 1024);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(5e-3));
  }

  SUBCASE("doubled translations double the ratio") {
    GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(0.5), 9),
                        integer_lattice(40)};
    const FrameSumReport rep = frame_sum_check(gaussian_function(1, 3.0), sys, 1024);
    CHECK(rep.ratio == doctest::Approx(2.0).epsilon(5e-3));
  }

  SUBCASE("two-coset modulations stay inside the section eigenvalue bounds") {
    const SpectrumSpec cosets(
        LatticeCosets{Lattice::scalar(2.0), {freq1(0.0), freq1(0.5)}, 20});
    GaborSystemSpec sys{kUnitInterval, lattice_shifts(Lattice::scalar(1.0), 3), cosets};
    const SampledFunction f = indicator_function(make_interval_domain(0.1, 0.9));
    const FrameSumReport rep = frame_sum_check(f, sys, 4096);
    // ratio in [l, u] from the Gram section: the tiling level is 1 here
    CHECK(rep.ratio > 1.0 - 1.0 / std::sqrt(2.0) - 0.02);
    CHECK(rep.ratio < 1.0 + 1.0 / std::sqrt(2.0) + 0.02);
  }
}

TEST_CASE("biorthogonality of the dual family") {
  const SpectrumSpec cosets(
      LatticeCosets{Lattice::scalar(2.0), {freq1(0.0), freq1(0.5)}, 10});

  SUBCASE("orthonormal self-dual case") {
    const double dev = biorthogonality_check(preset_domain("unit-interval"),
                                             {pt1(-2.0), pt1(-1.0), pt1(0.0), pt1(1.0), pt1(2.0)},
                                             integer_lattice(10), 4096);
    CHECK(dev < 1e-10);
  }

  SUBCASE("two-coset dual at the origin translate") {
    const double dev =
        biorthogonality_check(preset_domain("unit-interval"), {pt1(0.0)}, cosets, 8192);
    CHECK(dev < 1e-6);
  }

  SUBCASE("even translates keep gamma . lambda integral") {
    const double dev = biorthogonality_check(preset_domain("unit-interval"),
                                             {pt1(-2.0), pt1(0.0), pt1(2.0)}, cosets, 8192);
    CHECK(dev < 1e-6);
  }

  SUBCASE("odd translates violate the phase hypothesis") {
    CHECK_THROWS_AS(biorthogonality_check(preset_domain("unit-interval"),
                                          {pt1(-1.0), pt1(0.0), pt1(1.0)}, cosets, 4096),
                    Error);
  }

  SUBCASE("overlapping translates are rejected") {
    CHECK_THROWS_AS(biorthogonality_check(preset_domain("unit-interval"), {pt1(0.0), pt1(0.5)},
                                          integer_lattice(5), 1024),
                    Error);
  }

  SUBCASE("doubling the quadrature does not worsen the deviation") {
    const double coarse =
        biorthogonality_check(preset_domain("unit-interval"), {pt1(0.0)}, cosets, 2048);
    const double fine =
        biorthogonality_check(preset_domain("unit-interval"), {pt1(0.0)}, cosets, 4096);
    CHECK(fine <= coarse + 1e-12);
  }
}
