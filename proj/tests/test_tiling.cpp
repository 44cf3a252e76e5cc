#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "zaklab/presets.hpp"
#include "zaklab/tiling.hpp"

using namespace zaklab;

namespace {

Point pt1(double x) {
  Point p(1);
  p << x;
  return p;
}

Point pt2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

// brute-force cover count over a fixed wide index window
int brute_cover_count(const DomainSpec& dom, const Lattice& lat, const Point& p, int radius) {
  int count = 0;
  if (dom.dim() == 1) {
    for (int n = -radius; n <= radius; ++n)
      if (contains(dom, p - lat.point(Eigen::VectorXi::Constant(1, n)))) ++count;
    return count;
  }
  Eigen::VectorXi n(2);
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b) {
      n << a, b;
      if (contains(dom, p - lat.point(n))) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("cover_set enumerates the covering translates") {
  const DomainSpec interval = preset_domain("unit-interval");
  auto cover = cover_set(interval, Lattice::scalar(1.0), pt1(0.5));
  REQUIRE(cover.size() == 1);
  CHECK(cover[0][0] == doctest::Approx(0.0));

  cover = cover_set(interval, Lattice::scalar(0.5), pt1(0.75));
  REQUIRE(cover.size() == 2);
  CHECK(cover[0][0] == doctest::Approx(0.0));
  CHECK(cover[1][0] == doctest::Approx(0.5));

  const DomainSpec octagon = preset_domain("octagon");
  const Point near_origin = pt2(0.05, 0.03);
  const auto oct_cover = cover_set(octagon, Lattice::identity(2), near_origin);
  CHECK(oct_cover.size() == 14);
  CHECK(brute_cover_count(octagon, Lattice::identity(2), near_origin, 6) == 14);
}

TEST_CASE("cover_set size equals the tiling level at random interior points") {
  struct Case {
    const char* name;
    int level;
  };
  for (const Case c : {Case{"parallelogram", 2}, Case{"lshape", 3}, Case{"octagon", 14}}) {
    const DomainSpec dom = preset_domain(c.name);
    const Lattice lat = Lattice::identity(2);
    Rng rng(41);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 100; ++trial) {
      const Point p = pt2(rng.uniform01(), rng.uniform01());
      bool clear = true;
      for (int a = -7; a <= 7 && clear; ++a)
        for (int b = -7; b <= 7 && clear; ++b)
          if (boundary_distance(dom, p - lat.point((Eigen::VectorXi(2) << a, b).finished())) <
              1e-7)
            clear = false;
      if (!clear) continue;
      CHECK(static_cast<int>(cover_set(dom, lat, p).size()) == c.level);
      ++tested;
    }
    CHECK(tested >= 100);
  }
}

TEST_CASE("cover_set is locally constant") {
  const DomainSpec dom = preset_domain("lshape");
  const Lattice lat = Lattice::identity(2);
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Point p = pt2(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    double radius = 0.02;
    // shrink until strictly interior to every nearby translate boundary
    for (int a = -7; a <= 7; ++a)
      for (int b = -7; b <= 7; ++b) {
        const double dist =
            boundary_distance(dom, p - lat.point((Eigen::VectorXi(2) << a, b).finished()));
        if (dist > 1e-9) radius = std::min(radius, 0.5 * dist);
      }
    const auto base = cover_indices(dom, lat, p);
    for (int jitter = 0; jitter < 10; ++jitter) {
      const Point q =
          pt2(p[0] + rng.uniform(-radius, radius), p[1] + rng.uniform(-radius, radius));
      const auto moved = cover_indices(dom, lat, q);
      REQUIRE(moved.size() == base.size());
      std::set<std::pair<int, int>> sb, sm;
      for (const auto& n : base) sb.insert({n[0], n[1]});
      for (const auto& n : moved) sm.insert({n[0], n[1]});
      CHECK(sb == sm);
    }
  }
}

TEST_CASE("multitiling_level finds the published levels") {
  CHECK(*multitiling_level(preset_domain("unit-interval"), Lattice::scalar(1.0), 2000, 1).level ==
        1);
  CHECK(*multitiling_level(preset_domain("unit-interval"), Lattice::scalar(0.5), 2000, 1).level ==
        2);
  CHECK(*multitiling_level(preset_domain("parallelogram"), Lattice::identity(2), 2000, 1).level ==
        2);
  CHECK(*multitiling_level(preset_domain("lshape"), Lattice::identity(2), 2000, 1).level == 3);
  CHECK(*multitiling_level(preset_domain("octagon"), Lattice::identity(2), 2000, 1).level == 14);
}

TEST_CASE("multitiling_level is seed independent on the named domains") {
  for (std::uint64_t seed : {2ull, 99ull, 12345ull}) {
    CHECK(*multitiling_level(preset_domain("unit-interval"), Lattice::scalar(0.5), 1000, seed)
               .level == 2);
    CHECK(*multitiling_level(preset_domain("lshape"), Lattice::identity(2), 1000, seed).level ==
          3);
  }
}

TEST_CASE("multitiling_level reports non-tilings and rejects degenerate input") {
  // [0, 3/2) against the integer lattice covers points once or twice
  const TilingReport r =
      multitiling_level(make_interval_domain(0.0, 1.5), Lattice::scalar(1.0), 2000, 5);
  CHECK(!r.level.has_value());
  CHECK(r.cover_histogram.size() >= 2);

  CHECK_THROWS_AS(multitiling_level(preset_domain("unit-interval"), Lattice::scalar(1.0), 50, 1),
                  Error);
}

TEST_CASE("sum on pieces reproduces the tiling level") {
  // tiling: the translates partition the support
  CHECK(check_sum_on_pieces(preset_domain("unit-interval"), Lattice::scalar(1.0),
                            indicator_function(make_interval_domain(0.2, 0.7)), 256) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // 2-tiling with a smooth test function
  CHECK(check_sum_on_pieces(preset_domain("unit-interval"), Lattice::scalar(0.5),
                            gaussian_function(1, 3.0), 256) ==
        doctest::Approx(2.0).epsilon(5e-3));

  // 2-tiling of the plane against the indicator of the unit square
  CHECK(check_sum_on_pieces(preset_domain("parallelogram"), Lattice::identity(2),
                            indicator_function(preset_domain("unit-square")), 128) ==
        doctest::Approx(2.0).epsilon(5e-3));

  // zero function is rejected
  SampledFunction zero{[](const Point&) { return 0.0; }, Eigen::VectorXd::Zero(1),
                       Eigen::VectorXd::Ones(1)};
  CHECK_THROWS_AS(
      check_sum_on_pieces(preset_domain("unit-interval"), Lattice::scalar(1.0), zero, 64), Error);
}
