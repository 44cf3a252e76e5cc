#include "zaklab/presets.hpp"

#include <cmath>

namespace zaklab {

namespace {

DomainSpec parallelogram_p() {
  // area-2 parallelogram leaning one unit to the right; 2-tiles R^2 by Z^2 and
  // every x with 0 < x2 < x1 < 1 is covered by the translates 0 and (-1, 0)
  return make_polygon({{-1.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}, {0.0, 1.0}});
}

DomainSpec lshape_l() {
  // three unit squares stepping along (1, -1); 3-tiles R^2 by Z^2
  auto square = [](double ox, double oy) {
    return std::vector<std::pair<double, double>>{
        {ox, oy}, {ox + 1, oy}, {ox + 1, oy + 1}, {ox, oy + 1}};
  };
  return make_polygon_union({square(0, 0), square(1, -1), square(2, -2)});
}

DomainSpec octagon_o() {
  // [-2,2]^2 with unit corner cuts, area 14; 14-tiles R^2 by Z^2
  return make_polygon(
      {{-2, -1}, {-1, -2}, {1, -2}, {2, -1}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1}});
}

DomainSpec irrational_gap() {
  const double a = std::sqrt(2.0);
  return make_interval_union({{0.0, 0.5}, {a, a + 0.5}});
}

}  // namespace

DomainSpec preset_domain(const std::string& name) {
  if (name == "unit-interval") return make_interval_domain(0.0, 1.0);
  if (name == "unit-square") return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  if (name == "parallelogram") return parallelogram_p();
  if (name == "lshape") return lshape_l();
  if (name == "octagon") return octagon_o();
  if (name == "irrational-gap") return irrational_gap();
  if (name == "parallelogram-q") {
    // common fundamental domain of [[sqrt2,0],[1,1]](Z^2) and its partner
    const double s = std::sqrt(2.0);
    return make_polygon({{0, 0}, {s, 1}, {s, 2}, {0, 1}});
  }
  fail(errc::invalid_argument, "unknown domain preset '" + name + "'");
}

std::vector<std::string> preset_domain_names() {
  return {"unit-interval", "unit-square",  "parallelogram", "lshape",
          "octagon",       "irrational-gap", "parallelogram-q"};
}

std::optional<WindowSpec> preset_window(const std::string& name) {
  if (name == "gaussian") return WindowSpec(GaussianWindow{1});
  if (name == "gaussian-2d") return WindowSpec(GaussianWindow{2});
  for (const auto& dom : preset_domain_names())
    if (name == dom) return WindowSpec(IndicatorWindow{preset_domain(name)});
  return std::nullopt;
}

ReproPreset repro_preset(const std::string& id) {
  auto point2 = [](double x, double y) {
    Point p(2);
    p << x, y;
    return p;
  };
  if (id == "tiling-a")
    return {id, WindowSpec(IndicatorWindow{preset_domain("unit-interval")}), Lattice::scalar(1.0),
            Lattice::scalar(1.0), std::nullopt, 512};
  if (id == "tiling-b")
    return {id, WindowSpec(IndicatorWindow{preset_domain("unit-interval")}), Lattice::scalar(0.5),
            Lattice::scalar(2.0), std::nullopt, 512};
  if (id == "tiling-c")
    return {id, WindowSpec(IndicatorWindow{preset_domain("unit-square")}), Lattice::identity(2),
            Lattice::identity(2), point2(0.3, 0.4), 256};
  if (id == "parallelogram")
    return {id, WindowSpec(IndicatorWindow{preset_domain("parallelogram")}), Lattice::identity(2),
            Lattice::identity(2), point2(0.75, 0.25), 256};
  if (id == "lshape")
    return {id, WindowSpec(IndicatorWindow{preset_domain("lshape")}), Lattice::identity(2),
            Lattice::identity(2), point2(0.25, 0.5), 256};
  if (id == "octagon")
    return {id, WindowSpec(IndicatorWindow{preset_domain("octagon")}), Lattice::identity(2),
            Lattice::identity(2), point2(0.25, 1.875), 256};
  if (id == "irrational-gap")
    return {id, WindowSpec(IndicatorWindow{preset_domain("irrational-gap")}), Lattice::scalar(1.0),
            Lattice::scalar(1.0), std::nullopt, 512};
  if (id == "gaussian")
    return {id, WindowSpec(GaussianWindow{1}), Lattice::scalar(1.0), Lattice::scalar(1.0),
            std::nullopt, 512};
  fail(errc::invalid_argument, "unknown repro preset '" + id + "'");
}

std::vector<std::string> repro_preset_ids() {
  return {"tiling-a", "tiling-b", "tiling-c",       "parallelogram",
          "lshape",   "octagon",  "irrational-gap", "gaussian"};
}

}  // namespace zaklab
