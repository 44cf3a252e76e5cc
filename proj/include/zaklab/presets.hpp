#ifndef ZAKLAB_PRESETS_HPP
#define ZAKLAB_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "zaklab/geometry.hpp"
#include "zaklab/lattice.hpp"
#include "zaklab/zak.hpp"

namespace zaklab {

// Named domains used by the reproduction presets. Vertex data also ships as
// JSON under data/.
DomainSpec preset_domain(const std::string& name);
std::vector<std::string> preset_domain_names();

std::optional<WindowSpec> preset_window(const std::string& name);

// One reproduction scenario: window, lattice pair, and the section point for
// 2-d magnitude plots.
struct ReproPreset {
  std::string id;
  WindowSpec window;
  Lattice m;
  Lattice n;
  std::optional<Point> section_x;  // fixed x for xi-section plots (d = 2)
  int res = 0;
};

ReproPreset repro_preset(const std::string& id);
std::vector<std::string> repro_preset_ids();

}  // namespace zaklab

#endif
