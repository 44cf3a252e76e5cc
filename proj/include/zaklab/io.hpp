#ifndef ZAKLAB_IO_HPP
#define ZAKLAB_IO_HPP

#include <json.hpp>
#include <string>

#include "zaklab/classify.hpp"
#include "zaklab/gabor.hpp"
#include "zaklab/lattice.hpp"
#include "zaklab/spectral.hpp"
#include "zaklab/tiling.hpp"
#include "zaklab/zak.hpp"

namespace zaklab {

using json = nlohmann::ordered_json;

// Serialization. Key order is fixed and floats print with 17 significant
// digits via dump_json, so identical inputs produce byte-identical reports.
json to_json(const Lattice& lat);
json to_json(const DomainSpec& dom);
json to_json(const WindowSpec& w);
json to_json(const SpectrumSpec& spec);
json to_json(const LatticePairReport& r);
json to_json(const TilingReport& r);
json to_json(const ClassificationReport& r);
json to_json(const ZeroSearchResult& r);
json to_json(const TheoremHarnessReport& r);
json to_json(const BoundsEstimate& r);
json to_json(const FrameSumReport& r);

Lattice lattice_from_json(const json& j);
DomainSpec domain_from_json(const json& j);
WindowSpec window_from_json(const json& j);
SpectrumSpec spectrum_from_json(const json& j);

// Deterministic dump: objects keep insertion order, numbers print as %.17g.
std::string dump_json(const json& j, int indent = 2);

// CSV rows "x...,xi...,re,im" with %.17g fields.
void write_grid_csv(const ZakGrid& grid, const std::string& path);
void write_section_csv(const ZakSection& sec, const std::string& path);

// 16-bit PGM magnitude heatmap, max-normalized; the normalization constant is
// recorded in a header comment so the image is a bit-exact regression target.
void write_grid_pgm(const ZakGrid& grid, const std::string& path);
void write_section_pgm(const ZakSection& sec, const std::string& path);

}  // namespace zaklab

#endif
