#include "zaklab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace zaklab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad1 + json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad1;
        dump_rec(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += fmt17(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) fail(errc::invalid_argument, "empty matrix in JSON");
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      fail(errc::invalid_argument, "ragged matrix in JSON");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<double>();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j.at(i).get<double>();
  return v;
}

void write_pgm(const std::vector<double>& mags, int width, int height, const std::string& path) {
  double max_mag = 0.0;
  for (double m : mags) max_mag = std::max(max_mag, m);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << "P5\n# max-magnitude: " << fmt17(max_mag) << "\n" << width << " " << height << "\n65535\n";
  const double scale = max_mag > 0 ? 65535.0 / max_mag : 0.0;
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col) {
      const double m = mags[static_cast<std::size_t>(row) * width + col];
      const auto v = static_cast<unsigned>(std::lround(std::min(65535.0, m * scale)));
      out.put(static_cast<char>((v >> 8) & 0xff));
      out.put(static_cast<char>(v & 0xff));
    }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

json to_json(const Lattice& lat) {
  return json{{"dim", lat.dim()}, {"gen", matrix_to_json(lat.gen())}};
}

Lattice lattice_from_json(const json& j) {
  const Eigen::MatrixXd gen = matrix_from_json(j.at("gen"));
  if (j.contains("dim") && j.at("dim").get<int>() != gen.rows())
    fail(errc::invalid_argument, "lattice dim field disagrees with generator shape");
  return Lattice::from_generator(gen);
}

json to_json(const DomainSpec& dom) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          json items = json::array();
          for (const auto& iv : d.parts()) items.push_back(json::array({iv.lo, iv.hi}));
          return json{{"type", "intervals"}, {"items", std::move(items)}};
        } else if constexpr (std::is_same_v<T, Polygon>) {
          json verts = json::array();
          for (const auto& v : d.vertices()) verts.push_back(json::array({v.x(), v.y()}));
          return json{{"type", "polygon"}, {"vertices", std::move(verts)}};
        } else {
          json parts = json::array();
          for (const auto& poly : d.parts()) {
            json verts = json::array();
            for (const auto& v : poly.vertices()) verts.push_back(json::array({v.x(), v.y()}));
            parts.push_back(std::move(verts));
          }
          return json{{"type", "polygon_union"}, {"parts", std::move(parts)}};
        }
      },
      dom.variant());
}

DomainSpec domain_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "intervals") {
    std::vector<std::pair<double, double>> items;
    for (const auto& it : j.at("items"))
      items.emplace_back(it.at(0).get<double>(), it.at(1).get<double>());
    return make_interval_union(items);
  }
  if (type == "polygon") {
    std::vector<std::pair<double, double>> verts;
    for (const auto& v : j.at("vertices"))
      verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return make_polygon(verts);
  }
  if (type == "polygon_union") {
    std::vector<std::vector<std::pair<double, double>>> parts;
    for (const auto& p : j.at("parts")) {
      std::vector<std::pair<double, double>> verts;
      for (const auto& v : p) verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
      parts.push_back(std::move(verts));
    }
    return make_polygon_union(parts);
  }
  fail(errc::invalid_argument, "unknown domain type '" + type + "'");
}

json to_json(const WindowSpec& w) {
  if (const DomainSpec* dom = w.indicator_domain())
    return json{{"type", "indicator"}, {"domain", to_json(*dom)}};
  return json{{"type", "gaussian"}, {"dim", w.dim()}};
}

WindowSpec window_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "indicator") return WindowSpec(IndicatorWindow{domain_from_json(j.at("domain"))});
  if (type == "gaussian") return WindowSpec(GaussianWindow{j.value("dim", 1)});
  fail(errc::invalid_argument, "unknown window type '" + type + "'");
}

json to_json(const SpectrumSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteList>) {
          json freqs = json::array();
          for (const auto& f : s.freqs) freqs.push_back(vector_to_json(f));
          return json{{"type", "list"}, {"freqs", std::move(freqs)}};
        } else {
          json cosets = json::array();
          for (const auto& a : s.cosets) cosets.push_back(vector_to_json(a));
          return json{{"type", "lattice_cosets"},
                      {"lattice", to_json(s.lattice)},
                      {"cosets", std::move(cosets)},
                      {"radius", s.index_radius}};
        }
      },
      spec.variant());
}

SpectrumSpec spectrum_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "list") {
    FiniteList list;
    for (const auto& f : j.at("freqs")) list.freqs.push_back(vector_from_json(f));
    return SpectrumSpec(list);
  }
  if (type == "lattice_cosets") {
    LatticeCosets lc{lattice_from_json(j.at("lattice")), {}, j.at("radius").get<int>()};
    for (const auto& a : j.at("cosets")) lc.cosets.push_back(vector_from_json(a));
    return SpectrumSpec(lc);
  }
  fail(errc::invalid_argument, "unknown spectrum type '" + type + "'");
}

json to_json(const LatticePairReport& r) {
  return json{{"det_product", r.det_product},
              {"product_is_unimodular", r.product_is_unimodular},
              {"ntm", matrix_to_json(r.ntm)},
              {"ntm_is_integer", r.ntm_is_integer}};
}

json to_json(const TilingReport& r) {
  json hist = json::object();
  for (const auto& [k, frac] : r.cover_histogram) hist[std::to_string(k)] = frac;
  return json{{"level", r.level ? json(*r.level) : json("NotMultiTiling")},
              {"samples_tested", r.samples_tested},
              {"cover_histogram", std::move(hist)},
              {"translation_radius", r.translation_radius}};
}

json to_json(const ClassificationReport& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"ess_inf_estimate", r.ess_inf_estimate},
              {"ess_sup_estimate", r.ess_sup_estimate},
              {"zero_fraction", r.zero_fraction},
              {"flatness", r.flatness},
              {"refined_min", r.refined_min},
              {"tol_zero", r.tol_zero}};
}

json to_json(const ZeroSearchResult& r) {
  return json{{"found", r.found},
              {"x", vector_to_json(r.x)},
              {"xi", vector_to_json(r.xi)},
              {"magnitude", r.magnitude},
              {"refinement_levels", r.refinement_levels}};
}

json to_json(const TheoremHarnessReport& r) {
  return json{{"tiling", to_json(r.tiling)},
              {"classification", to_json(r.classification)},
              {"orthogonality_residual", r.orthogonality_residual},
              {"orthogonality_radius", r.orthogonality_radius},
              {"zero", to_json(r.zero)},
              {"riesz_implies_tiling_ok", r.riesz_implies_tiling_ok},
              {"multitiling_implies_zero_ok", r.multitiling_implies_zero_ok},
              {"pass", r.pass}};
}

json to_json(const BoundsEstimate& r) {
  return json{{"section_sizes", r.section_sizes},
              {"lower_estimates", r.lower_estimates},
              {"upper_estimates", r.upper_estimates},
              {"stabilized", r.stabilized}};
}

json to_json(const FrameSumReport& r) {
  return json{{"sum_sq_coeffs", r.sum_sq_coeffs},
              {"norm_sq", r.norm_sq},
              {"ratio", r.ratio},
              {"truncation_note", r.truncation_note}};
}

void write_grid_csv(const ZakGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_argument, "cannot open '" + path + "' for writing");
  const int d = grid.dim();
  for (int k = 0; k < d; ++k) out << "x" << k + 1 << ",";
  for (int k = 0; k < d; ++k) out << "xi" << k + 1 << ",";
  out << "re,im\n";
  for (std::size_t ix = 0; ix < grid.x_count(); ++ix) {
    const Point x = grid.x_node(ix);
    for (std::size_t j = 0; j < grid.xi_count(); ++j) {
      const Point xi = grid.xi_node(j);
      const complexd v = grid.at(ix, j);
      for (int k = 0; k < d; ++k) out << fmt17(x[k]) << ",";
      for (int k = 0; k < d; ++k) out << fmt17(xi[k]) << ",";
      out << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
    }
  }
}

void write_section_csv(const ZakSection& sec, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_argument, "cannot open '" + path + "' for writing");
  const int d = sec.n_lattice.dim();
  for (int k = 0; k < d; ++k) out << "x" << k + 1 << ",";
  for (int k = 0; k < d; ++k) out << "xi" << k + 1 << ",";
  out << "re,im\n";
  for (std::size_t j = 0; j < sec.values.size(); ++j) {
    std::size_t r = j;
    Eigen::VectorXd u(d);
    for (int k = 0; k < d; ++k) {
      u[k] = (static_cast<double>(r % sec.res) + 0.5) / sec.res;
      r /= sec.res;
    }
    const Point xi = sec.n_lattice.gen() * u;
    for (int k = 0; k < d; ++k) out << fmt17(sec.x[k]) << ",";
    for (int k = 0; k < d; ++k) out << fmt17(xi[k]) << ",";
    out << fmt17(sec.values[j].real()) << "," << fmt17(sec.values[j].imag()) << "\n";
  }
}

void write_grid_pgm(const ZakGrid& grid, const std::string& path) {
  // d = 1: rows = xi, cols = x; higher d falls back to the flat layout
  const auto w = static_cast<int>(grid.x_count());
  const auto h = static_cast<int>(grid.xi_count());
  std::vector<double> mags(static_cast<std::size_t>(w) * h);
  for (int ix = 0; ix < w; ++ix)
    for (int j = 0; j < h; ++j)
      mags[static_cast<std::size_t>(j) * w + ix] = std::abs(grid.at(ix, j));
  write_pgm(mags, w, h, path);
}

void write_section_pgm(const ZakSection& sec, const std::string& path) {
  const int d = sec.n_lattice.dim();
  int w = sec.res, h = sec.res;
  if (d == 1) {
    w = sec.res;
    h = 1;
  }
  std::vector<double> mags(sec.values.size());
  for (std::size_t j = 0; j < sec.values.size(); ++j) mags[j] = std::abs(sec.values[j]);
  write_pgm(mags, w, h, path);
}

}  // namespace zaklab
