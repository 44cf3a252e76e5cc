#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zaklab/classify.hpp"
#include "zaklab/gabor.hpp"
#include "zaklab/io.hpp"
#include "zaklab/presets.hpp"
#include "zaklab/spectral.hpp"
#include "zaklab/tiling.hpp"
#include "zaklab/zak.hpp"

namespace zl = zaklab;
using zl::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) zl::fail(zl::errc::invalid_argument, "cannot read '" + path + "'");
  json j;
  in >> j;
  return j;
}

// Accepts a scalar ("1", "0.5"), a named preset, inline JSON, or a file path.
zl::Lattice parse_lattice(const std::string& arg) {
  char* end = nullptr;
  const double v = std::strtod(arg.c_str(), &end);
  if (end && *end == '\0' && end != arg.c_str()) return zl::Lattice::scalar(v);
  if (arg == "I2" || arg == "identity2") return zl::Lattice::identity(2);
  if (arg == "example-M") {
    Eigen::MatrixXd m(2, 2);
    m << std::sqrt(2.0), 0.0, 1.0, 1.0;
    return zl::Lattice::from_generator(m);
  }
  if (arg == "example-N") {
    Eigen::MatrixXd n(2, 2);
    n << 1.0 / std::sqrt(2.0), -std::sqrt(2.0), 0.0, 1.0;
    return zl::Lattice::from_generator(n);
  }
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    const json j = json::parse(arg);
    return j.is_array() ? zl::lattice_from_json(json{{"gen", j}}) : zl::lattice_from_json(j);
  }
  return zl::lattice_from_json(read_json_file(arg));
}

zl::DomainSpec parse_domain(const std::string& arg) {
  for (const auto& name : zl::preset_domain_names())
    if (arg == name) return zl::preset_domain(name);
  if (!arg.empty() && arg[0] == '{') return zl::domain_from_json(json::parse(arg));
  return zl::domain_from_json(read_json_file(arg));
}

zl::WindowSpec parse_window(const std::string& arg) {
  if (auto w = zl::preset_window(arg)) return *w;
  if (!arg.empty() && arg[0] == '{') return zl::window_from_json(json::parse(arg));
  return zl::window_from_json(read_json_file(arg));
}

zl::SpectrumSpec parse_spectrum(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return zl::spectrum_from_json(json::parse(arg));
  return zl::spectrum_from_json(read_json_file(arg));
}

zl::Point parse_point(const std::string& arg) {
  std::vector<double> coords;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(std::stod(tok));
  zl::Point p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<Eigen::Index>(i)] = coords[i];
  return p;
}

std::vector<int> parse_int_list(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = zl::dump_json(j);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) zl::fail(zl::errc::invalid_argument, "cannot open '" + out_path + "'");
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json run_repro(const std::string& id, const std::string& outdir) {
  namespace fs = std::filesystem;
  const zl::ReproPreset preset = zl::repro_preset(id);
  fs::create_directories(outdir);
  const std::string base = (fs::path(outdir) / id).string();

  json report{{"preset", id},
              {"window", zl::to_json(preset.window)},
              {"M", zl::to_json(preset.m)},
              {"N", zl::to_json(preset.n)}};

  const int d = preset.m.dim();
  auto point1 = [](double v) {
    zl::Point p(1);
    p << v;
    return p;
  };

  if (d == 1) {
    const zl::ZakGrid grid = zl::zak_grid(preset.window, preset.m, preset.n, preset.res,
                                          preset.res, 0);
    zl::write_grid_pgm(grid, base + ".pgm");
    zl::write_grid_csv(grid, base + ".csv");
    report["classification"] = zl::to_json(zl::classify_gabor(grid));
    if (id == "tiling-a") {
      double dev = 0.0;
      for (const auto& v : grid.values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
      report["max_abs_dev_from_one"] = dev;
    }
    if (id == "tiling-b") {
      // sqrt(2) Z(x, xi) = 1 + e^{i pi xi} on 0 < x < 1/2
      double dev = 0.0;
      const double s = std::sqrt(2.0);
      for (std::size_t ix = 0; ix < grid.x_count(); ++ix)
        for (std::size_t j = 0; j < grid.xi_count(); ++j) {
          const double xi = grid.xi_node(j)[0];
          dev = std::max(dev, std::abs(s * grid.at(ix, j) -
                                       (1.0 + std::polar(1.0, zl::kPi * xi))));
        }
      report["max_formula_residual"] = dev;
      report["zero"] = zl::to_json(zl::find_zero(preset.window, preset.m, preset.n, 64, 10));
    }
    if (id == "gaussian") {
      const zl::ZeroSearchResult zero = zl::find_zero(preset.window, preset.m, preset.n, 64, 10);
      report["zero"] = zl::to_json(zero);
      report["magnitude_at_half_half"] =
          std::abs(zl::zak_eval(preset.window, preset.m, point1(0.5), point1(0.5),
                                zl::kGaussianTruncation));
      // grid argmin node
      double best = 1e300;
      std::size_t arg = 0;
      for (std::size_t i = 0; i < grid.values.size(); ++i)
        if (std::abs(grid.values[i]) < best) {
          best = std::abs(grid.values[i]);
          arg = i;
        }
      report["grid_min_x"] = grid.x_node(arg / grid.xi_count())[0];
      report["grid_min_xi"] = grid.xi_node(arg % grid.xi_count())[0];
    }
    return report;
  }

  // d = 2: xi-section heatmap at the preset section point
  const zl::Point x0 = *preset.section_x;
  const zl::ZakSection sec =
      zl::zak_xi_section(preset.window, preset.m, preset.n, x0, preset.res, 0);
  zl::write_section_pgm(sec, base + ".pgm");
  zl::write_section_csv(sec, base + ".csv");
  report["section_x"] = json::array({x0[0], x0[1]});

  const int trunc = zl::exact_truncation(preset.window, preset.m, {x0, x0});
  auto eval2 = [&](double xi1, double xi2) {
    zl::Point xi(2);
    xi << xi1, xi2;
    return zl::zak_eval(preset.window, preset.m, x0, xi, trunc);
  };

  if (id == "tiling-c") {
    double dev = 0.0;
    for (const auto& v : sec.values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
    report["max_abs_dev_from_one"] = dev;
  }
  if (id == "parallelogram") {
    double dev = 0.0;
    for (std::size_t j = 0; j < sec.values.size(); ++j) {
      const double xi1 = (static_cast<double>(j % sec.res) + 0.5) / sec.res;
      dev = std::max(dev,
                     std::abs(sec.values[j] - (1.0 + std::polar(1.0, -zl::kTwoPi * xi1))));
    }
    report["max_formula_residual"] = dev;
    double zline = 0.0;
    for (int k = 0; k < 20; ++k) zline = std::max(zline, std::abs(eval2(0.5, (k + 0.5) / 20.0)));
    report["max_abs_on_half_line"] = zline;
  }
  if (id == "lshape") {
    double zline = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double t = (k + 0.5) / 50.0;
      zline = std::max(zline, std::abs(eval2(std::fmod(t + 1.0 / 3.0, 1.0), t)));
    }
    report["max_abs_on_third_lines"] = zline;
  }
  if (id == "octagon") {
    double zline = 0.0;
    for (int k = 0; k < 20; ++k) zline = std::max(zline, std::abs(eval2(0.5, (k + 0.5) / 20.0)));
    report["max_abs_on_half_line"] = zline;
    report["abs_at_1_6_1_2"] = std::abs(eval2(1.0 / 6.0, 0.5));
    report["abs_at_5_6_1_2"] = std::abs(eval2(5.0 / 6.0, 0.5));
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zaklab: lattice Zak transforms, multi-tilings, and exponential frame diagnostics"};
  app.require_subcommand(1);

  std::string m_arg, n_arg, window_arg, domain_arg, spectrum_arg, out_path, point_arg;
  std::string radii_arg = "5,10,20", counts_arg = "1,1", format_arg;
  int res = 0, res_xi = 0, truncation = 0, samples = 10000, coarse_res = 64, levels = 10;
  int quad_res = 256, probes = 25;
  double tol = 1e-9, tol_zero = 1e-8, tol_flat = 1e-6;
  std::uint64_t seed = 7;

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice constructions and pair checks");
  lattice_cmd->require_subcommand(1);
  auto* lat_info = lattice_cmd->add_subcommand("info", "volume, density, dual, fundamental domain");
  lat_info->add_option("--M", m_arg)->required();
  lat_info->add_option("--out", out_path);
  auto* lat_check = lattice_cmd->add_subcommand("check", "det(MN) = 1 and N^T M integrality");
  lat_check->add_option("--M", m_arg)->required();
  lat_check->add_option("--N", n_arg)->required();
  lat_check->add_option("--tol", tol);
  lat_check->add_option("--out", out_path);
  auto* lat_density = lattice_cmd->add_subcommand("density", "Beurling density of the product");
  lat_density->add_option("--M", m_arg)->required();
  lat_density->add_option("--N", n_arg)->required();
  lat_density->add_option("--counts", counts_arg);
  lat_density->add_option("--out", out_path);

  // tiling
  auto* tiling_cmd = app.add_subcommand("tiling", "multi-tiling detection");
  tiling_cmd->require_subcommand(1);
  auto* tiling_level = tiling_cmd->add_subcommand("level", "Monte-Carlo multi-tiling level");
  tiling_level->add_option("--domain", domain_arg)->required();
  tiling_level->add_option("--lattice", m_arg)->required();
  tiling_level->add_option("--samples", samples);
  tiling_level->add_option("--seed", seed);
  tiling_level->add_option("--out", out_path);
  auto* tiling_cover = tiling_cmd->add_subcommand("cover", "lattice translates covering a point");
  tiling_cover->add_option("--domain", domain_arg)->required();
  tiling_cover->add_option("--lattice", m_arg)->required();
  tiling_cover->add_option("--point", point_arg)->required();
  tiling_cover->add_option("--out", out_path);

  // zak
  auto* zak_cmd = app.add_subcommand("zak", "lattice Zak transform evaluation");
  zak_cmd->require_subcommand(1);
  auto* zak_grid_cmd = zak_cmd->add_subcommand("grid", "sample Z on Q_M x Q_N (csv/pgm)");
  zak_grid_cmd->add_option("--window", window_arg)->required();
  zak_grid_cmd->add_option("--M", m_arg)->required();
  zak_grid_cmd->add_option("--N", n_arg)->required();
  zak_grid_cmd->add_option("--res", res, "nodes per dimension (0 = auto)");
  zak_grid_cmd->add_option("--res-xi", res_xi);
  zak_grid_cmd->add_option("--truncation", truncation);
  zak_grid_cmd->add_option("--x", point_arg, "fixed x: emit a xi-section instead of the full grid");
  zak_grid_cmd->add_option("--out", out_path)->required();
  auto* zak_zero = zak_cmd->add_subcommand("zero", "grid-refined zero search");
  zak_zero->add_option("--window", window_arg)->required();
  zak_zero->add_option("--M", m_arg)->required();
  zak_zero->add_option("--N", n_arg)->required();
  zak_zero->add_option("--coarse-res", coarse_res);
  zak_zero->add_option("--levels", levels);
  zak_zero->add_option("--tol-zero", tol_zero);
  zak_zero->add_option("--out", out_path);
  auto* zak_iso = zak_cmd->add_subcommand("isometry", "norm preservation residual");
  zak_iso->add_option("--window", window_arg)->required();
  zak_iso->add_option("--M", m_arg)->required();
  zak_iso->add_option("--N", n_arg)->required();
  zak_iso->add_option("--res", quad_res);
  zak_iso->add_option("--truncation", truncation);
  zak_iso->add_option("--out", out_path);
  auto* zak_qp = zak_cmd->add_subcommand("qp", "quasi-periodicity residual");
  zak_qp->add_option("--window", window_arg)->required();
  zak_qp->add_option("--M", m_arg)->required();
  zak_qp->add_option("--N", n_arg)->required();
  zak_qp->add_option("--probes", probes);
  zak_qp->add_option("--seed", seed);
  zak_qp->add_option("--out", out_path);

  // classify
  int classify_res = 0;  // 0 = auto (256 in d = 1, 32 in d = 2)
  auto* classify_cmd = app.add_subcommand("classify", "Zak-magnitude classification");
  classify_cmd->add_option("--window", window_arg)->required();
  classify_cmd->add_option("--M", m_arg)->required();
  classify_cmd->add_option("--N", n_arg)->required();
  classify_cmd->add_option("--res", classify_res);
  classify_cmd->add_option("--tol-zero", tol_zero);
  classify_cmd->add_option("--tol-flat", tol_flat);
  classify_cmd->add_option("--out", out_path);

  // spectral
  auto* spectral_cmd = app.add_subcommand("spectral", "exponential systems on a domain");
  spectral_cmd->require_subcommand(1);
  auto* sp_gram = spectral_cmd->add_subcommand("gram", "Gram section entries");
  sp_gram->add_option("--domain", domain_arg)->required();
  sp_gram->add_option("--spectrum", spectrum_arg)->required();
  sp_gram->add_option("--out", out_path);
  auto* sp_ortho = spectral_cmd->add_subcommand("ortho", "max off-diagonal Gram magnitude");
  sp_ortho->add_option("--domain", domain_arg)->required();
  sp_ortho->add_option("--spectrum", spectrum_arg)->required();
  sp_ortho->add_option("--out", out_path);
  auto* sp_bounds = spectral_cmd->add_subcommand("bounds", "Riesz bound estimates over sections");
  sp_bounds->add_option("--domain", domain_arg)->required();
  sp_bounds->add_option("--spectrum", spectrum_arg)->required();
  sp_bounds->add_option("--radii", radii_arg);
  sp_bounds->add_option("--out", out_path);

  // gabor
  auto* gabor_cmd = app.add_subcommand("gabor", "Gabor system diagnostics");
  gabor_cmd->require_subcommand(1);
  auto* gabor_check = gabor_cmd->add_subcommand("check", "theorem harness + frame-sum battery");
  gabor_check->add_option("--domain", domain_arg)->required();
  gabor_check->add_option("--M", m_arg)->required();
  gabor_check->add_option("--N", n_arg)->required();
  gabor_check->add_option("--out", out_path);

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "reproduction presets");
  std::string repro_id;
  std::string repro_out = "repro-out";
  repro_cmd->add_option("id", repro_id, "preset id or 'all'")->required();
  repro_cmd->add_option("--out", repro_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (lat_info->parsed()) {
      const zl::Lattice lat = parse_lattice(m_arg);
      json j{{"lattice", zl::to_json(lat)},
             {"volume", lat.volume()},
             {"density", lat.density()},
             {"dual", zl::to_json(lat.dual())}};
      if (lat.dim() <= 2) j["fundamental_domain"] = zl::to_json(zl::fundamental_domain(lat));
      emit(j, out_path);
    } else if (lat_check->parsed()) {
      emit(zl::to_json(zl::check_pair(parse_lattice(m_arg), parse_lattice(n_arg), tol)), out_path);
    } else if (lat_density->parsed()) {
      const auto counts = parse_int_list(counts_arg);
      if (counts.size() != 2) zl::fail(zl::errc::invalid_argument, "--counts needs c1,c2");
      const double dens = zl::density_product(parse_lattice(m_arg), parse_lattice(n_arg),
                                              {counts[0], counts[1]});
      emit(json{{"density", dens}}, out_path);
    } else if (tiling_level->parsed()) {
      emit(zl::to_json(zl::multitiling_level(parse_domain(domain_arg), parse_lattice(m_arg),
                                             samples, seed)),
           out_path);
    } else if (tiling_cover->parsed()) {
      const auto cover =
          zl::cover_set(parse_domain(domain_arg), parse_lattice(m_arg), parse_point(point_arg));
      json pts = json::array();
      for (const auto& p : cover) {
        json coords = json::array();
        for (Eigen::Index k = 0; k < p.size(); ++k) coords.push_back(p[k]);
        pts.push_back(std::move(coords));
      }
      emit(json{{"count", cover.size()}, {"lattice_points", std::move(pts)}}, out_path);
    } else if (zak_grid_cmd->parsed()) {
      const zl::WindowSpec w = parse_window(window_arg);
      const zl::Lattice m = parse_lattice(m_arg);
      const zl::Lattice n = parse_lattice(n_arg);
      if (res <= 0) res = (point_arg.empty() && m.dim() == 2) ? 32 : 256;
      if (!point_arg.empty()) {
        const zl::ZakSection sec = zl::zak_xi_section(w, m, n, parse_point(point_arg), res,
                                                      truncation);
        if (ends_with(out_path, ".pgm"))
          zl::write_section_pgm(sec, out_path);
        else
          zl::write_section_csv(sec, out_path);
      } else {
        const zl::ZakGrid grid = zl::zak_grid(w, m, n, res, res_xi > 0 ? res_xi : res, truncation);
        if (ends_with(out_path, ".pgm"))
          zl::write_grid_pgm(grid, out_path);
        else
          zl::write_grid_csv(grid, out_path);
      }
    } else if (zak_zero->parsed()) {
      emit(zl::to_json(zl::find_zero(parse_window(window_arg), parse_lattice(m_arg),
                                     parse_lattice(n_arg), coarse_res, levels, tol_zero)),
           out_path);
    } else if (zak_iso->parsed()) {
      const double err = zl::check_isometry(parse_window(window_arg), parse_lattice(m_arg),
                                            parse_lattice(n_arg), quad_res, truncation);
      emit(json{{"relative_error", err}}, out_path);
    } else if (zak_qp->parsed()) {
      const zl::Lattice m = parse_lattice(m_arg);
      std::vector<Eigen::VectorXi> shifts;
      Eigen::VectorXi s1 = Eigen::VectorXi::Zero(m.dim());
      s1[0] = 1;
      shifts.push_back(s1);
      shifts.push_back(Eigen::VectorXi::Constant(m.dim(), 1));
      shifts.push_back(Eigen::VectorXi::Constant(m.dim(), -2));
      const double r = zl::check_quasiperiodicity(parse_window(window_arg), m,
                                                  parse_lattice(n_arg), shifts, probes, seed);
      emit(json{{"max_residual", r}}, out_path);
    } else if (classify_cmd->parsed()) {
      const zl::Lattice m = parse_lattice(m_arg);
      if (classify_res <= 0) classify_res = m.dim() == 1 ? 256 : 32;
      const zl::ZakGrid grid = zl::zak_grid(parse_window(window_arg), m, parse_lattice(n_arg),
                                            classify_res, classify_res, 0);
      emit(zl::to_json(zl::classify_gabor(grid, tol_zero, tol_flat)), out_path);
    } else if (sp_gram->parsed()) {
      const zl::GramSection g = zl::gram_section(parse_domain(domain_arg),
                                                 parse_spectrum(spectrum_arg));
      json freqs = json::array(), entries = json::array();
      for (const auto& f : g.freqs) {
        json coords = json::array();
        for (Eigen::Index k = 0; k < f.size(); ++k) coords.push_back(f[k]);
        freqs.push_back(std::move(coords));
      }
      for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j2 = 0; j2 < g.entries.cols(); ++j2)
          row.push_back(json::array({g.entries(i, j2).real(), g.entries(i, j2).imag()}));
        entries.push_back(std::move(row));
      }
      emit(json{{"freqs", std::move(freqs)},
                {"domain_measure", g.domain_measure},
                {"entries", std::move(entries)}},
           out_path);
    } else if (sp_ortho->parsed()) {
      emit(json{{"max_offdiagonal_ratio",
                 zl::orthogonality_check(parse_domain(domain_arg), parse_spectrum(spectrum_arg))}},
           out_path);
    } else if (sp_bounds->parsed()) {
      emit(zl::to_json(zl::riesz_bounds_estimate(parse_domain(domain_arg),
                                                 parse_spectrum(spectrum_arg),
                                                 parse_int_list(radii_arg))),
           out_path);
    } else if (gabor_check->parsed()) {
      const zl::DomainSpec dom = parse_domain(domain_arg);
      const zl::Lattice m = parse_lattice(m_arg);
      const zl::Lattice n = parse_lattice(n_arg);
      json j{{"harness", zl::to_json(zl::theorem_harness(dom, m, n))}};
      if (dom.dim() == 1) {
        const int radius = static_cast<int>(std::ceil(4.0 / m.shortest_generator())) + 1;
        zl::GaborSystemSpec sys{zl::WindowSpec(zl::IndicatorWindow{dom}),
                                zl::lattice_shifts(m, radius),
                                zl::SpectrumSpec(zl::LatticeCosets{
                                    n, {Eigen::VectorXd::Zero(1)}, 40})};
        j["frame_sum"] = zl::to_json(zl::frame_sum_check(zl::gaussian_function(1, 3.0), sys, 512));
      }
      emit(j, out_path);
    } else if (repro_cmd->parsed()) {
      json all = json::array();
      if (repro_id == "all") {
        for (const auto& id : zl::repro_preset_ids()) all.push_back(run_repro(id, repro_out));
        emit(all, out_path);
      } else {
        emit(run_repro(repro_id, repro_out), out_path);
      }
    }
  } catch (const zl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.numerical() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
