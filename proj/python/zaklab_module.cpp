#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zaklab/classify.hpp"
#include "zaklab/gabor.hpp"
#include "zaklab/io.hpp"
#include "zaklab/presets.hpp"
#include "zaklab/spectral.hpp"
#include "zaklab/tiling.hpp"
#include "zaklab/zak.hpp"

namespace py = pybind11;
namespace zl = zaklab;

namespace {

zl::DomainSpec domain_from_obj(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return zl::preset_domain(obj.cast<std::string>());
  if (py::isinstance<zl::DomainSpec>(obj)) return obj.cast<zl::DomainSpec>();
  return zl::domain_from_json(zl::json::parse(py::module_::import("json")
                                                  .attr("dumps")(obj)
                                                  .cast<std::string>()));
}

zl::WindowSpec window_from_obj(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    auto w = zl::preset_window(obj.cast<std::string>());
    if (!w) zl::fail(zl::errc::invalid_argument, "unknown window preset");
    return *w;
  }
  if (py::isinstance<zl::WindowSpec>(obj)) return obj.cast<zl::WindowSpec>();
  return zl::window_from_json(zl::json::parse(py::module_::import("json")
                                                  .attr("dumps")(obj)
                                                  .cast<std::string>()));
}

py::object json_to_py(const zl::json& j) {
  return py::module_::import("json").attr("loads")(zl::dump_json(j, 0));
}

zl::SpectrumSpec cosets_spectrum(const zl::Lattice& lat,
                                 const std::vector<Eigen::VectorXd>& cosets, int radius) {
  if (cosets.empty()) {
    return zl::SpectrumSpec(
        zl::LatticeCosets{lat, {Eigen::VectorXd::Zero(lat.dim())}, radius});
  }
  return zl::SpectrumSpec(zl::LatticeCosets{lat, cosets, radius});
}

}  // namespace

PYBIND11_MODULE(_zaklab, m) {
  m.doc() = "lattice Zak transforms, multi-tilings, and exponential frame diagnostics";

  py::register_exception<zl::Error>(m, "ZaklabError");

  py::class_<zl::Lattice>(m, "Lattice")
      .def_static("from_generator", &zl::Lattice::from_generator)
      .def_static("scalar", &zl::Lattice::scalar)
      .def_static("identity", &zl::Lattice::identity)
      .def_property_readonly("dim", &zl::Lattice::dim)
      .def_property_readonly("gen", [](const zl::Lattice& l) { return l.gen(); })
      .def_property_readonly("det", &zl::Lattice::det)
      .def("volume", &zl::Lattice::volume)
      .def("density", &zl::Lattice::density)
      .def("dual", &zl::Lattice::dual)
      .def("__repr__", [](const zl::Lattice& l) {
        return "Lattice(dim=" + std::to_string(l.dim()) + ")";
      });

  py::class_<zl::DomainSpec>(m, "Domain")
      .def_static("intervals",
                  [](const std::vector<std::pair<double, double>>& iv) {
                    return zl::make_interval_union(iv);
                  })
      .def_static("polygon",
                  [](const std::vector<std::pair<double, double>>& verts) {
                    return zl::make_polygon(verts);
                  })
      .def_static("polygon_union",
                  [](const std::vector<std::vector<std::pair<double, double>>>& parts) {
                    return zl::make_polygon_union(parts);
                  })
      .def_static("preset", [](const std::string& name) { return zl::preset_domain(name); })
      .def_property_readonly("dim", &zl::DomainSpec::dim)
      .def("measure", [](const zl::DomainSpec& d) { return zl::measure(d); })
      .def("contains",
           [](const zl::DomainSpec& d, const Eigen::VectorXd& p) { return zl::contains(d, p); })
      .def("indicator_ft", [](const zl::DomainSpec& d, const Eigen::VectorXd& w) {
        return zl::indicator_ft(d, w);
      });

  py::class_<zl::WindowSpec>(m, "Window")
      .def_static("indicator",
                  [](const py::object& dom) {
                    return zl::WindowSpec(zl::IndicatorWindow{domain_from_obj(dom)});
                  })
      .def_static("gaussian", [](int dim) { return zl::WindowSpec(zl::GaussianWindow{dim}); },
                  py::arg("dim") = 1)
      .def_static("preset",
                  [](const std::string& name) {
                    auto w = zl::preset_window(name);
                    if (!w) zl::fail(zl::errc::invalid_argument, "unknown window preset");
                    return *w;
                  })
      .def_property_readonly("dim", &zl::WindowSpec::dim)
      .def("l2_norm_sq", &zl::WindowSpec::l2_norm_sq);

  m.def("make_lattice", [](const Eigen::MatrixXd& gen) { return zl::Lattice::from_generator(gen); });
  m.def("check_pair",
        [](const zl::Lattice& a, const zl::Lattice& b, double tol) {
          return json_to_py(zl::to_json(zl::check_pair(a, b, tol)));
        },
        py::arg("m"), py::arg("n"), py::arg("tol") = 1e-9);
  m.def("fundamental_domain", &zl::fundamental_domain);
  m.def("density_product",
        [](const zl::Lattice& a, const zl::Lattice& b, int c1, int c2) {
          return zl::density_product(a, b, {c1, c2});
        },
        py::arg("m"), py::arg("n"), py::arg("c1") = 1, py::arg("c2") = 1);

  m.def("cover_set",
        [](const py::object& dom, const zl::Lattice& lat, const Eigen::VectorXd& p) {
          return zl::cover_set(domain_from_obj(dom), lat, p);
        });
  m.def("multitiling_level",
        [](const py::object& dom, const zl::Lattice& lat, int samples, std::uint64_t seed) {
          return json_to_py(
              zl::to_json(zl::multitiling_level(domain_from_obj(dom), lat, samples, seed)));
        },
        py::arg("domain"), py::arg("lattice"), py::arg("samples") = 10000, py::arg("seed") = 7);

  m.def("zak_eval",
        [](const py::object& w, const zl::Lattice& lat, const Eigen::VectorXd& x,
           const Eigen::VectorXd& xi, int truncation) {
          const zl::WindowSpec ws = window_from_obj(w);
          if (truncation <= 0) truncation = zl::default_truncation(ws, lat);
          return zl::zak_eval(ws, lat, x, xi, truncation);
        },
        py::arg("window"), py::arg("m"), py::arg("x"), py::arg("xi"), py::arg("truncation") = 0);
  m.def("zak_grid",
        [](const py::object& w, const zl::Lattice& mm, const zl::Lattice& nn, int res_x,
           int res_xi, int truncation) {
          const zl::ZakGrid grid = zl::zak_grid(window_from_obj(w), mm, nn, res_x, res_xi,
                                                truncation);
          py::array_t<std::complex<double>> values(
              {static_cast<py::ssize_t>(grid.x_count()), static_cast<py::ssize_t>(grid.xi_count())});
          auto buf = values.mutable_unchecked<2>();
          for (py::ssize_t i = 0; i < buf.shape(0); ++i)
            for (py::ssize_t j = 0; j < buf.shape(1); ++j)
              buf(i, j) = grid.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          return values;
        },
        py::arg("window"), py::arg("m"), py::arg("n"), py::arg("res_x") = 64,
        py::arg("res_xi") = 64, py::arg("truncation") = 0);
  m.def("check_isometry",
        [](const py::object& w, const zl::Lattice& mm, const zl::Lattice& nn, int quad_res,
           int truncation) {
          return zl::check_isometry(window_from_obj(w), mm, nn, quad_res, truncation);
        },
        py::arg("window"), py::arg("m"), py::arg("n"), py::arg("quad_res") = 256,
        py::arg("truncation") = 0);
  m.def("check_quasiperiodicity",
        [](const py::object& w, const zl::Lattice& mm, const zl::Lattice& nn,
           const std::vector<Eigen::VectorXi>& shifts, int probes, std::uint64_t seed) {
          return zl::check_quasiperiodicity(window_from_obj(w), mm, nn, shifts, probes, seed);
        },
        py::arg("window"), py::arg("m"), py::arg("n"), py::arg("shifts"), py::arg("probes") = 25,
        py::arg("seed") = 7);

  m.def("classify",
        [](const py::object& w, const zl::Lattice& mm, const zl::Lattice& nn, int res,
           double tol_zero, double tol_flat) {
          const zl::ZakGrid grid = zl::zak_grid(window_from_obj(w), mm, nn, res, res, 0);
          return json_to_py(zl::to_json(zl::classify_gabor(grid, tol_zero, tol_flat)));
        },
        py::arg("window"), py::arg("m"), py::arg("n"), py::arg("res") = 256,
        py::arg("tol_zero") = 1e-8, py::arg("tol_flat") = 1e-6);
  m.def("find_zero",
        [](const py::object& w, const zl::Lattice& mm, const zl::Lattice& nn, int coarse_res,
           int levels, double tol_zero) {
          return json_to_py(zl::to_json(
              zl::find_zero(window_from_obj(w), mm, nn, coarse_res, levels, tol_zero)));
        },
        py::arg("window"), py::arg("m"), py::arg("n"), py::arg("coarse_res") = 64,
        py::arg("levels") = 10, py::arg("tol_zero") = 1e-8);
  m.def("theorem_harness",
        [](const py::object& dom, const zl::Lattice& mm, const zl::Lattice& nn) {
          return json_to_py(zl::to_json(zl::theorem_harness(domain_from_obj(dom), mm, nn)));
        });

  m.def("gram_section",
        [](const py::object& dom, const zl::Lattice& lat,
           const std::vector<Eigen::VectorXd>& cosets, int radius) {
          const zl::GramSection g =
              zl::gram_section(domain_from_obj(dom), cosets_spectrum(lat, cosets, radius));
          return py::make_tuple(g.freqs, g.entries);
        },
        py::arg("domain"), py::arg("lattice"), py::arg("cosets") = std::vector<Eigen::VectorXd>{},
        py::arg("radius") = 10);
  m.def("gram_section_list",
        [](const py::object& dom, const std::vector<Eigen::VectorXd>& freqs) {
          const zl::GramSection g =
              zl::gram_section(domain_from_obj(dom), zl::SpectrumSpec(zl::FiniteList{freqs}));
          return py::make_tuple(g.freqs, g.entries);
        });
  m.def("orthogonality_check",
        [](const py::object& dom, const zl::Lattice& lat,
           const std::vector<Eigen::VectorXd>& cosets, int radius) {
          return zl::orthogonality_check(domain_from_obj(dom), cosets_spectrum(lat, cosets, radius));
        },
        py::arg("domain"), py::arg("lattice"), py::arg("cosets") = std::vector<Eigen::VectorXd>{},
        py::arg("radius") = 10);
  m.def("riesz_bounds_estimate",
        [](const py::object& dom, const zl::Lattice& lat,
           const std::vector<Eigen::VectorXd>& cosets, const std::vector<int>& radii) {
          const int max_radius = radii.empty() ? 10 : radii.back();
          return json_to_py(zl::to_json(zl::riesz_bounds_estimate(
              domain_from_obj(dom), cosets_spectrum(lat, cosets, max_radius), radii)));
        },
        py::arg("domain"), py::arg("lattice"), py::arg("cosets") = std::vector<Eigen::VectorXd>{},
        py::arg("radii") = std::vector<int>{5, 10, 20});
  m.def("dual_coefficients", [](const py::object& dom, const std::vector<Eigen::VectorXd>& freqs) {
    return zl::dual_coefficients(
        zl::gram_section(domain_from_obj(dom), zl::SpectrumSpec(zl::FiniteList{freqs})));
  });

  m.def("frame_sum_check",
        [](const py::object& w, const std::vector<Eigen::VectorXd>& shifts,
           const zl::Lattice& modulation_lattice, int modulation_radius, double f_halfwidth,
           int quad_res) {
          zl::GaborSystemSpec sys{
              window_from_obj(w), shifts,
              zl::SpectrumSpec(zl::LatticeCosets{modulation_lattice,
                                                 {Eigen::VectorXd::Zero(modulation_lattice.dim())},
                                                 modulation_radius})};
          const zl::SampledFunction f = zl::gaussian_function(modulation_lattice.dim(), f_halfwidth);
          return json_to_py(zl::to_json(zl::frame_sum_check(f, sys, quad_res)));
        },
        py::arg("window"), py::arg("shifts"), py::arg("modulation_lattice"),
        py::arg("modulation_radius") = 30, py::arg("f_halfwidth") = 3.0, py::arg("quad_res") = 512);
  m.def("biorthogonality_check",
        [](const py::object& dom, const std::vector<Eigen::VectorXd>& lam_list,
           const zl::Lattice& lat, const std::vector<Eigen::VectorXd>& cosets, int radius,
           int quad_res) {
          return zl::biorthogonality_check(domain_from_obj(dom), lam_list,
                                           cosets_spectrum(lat, cosets, radius), quad_res);
        },
        py::arg("domain"), py::arg("lam_list"), py::arg("lattice"), py::arg("cosets"),
        py::arg("radius") = 10, py::arg("quad_res") = 8192);
}
