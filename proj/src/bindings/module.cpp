#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "spinclab/berger.hpp"
#include "spinclab/clifford.hpp"
#include "spinclab/geometry.hpp"
#include "spinclab/homogeneous.hpp"
#include "spinclab/spinc.hpp"

namespace py = pybind11;
using namespace spinclab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "spinor calculus on homogeneous 3-manifold fibrations";

  m.def(
      "gamma_matrices",
      [](int n) { return clifford::build_rep(n).gamma; },
      py::arg("n"), "irreducible Clifford generators, skew-adjoint convention");
  m.def(
      "complex_volume_element",
      [](int n) {
        auto rep = clifford::build_rep(n);
        return clifford::complex_volume_element(rep);
      },
      py::arg("n"));

  py::class_<homogeneous::ModelParams>(m, "ModelParams")
      .def(py::init<double, double>(), py::arg("kappa"), py::arg("tau"))
      .def_readwrite("kappa", &homogeneous::ModelParams::kappa)
      .def_readwrite("tau", &homogeneous::ModelParams::tau)
      .def("__repr__", [](const homogeneous::ModelParams& p) {
        return "ModelParams(kappa=" + std::to_string(p.kappa) +
               ", tau=" + std::to_string(p.tau) + ")";
      });

  py::class_<homogeneous::FrameModel>(m, "FrameModel")
      .def_readonly("params", &homogeneous::FrameModel::params)
      .def_readonly("ricci", &homogeneous::FrameModel::ricci)
      .def_readonly("scalar", &homogeneous::FrameModel::scalar);

  m.def("build_frame_model", &homogeneous::build_frame_model, py::arg("params"));
  m.def("killing_field_residual", &homogeneous::killing_field_residual);
  m.def("sasaki_residual", &homogeneous::sasaki_residual);
  m.def("vertical_derivative", &homogeneous::vertical_derivative);

  py::class_<spinc::Connection>(m, "Connection")
      .def_readonly("model", &spinc::Connection::model)
      .def_readonly("aux", &spinc::Connection::aux)
      .def_readonly("omega", &spinc::Connection::omega)
      .def_property_readonly("M", [](const spinc::Connection& c) {
        return std::vector<Eigen::Matrix2cd>(c.M.begin(), c.M.end());
      });

  m.def("canonical_aux", &spinc::canonical_aux, py::arg("params"));
  m.def("anti_canonical_aux", &spinc::anti_canonical_aux, py::arg("params"));
  m.def("build_connection", &spinc::build_connection, py::arg("model"),
        py::arg("aux"));
  m.def("deform", &spinc::deform, py::arg("connection"), py::arg("c"));
  m.def("dirac_matrix", &spinc::dirac_matrix, py::arg("connection"));
  m.def("ricci_identity_residual", &spinc::ricci_identity_residual);
  m.def("lichnerowicz_residual", &spinc::lichnerowicz_residual);

  py::class_<spinc::KillingSolution>(m, "KillingSolution")
      .def_readonly("alpha", &spinc::KillingSolution::alpha)
      .def_readonly("basis", &spinc::KillingSolution::basis)
      .def_readonly("xi_eigenvalue", &spinc::KillingSolution::xi_eigenvalue)
      .def_readonly("xi_residual", &spinc::KillingSolution::xi_residual)
      .def_property_readonly("dimension", [](const spinc::KillingSolution& s) {
        return s.basis.size();
      });

  m.def("killing_solve", &spinc::killing_solve, py::arg("connection"),
        py::arg("alpha"));

  py::class_<berger::HarmonicSpace>(m, "HarmonicSpace")
      .def_readonly("degree", &berger::HarmonicSpace::degree)
      .def_readonly("ortho", &berger::HarmonicSpace::ortho)
      .def_readonly("gram", &berger::HarmonicSpace::gram)
      .def_property_readonly("dim", &berger::HarmonicSpace::dim);

  m.def("harmonic_basis", &berger::harmonic_basis, py::arg("k"));
  m.def(
      "frame_derivations",
      [](const berger::HarmonicSpace& h) {
        auto d = berger::frame_derivations(h);
        return std::vector<Eigen::MatrixXd>(d.begin(), d.end());
      },
      py::arg("space"));
  m.def("hopf_operator", &berger::hopf_operator, py::arg("space"));
  m.def("degree_ceiling", &berger::degree_ceiling);

  py::enum_<berger::Structure>(m, "Structure")
      .value("canonical", berger::Structure::canonical)
      .value("induced", berger::Structure::induced);

  py::enum_<berger::Certainty>(m, "Certainty")
      .value("eigen_of_squared", berger::Certainty::eigen_of_squared)
      .value("realized", berger::Certainty::realized);

  py::enum_<berger::Scan>(m, "Scan")
      .value("confirmed", berger::Scan::confirmed)
      .value("candidates", berger::Scan::candidates)
      .value("confirmed_strict", berger::Scan::confirmed_strict);

  py::class_<berger::TannoEntry>(m, "TannoEntry")
      .def_readonly("p", &berger::TannoEntry::p)
      .def_readonly("value", &berger::TannoEntry::value)
      .def_readonly("multiplicity", &berger::TannoEntry::multiplicity)
      .def("__repr__", [](const berger::TannoEntry& e) {
        return "TannoEntry(p=" + std::to_string(e.p) +
               ", value=" + std::to_string(e.value) +
               ", multiplicity=" + std::to_string(e.multiplicity) + ")";
      });

  m.def("tanno_eigenvalues", &berger::tanno_eigenvalues, py::arg("k"),
        py::arg("tau"));
  m.def("tanno_assembled", &berger::tanno_assembled, py::arg("space"),
        py::arg("tau"));
  m.def("dirac_block", &berger::dirac_block, py::arg("space"), py::arg("tau"),
        py::arg("structure"));
  m.def("dirac_block_eigenvalues", &berger::dirac_block_eigenvalues,
        py::arg("space"), py::arg("tau"), py::arg("structure"));

  py::class_<berger::SpectrumEntry>(m, "SpectrumEntry")
      .def_readonly("k", &berger::SpectrumEntry::k)
      .def_readonly("p", &berger::SpectrumEntry::p)
      .def_readonly("branch", &berger::SpectrumEntry::branch)
      .def_readonly("value", &berger::SpectrumEntry::value)
      .def_readonly("q", &berger::SpectrumEntry::q)
      .def_readonly("multiplicity", &berger::SpectrumEntry::multiplicity)
      .def_readonly("structure", &berger::SpectrumEntry::structure)
      .def_readonly("certainty", &berger::SpectrumEntry::certainty)
      .def("__repr__", [](const berger::SpectrumEntry& e) {
        return "SpectrumEntry(k=" + std::to_string(e.k) +
               ", p=" + std::to_string(e.p) +
               ", branch=" + std::string(e.branch > 0 ? "+1" : "-1") +
               ", value=" + std::to_string(e.value) + ")";
      });

  m.def("dirac_spectrum", &berger::dirac_spectrum, py::arg("tau"),
        py::arg("structure"), py::arg("k_max"), py::arg("witness") = true);

  py::class_<berger::CompareRow>(m, "CompareRow")
      .def_readonly("entry", &berger::CompareRow::entry)
      .def_readonly("reference_value", &berger::CompareRow::reference_value)
      .def_readonly("discrepant", &berger::CompareRow::discrepant);

  m.def("dirac_spectrum_compare", &berger::dirac_spectrum_compare,
        py::arg("tau"), py::arg("structure"), py::arg("k_max"));

  py::class_<berger::FirstPositive>(m, "FirstPositive")
      .def_readonly("value", &berger::FirstPositive::value)
      .def_readonly("confirmed", &berger::FirstPositive::confirmed)
      .def_readonly("entry", &berger::FirstPositive::entry);

  m.def("first_positive_eigenvalue", &berger::first_positive_eigenvalue,
        py::arg("tau"), py::arg("structure"), py::arg("k_max"),
        py::arg("scan") = berger::Scan::confirmed);

  py::class_<geometry::HypersurfaceData>(m, "HypersurfaceData")
      .def(py::init<>())
      .def_readwrite("n", &geometry::HypersurfaceData::n)
      .def_readwrite("mean_curvature",
                     &geometry::HypersurfaceData::mean_curvature)
      .def_readwrite("killing_number",
                     &geometry::HypersurfaceData::killing_number)
      .def_readwrite("parallel_rank", &geometry::HypersurfaceData::parallel_rank)
      .def_readwrite("lambda1", &geometry::HypersurfaceData::lambda1)
      .def_readwrite("constant_mean_curvature",
                     &geometry::HypersurfaceData::constant_mean_curvature);

  py::class_<geometry::BoundCheck>(m, "BoundCheck")
      .def_readonly("satisfied", &geometry::BoundCheck::satisfied)
      .def_readonly("margin", &geometry::BoundCheck::margin)
      .def_readonly("equality", &geometry::BoundCheck::equality);

  m.def("lower_bound_check", &geometry::lower_bound_check, py::arg("data"));
  m.def("upper_bound_check", &geometry::upper_bound_check, py::arg("data"));

  py::enum_<geometry::ShapeMode>(m, "ShapeMode")
      .value("corrected", geometry::ShapeMode::corrected)
      .value("paper_literal", geometry::ShapeMode::paper_literal);

  py::class_<geometry::ImmersionData>(m, "ImmersionData")
      .def_readonly("mean_curvature", &geometry::ImmersionData::mean_curvature)
      .def_readonly("shape_operator", &geometry::ImmersionData::shape_operator)
      .def_readonly("trace_mismatch", &geometry::ImmersionData::trace_mismatch);

  m.def("berger_immersion_data", &geometry::berger_immersion_data,
        py::arg("params"), py::arg("mode") = geometry::ShapeMode::corrected,
        py::arg("allow_any_params") = false);

  py::class_<geometry::SasakiParams>(m, "SasakiParams")
      .def_readonly("c", &geometry::SasakiParams::c)
      .def_readonly("omega12_prime", &geometry::SasakiParams::omega12_prime);

  m.def("sasaki_immersion_params", &geometry::sasaki_immersion_params,
        py::arg("scal"));

  py::class_<geometry::SurfaceData>(m, "SurfaceData")
      .def_readonly("params", &geometry::SurfaceData::params)
      .def_readonly("shape", &geometry::SurfaceData::shape)
      .def_readonly("mean_curvature", &geometry::SurfaceData::mean_curvature)
      .def_readonly("f", &geometry::SurfaceData::f)
      .def_readonly("T", &geometry::SurfaceData::T)
      .def_readonly("omega12", &geometry::SurfaceData::omega12);

  m.def("make_umbilic_surface", &geometry::make_umbilic_surface,
        py::arg("params"), py::arg("H"), py::arg("f"), py::arg("theta"));

  py::class_<geometry::UmbilicResult>(m, "UmbilicResult")
      .def_readonly("dH", &geometry::UmbilicResult::dH)
      .def_readonly("dH_closed_form", &geometry::UmbilicResult::dH_closed_form)
      .def_readonly("residual", &geometry::UmbilicResult::residual)
      .def_readonly("constant_H_contradiction",
                    &geometry::UmbilicResult::constant_H_contradiction);

  m.def("umbilic_obstruction", &geometry::umbilic_obstruction,
        py::arg("surface"));
}
