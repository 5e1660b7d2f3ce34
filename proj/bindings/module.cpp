#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "casimir/dos.hpp"
#include "casimir/energy_force.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/spectral.hpp"
#include "casimir/version.hpp"

namespace py = pybind11;
using namespace casimir;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Nonretarded sphere-substrate Casimir interaction in the dipolar "
      "spectral representation";
  m.attr("__version__") = kVersion;
  m.attr("PICONEWTON_PER_EV_PER_NM") = kPicoNewtonPerEvPerNm;
  m.attr("HBARC_EV_NM") = kHBarC_eVnm;

  py::register_exception<BreakdownError>(m, "BreakdownError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);

  py::enum_<MaterialKind>(m, "MaterialKind")
      .value("DRUDE", MaterialKind::Drude)
      .value("CONSTANT", MaterialKind::Constant)
      .value("PERFECT_CONDUCTOR", MaterialKind::PerfectConductor);

  py::enum_<Normalization>(m, "Normalization")
      .value("PER_MODE_UNITY", Normalization::PerModeUnity)
      .value("VERBATIM", Normalization::Verbatim);

  py::enum_<ForceMethod>(m, "ForceMethod")
      .value("FINITE_DIFFERENCE", ForceMethod::FiniteDifference)
      .value("SEMI_ANALYTIC", ForceMethod::SemiAnalytic);

  py::class_<Material>(m, "Material")
      .def_static("drude", &Material::drude, py::arg("plasma_energy_ev"),
                  py::arg("damping_ratio"))
      .def_static("constant", &Material::constant, py::arg("epsilon"))
      .def_static("perfect_conductor", &Material::perfect_conductor)
      .def_property_readonly("kind", &Material::kind)
      .def_property_readonly("is_drude", &Material::is_drude)
      .def("plasma_energy_ev", &Material::plasma_energy_ev)
      .def("damping_ratio", &Material::damping_ratio)
      .def("epsilon", &Material::epsilon);

  py::class_<Environment>(m, "Environment")
      .def(py::init<Material, Material, Material>(), py::arg("sphere"),
           py::arg("substrate"), py::arg("ambient"))
      .def(py::init<Material, Material>(), py::arg("sphere"),
           py::arg("substrate"))
      .def_property_readonly("sphere", &Environment::sphere)
      .def_property_readonly("substrate", &Environment::substrate)
      .def_property_readonly("ambient", &Environment::ambient);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<double, double>(), py::arg("radius_nm"), py::arg("gap_nm"))
      .def_property_readonly("radius_nm", &Geometry::radius_nm)
      .def_property_readonly("gap_nm", &Geometry::gap_nm)
      .def_property_readonly("center_distance_nm", &Geometry::center_distance_nm)
      .def_property_readonly("d_over_r", &Geometry::d_over_r);

  m.def("epsilon_at", &epsilon_at, py::arg("material"), py::arg("omega_ev"));
  m.def("contrast_factor", &contrast_factor, py::arg("env"),
        py::arg("omega_ev") = 0.0);
  m.def("spectral_u", &spectral_u, py::arg("env"), py::arg("omega_ev"));
  m.def("polarizability", &polarizability, py::arg("env"), py::arg("radius_nm"),
        py::arg("omega_ev"));
  m.def("sphere_preset", &sphere_preset, py::arg("name"));
  m.def("substrate_preset", &substrate_preset, py::arg("name"));

  py::class_<Mat3>(m, "Mat3")
      .def(py::init<>())
      .def("at", [](const Mat3& h, int i, int j) { return h.at(i, j); },
           py::arg("i"), py::arg("j"))
      .def("at_m", [](const Mat3& h, int mi, int mj) { return h.at_m(mi, mj); },
           py::arg("m"), py::arg("m_prime"))
      .def("tolist", [](const Mat3& h) {
        std::vector<std::vector<double>> rows(3, std::vector<double>(3));
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) rows[i][j] = h.at(i, j);
        }
        return rows;
      });

  m.def("interaction_element", &interaction_element, py::arg("d_over_r"),
        py::arg("m"), py::arg("m_prime"), py::arg("selection_rule") = true);
  m.def("h_matrix", &h_matrix, py::arg("f_c"), py::arg("d_over_r"),
        py::arg("selection_rule") = true);

  py::class_<ModeEntry>(m, "ModeEntry")
      .def_readonly("m", &ModeEntry::m)
      .def_readonly("n", &ModeEntry::n)
      .def_readonly("weight", &ModeEntry::weight)
      .def_readonly("degeneracy", &ModeEntry::degeneracy);

  py::class_<SpectralModes>(m, "SpectralModes")
      .def_readonly("entries", &SpectralModes::entries)
      .def_readonly("f_c", &SpectralModes::f_c)
      .def_readonly("d_over_r", &SpectralModes::d_over_r)
      .def_readonly("valid", &SpectralModes::valid);

  m.def("eigenmodes", &eigenmodes, py::arg("h"));
  m.def("spectral_modes", &spectral_modes, py::arg("f_c"), py::arg("d_over_r"),
        py::arg("selection_rule") = true);
  m.def("dos_u_direction", &dos_u_direction, py::arg("modes"), py::arg("m"),
        py::arg("u"), py::arg("eta"));
  m.def("dos_u_total", &dos_u_total, py::arg("modes"), py::arg("u"),
        py::arg("eta"));
  m.def("solve_response", &solve_response, py::arg("h"), py::arg("u"),
        py::arg("g"));

  m.def("dos_omega_direction", &dos_omega_direction, py::arg("modes"),
        py::arg("m"), py::arg("omega_ev"), py::arg("omega_p_ev"),
        py::arg("gamma"), py::arg("norm") = Normalization::PerModeUnity);
  m.def("dos_omega_total", &dos_omega_total, py::arg("modes"),
        py::arg("omega_ev"), py::arg("omega_p_ev"), py::arg("gamma"),
        py::arg("norm") = Normalization::PerModeUnity);

  py::class_<DOSProfile>(m, "DOSProfile")
      .def_readonly("omegas", &DOSProfile::omegas)
      .def_readonly("rho_sp", &DOSProfile::rho_sp)
      .def_readonly("rho_s", &DOSProfile::rho_s)
      .def_readonly("diff", &DOSProfile::diff)
      .def_readonly("normalization", &DOSProfile::normalization);

  m.def("default_omega_grid", &default_omega_grid, py::arg("omega_p_ev"),
        py::arg("points") = static_cast<std::size_t>(2000));
  m.def(
      "dos_difference",
      [](const Environment& env, const Geometry& geom,
         const std::vector<double>& grid, double gamma, Normalization norm,
         bool selection_rule) {
        return dos_difference(env, geom, grid, gamma, norm, selection_rule);
      },
      py::arg("env"), py::arg("geom"), py::arg("omega_grid"), py::arg("gamma"),
      py::arg("norm") = Normalization::PerModeUnity,
      py::arg("selection_rule") = true);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("omega_max", &QuadratureConfig::omega_max)
      .def_readwrite("tail_correction", &QuadratureConfig::tail_correction)
      .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions);

  py::class_<EnergyResult>(m, "EnergyResult")
      .def_readonly("energy", &EnergyResult::energy)
      .def_readonly("estimated_error", &EnergyResult::estimated_error)
      .def_readonly("breakdown", &EnergyResult::breakdown)
      .def_readonly("breakdown_n", &EnergyResult::breakdown_n)
      .def_readonly("cutoff_ev", &EnergyResult::cutoff_ev)
      .def_readonly("subdivisions", &EnergyResult::subdivisions)
      .def_readonly("normalization", &EnergyResult::normalization);

  py::class_<ForceResult>(m, "ForceResult")
      .def_readonly("force", &ForceResult::force)
      .def_readonly("estimated_error", &ForceResult::estimated_error)
      .def_readonly("breakdown", &ForceResult::breakdown)
      .def_readonly("breakdown_n", &ForceResult::breakdown_n)
      .def_readonly("one_sided", &ForceResult::one_sided)
      .def_readonly("method", &ForceResult::method);

  m.def("casimir_energy", &casimir_energy, py::arg("env"), py::arg("geom"),
        py::arg("quad") = QuadratureConfig{},
        py::arg("norm") = Normalization::PerModeUnity,
        py::arg("selection_rule") = true);
  m.def("casimir_force", &casimir_force, py::arg("env"), py::arg("geom"),
        py::arg("quad") = QuadratureConfig{},
        py::arg("method") = ForceMethod::FiniteDifference,
        py::arg("norm") = Normalization::PerModeUnity,
        py::arg("selection_rule") = true);
  m.def("sharp_limit_energy", &sharp_limit_energy, py::arg("env"),
        py::arg("geom"), py::arg("norm") = Normalization::PerModeUnity,
        py::arg("selection_rule") = true);
  m.def("retardation_length_nm", &retardation_length_nm, py::arg("sphere"));
}
