#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace casimir {

enum class MaterialKind { Drude, Constant, PerfectConductor };

/// Dielectric model of one medium. All frequencies are photon energies
/// hbar*omega in eV; the Drude damping is stored as the dimensionless ratio
/// gamma = 1/(tau * omega_p).
class Material {
 public:
  static Material drude(double plasma_energy_ev, double damping_ratio);
  static Material constant(double epsilon);
  static Material perfect_conductor();

  MaterialKind kind() const { return kind_; }
  bool is_drude() const { return kind_ == MaterialKind::Drude; }

  /// Drude parameters; throws std::logic_error for other kinds.
  double plasma_energy_ev() const;
  double damping_ratio() const;

  /// Constant permittivity; throws std::logic_error for other kinds.
  double epsilon() const;

 private:
  Material(MaterialKind kind, double wp, double gamma, double eps)
      : kind_(kind), plasma_energy_ev_(wp), damping_ratio_(gamma), epsilon_(eps) {}

  MaterialKind kind_;
  double plasma_energy_ev_;
  double damping_ratio_;
  double epsilon_;
};

/// Sphere + substrate + ambient. The ambient must be a constant (real)
/// dielectric so that the contrast factor stays real.
class Environment {
 public:
  Environment(Material sphere, Material substrate, Material ambient);
  Environment(Material sphere, Material substrate);  // ambient = vacuum

  const Material& sphere() const { return sphere_; }
  const Material& substrate() const { return substrate_; }
  const Material& ambient() const { return ambient_; }

 private:
  Material sphere_;
  Material substrate_;
  Material ambient_;
};

/// Complex relative permittivity at photon energy omega_ev.
/// Drude: 1 - wp^2 / (w (w + i gamma wp)). Throws std::domain_error at the
/// w = 0 pole and std::invalid_argument for a perfect conductor (no finite
/// epsilon; use contrast_factor for the substrate-side limit).
std::complex<double> epsilon_at(const Material& material, double omega_ev);

/// Image-dipole contrast factor (eps_a - eps_p)/(eps_a + eps_p).
/// Exactly -1 for a perfect conductor. The substrate must be constant or a
/// perfect conductor (a dispersive substrate would make it complex).
/// omega_ev is accepted for signature generality; the supported substrate
/// kinds are dispersionless so it does not enter.
double contrast_factor(const Environment& env, double omega_ev = 0.0);

/// Spectral variable u = 1/(1 - eps_s/eps_a). For an undamped Drude sphere in
/// vacuum this is (w/wp)^2. Throws std::domain_error when eps_s = eps_a.
std::complex<double> spectral_u(const Environment& env, double omega_ev);

/// Dipole polarizability R^3 (eps_s - 1)/(eps_s + 2) in nm^3. Diagnostic
/// only; the energy path works in the spectral representation instead.
std::complex<double> polarizability(const Environment& env, double radius_nm,
                                    double omega_ev);

namespace presets {

Material potassium();          // Drude, hbar*wp = 3.8 eV, gamma = 0.105
Material gold();               // Drude, hbar*wp = 8.55 eV, gamma = 0.0126
Material titania();            // eps = 7.8106  (f_c = -0.773 against vacuum)
Material sapphire();           // eps = 3.1322  (f_c = -0.516 against vacuum)
Material perfect_conductor();  // f_c = -1 exactly
Material vacuum();             // eps = 1

}  // namespace presets

/// Name lookups used by the CLI ("K", "Au" / "tio2", "sapphire", "perfect",
/// "vacuum"). Case-sensitive on the chemical symbols, lowercase otherwise.
std::optional<Material> sphere_preset(std::string_view name);
std::optional<Material> substrate_preset(std::string_view name);

}  // namespace casimir
