#include "casimir/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

Material Material::drude(double plasma_energy_ev, double damping_ratio) {
  if (!(plasma_energy_ev > 0.0)) {
    throw std::invalid_argument("Material::drude: plasma_energy_ev must be > 0");
  }
  if (!(damping_ratio >= 0.0)) {
    throw std::invalid_argument("Material::drude: damping_ratio must be >= 0");
  }
  return Material(MaterialKind::Drude, plasma_energy_ev, damping_ratio, 0.0);
}

Material Material::constant(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("Material::constant: epsilon must be > 0");
  }
  return Material(MaterialKind::Constant, 0.0, 0.0, epsilon);
}

Material Material::perfect_conductor() {
  return Material(MaterialKind::PerfectConductor, 0.0, 0.0, 0.0);
}

double Material::plasma_energy_ev() const {
  if (kind_ != MaterialKind::Drude) {
    throw std::logic_error("Material: plasma_energy_ev is Drude-only");
  }
  return plasma_energy_ev_;
}

double Material::damping_ratio() const {
  if (kind_ != MaterialKind::Drude) {
    throw std::logic_error("Material: damping_ratio is Drude-only");
  }
  return damping_ratio_;
}

double Material::epsilon() const {
  if (kind_ != MaterialKind::Constant) {
    throw std::logic_error("Material: epsilon is Constant-only");
  }
  return epsilon_;
}

Environment::Environment(Material sphere, Material substrate, Material ambient)
    : sphere_(sphere), substrate_(substrate), ambient_(ambient) {
  if (ambient_.kind() != MaterialKind::Constant) {
    throw std::invalid_argument("Environment: ambient must be a constant dielectric");
  }
}

Environment::Environment(Material sphere, Material substrate)
    : Environment(sphere, substrate, presets::vacuum()) {}

std::complex<double> epsilon_at(const Material& material, double omega_ev) {
  if (!(omega_ev >= 0.0)) {
    throw std::invalid_argument("epsilon_at: omega_ev must be >= 0");
  }
  switch (material.kind()) {
    case MaterialKind::Constant:
      return {material.epsilon(), 0.0};
    case MaterialKind::PerfectConductor:
      throw std::invalid_argument(
          "epsilon_at: a perfect conductor has no finite permittivity");
    case MaterialKind::Drude: {
      if (omega_ev == 0.0) {
        // 1 - wp^2/(w(w + i g wp)) diverges along the real axis as w -> 0+.
        throw std::domain_error("epsilon_at: Drude pole at omega = 0");
      }
      const double wp = material.plasma_energy_ev();
      const std::complex<double> denom =
          omega_ev * std::complex<double>(omega_ev, material.damping_ratio() * wp);
      return 1.0 - wp * wp / denom;
    }
  }
  throw std::logic_error("epsilon_at: unreachable");
}

double contrast_factor(const Environment& env, double omega_ev) {
  (void)omega_ev;
  const double eps_a = env.ambient().epsilon();
  switch (env.substrate().kind()) {
    case MaterialKind::PerfectConductor:
      return -1.0;
    case MaterialKind::Constant: {
      const double eps_p = env.substrate().epsilon();
      return (eps_a - eps_p) / (eps_a + eps_p);
    }
    case MaterialKind::Drude:
      throw std::invalid_argument(
          "contrast_factor: dispersive substrates would make f_c complex; "
          "use a constant-permittivity or perfect-conductor substrate");
  }
  throw std::logic_error("contrast_factor: unreachable");
}

std::complex<double> spectral_u(const Environment& env, double omega_ev) {
  const std::complex<double> eps_s = epsilon_at(env.sphere(), omega_ev);
  const double eps_a = env.ambient().epsilon();
  const std::complex<double> denom = 1.0 - eps_s / eps_a;
  if (denom == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("spectral_u: eps_s equals eps_a");
  }
  return 1.0 / denom;
}

std::complex<double> polarizability(const Environment& env, double radius_nm,
                                    double omega_ev) {
  if (!(radius_nm > 0.0)) {
    throw std::invalid_argument("polarizability: radius_nm must be > 0");
  }
  const std::complex<double> eps_s = epsilon_at(env.sphere(), omega_ev);
  const std::complex<double> denom = eps_s + 2.0;
  if (denom == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("polarizability: dipole resonance pole at eps_s = -2");
  }
  const double r3 = radius_nm * radius_nm * radius_nm;
  return r3 * (eps_s - 1.0) / denom;
}

namespace presets {

Material potassium() { return Material::drude(3.8, 0.105); }
Material gold() { return Material::drude(8.55, 0.0126); }
Material titania() { return Material::constant(7.8106); }
Material sapphire() { return Material::constant(3.1322); }
Material perfect_conductor() { return Material::perfect_conductor(); }
Material vacuum() { return Material::constant(1.0); }

}  // namespace presets

std::optional<Material> sphere_preset(std::string_view name) {
  if (name == "K" || name == "k") return presets::potassium();
  if (name == "Au" || name == "au") return presets::gold();
  return std::nullopt;
}

std::optional<Material> substrate_preset(std::string_view name) {
  if (name == "tio2") return presets::titania();
  if (name == "sapphire") return presets::sapphire();
  if (name == "perfect") return presets::perfect_conductor();
  if (name == "vacuum") return presets::vacuum();
  return std::nullopt;
}

}  // namespace casimir
