#include "casimir/energy_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void require_drude_sphere(const Environment& env) {
  if (!env.sphere().is_drude()) {
    throw std::invalid_argument(
        "casimir_energy: the sphere must be a Drude material (the frequency-"
        "domain density of states is derived for the Drude model)");
  }
  if (!(env.sphere().damping_ratio() > 0.0)) {
    throw std::invalid_argument(
        "casimir_energy: the Drude damping ratio must be > 0");
  }
}

double first_offending_n(const SpectralModes& modes) {
  for (const ModeEntry& e : modes.entries) {
    if (!(e.n > 0.0 && e.n < 1.0)) return e.n;
  }
  return 0.0;
}

// Quadrature panels seeded at every mode resonance sqrt(n) wp with extra
// structure inside a few linewidths of each peak.
std::vector<double> resonance_breakpoints(const SpectralModes& coupled,
                                          const SpectralModes& isolated,
                                          double wp, double gamma,
                                          double cutoff) {
  std::vector<double> pts{0.0, cutoff};
  const double half_width = std::max(0.5 * gamma * wp, 1e-12 * wp);
  auto add = [&](double w) {
    if (w > 0.0 && w < cutoff) pts.push_back(w);
  };
  auto add_modes = [&](const SpectralModes& modes) {
    for (const ModeEntry& e : modes.entries) {
      const double ws = std::sqrt(e.n) * wp;
      add(ws);
      add(ws - half_width);
      add(ws + half_width);
      add(ws - 10.0 * half_width);
      add(ws + 10.0 * half_width);
    }
  };
  add_modes(coupled);
  add_modes(isolated);
  add(wp);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// d/dn of one mode's density of states per unit weight (PerModeUnity carries
// an extra 1/wp like the density itself).
double mode_term_dn(double n, double omega, double wp, double gamma,
                    Normalization norm) {
  const double wg = omega * gamma * wp;
  const double det = omega * omega - n * wp * wp;
  const double d = det * det + wg * wg;
  const double sqrt_n = std::sqrt(n);
  double value = (2.0 * wp * wp / kPi) * wg *
                 (1.0 / (2.0 * sqrt_n * d) + sqrt_n * 2.0 * wp * wp * det / (d * d));
  if (norm == Normalization::PerModeUnity) value /= wp;
  return value;
}

struct EnergyIntegral {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

EnergyIntegral integrate_energy(const std::function<double(double)>& f,
                                std::span<const double> breakpoints,
                                const QuadratureConfig& quad, double cutoff) {
  EnergyIntegral out;
  const QuadOutcome body =
      integrate_adaptive(f, breakpoints, quad.rel_tol, quad.max_subdivisions);
  out.value = body.value;
  out.error = body.abs_error;
  out.panels = body.panels;
  if (quad.tail_correction) {
    const TailEstimate tail = inverse_square_tail(f, cutoff);
    out.value += tail.value;
    out.error += tail.error;
  }
  return out;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw std::invalid_argument("QuadratureConfig: rel_tol must lie in (0, 1e-2]");
  }
  if (!(omega_max >= 10.0)) {
    throw std::invalid_argument("QuadratureConfig: omega_max must be >= 10");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
  }
}

EnergyResult casimir_energy(const Environment& env, const Geometry& geom,
                            const QuadratureConfig& quad, Normalization norm,
                            bool selection_rule) {
  quad.validate();
  require_drude_sphere(env);

  EnergyResult result;
  result.normalization = norm;

  const double f_c = contrast_factor(env);
  const SpectralModes coupled =
      spectral_modes(f_c, geom.d_over_r(), selection_rule);
  if (!coupled.valid) {
    result.breakdown = true;
    result.breakdown_n = first_offending_n(coupled);
    return result;
  }
  const SpectralModes isolated =
      spectral_modes(0.0, geom.d_over_r(), selection_rule);

  const double wp = env.sphere().plasma_energy_ev();
  const double gamma = env.sphere().damping_ratio();
  const double cutoff = quad.omega_max * wp;
  result.cutoff_ev = cutoff;

  const auto integrand = [&](double w) {
    return 0.5 * w *
           (dos_omega_total(coupled, w, wp, gamma, norm) -
            dos_omega_total(isolated, w, wp, gamma, norm));
  };
  const std::vector<double> pts =
      resonance_breakpoints(coupled, isolated, wp, gamma, cutoff);
  const EnergyIntegral integral = integrate_energy(integrand, pts, quad, cutoff);
  result.energy = integral.value;
  result.estimated_error = integral.error;
  result.subdivisions = integral.panels;
  return result;
}

namespace {

// Finite-difference force: energies on a stencil around z, one Richardson
// level. Returns false when any stencil energy hits dipolar breakdown.
bool stencil_energy(const Environment& env, double radius, double z,
                    const QuadratureConfig& quad, Normalization norm,
                    bool selection_rule, double& u, double& err) {
  const EnergyResult r =
      casimir_energy(env, Geometry(radius, z), quad, norm, selection_rule);
  if (r.breakdown) return false;
  u = r.energy;
  err = r.estimated_error;
  return true;
}

ForceResult finite_difference_force(const Environment& env,
                                    const Geometry& geom,
                                    const QuadratureConfig& quad,
                                    Normalization norm, bool selection_rule) {
  ForceResult result;
  result.method = ForceMethod::FiniteDifference;

  const double radius = geom.radius_nm();
  const double z = geom.gap_nm();
  const double h = std::max(1e-3 * radius, 1e-3);

  double u_center = 0.0, e_center = 0.0;
  if (!stencil_energy(env, radius, z, quad, norm, selection_rule, u_center,
                      e_center)) {
    const SpectralModes modes =
        spectral_modes(contrast_factor(env), geom.d_over_r(), selection_rule);
    result.breakdown = true;
    result.breakdown_n = first_offending_n(modes);
    return result;
  }

  double u_mh = 0.0, e_mh = 0.0, u_mh2 = 0.0, e_mh2 = 0.0;
  const bool left_ok =
      z - h >= 0.0 &&
      stencil_energy(env, radius, z - h, quad, norm, selection_rule, u_mh, e_mh) &&
      stencil_energy(env, radius, z - 0.5 * h, quad, norm, selection_rule, u_mh2,
                     e_mh2);

  double u_ph = 0.0, e_ph = 0.0, u_ph2 = 0.0, e_ph2 = 0.0;
  if (!stencil_energy(env, radius, z + h, quad, norm, selection_rule, u_ph, e_ph) ||
      !stencil_energy(env, radius, z + 0.5 * h, quad, norm, selection_rule, u_ph2,
                      e_ph2)) {
    // Larger separations only move the modes toward 1/3; reaching here means
    // the configuration is numerically unusable.
    result.breakdown = true;
    return result;
  }

  double derivative = 0.0;
  double fd_spread = 0.0;
  double quad_noise = 0.0;
  if (left_ok) {
    const double d1 = (u_ph - u_mh) / (2.0 * h);
    const double d2 = (u_ph2 - u_mh2) / h;
    derivative = (4.0 * d2 - d1) / 3.0;
    fd_spread = std::abs(d2 - d1) / 3.0;
    quad_noise = (e_ph + e_mh + e_ph2 + e_mh2) / (2.0 * h);
  } else {
    double u_p2h = 0.0, e_p2h = 0.0;
    if (!stencil_energy(env, radius, z + 2.0 * h, quad, norm, selection_rule,
                        u_p2h, e_p2h)) {
      result.breakdown = true;
      return result;
    }
    const double g1 = (-3.0 * u_center + 4.0 * u_ph - u_p2h) / (2.0 * h);
    const double g2 = (-3.0 * u_center + 4.0 * u_ph2 - u_ph) / h;
    derivative = (4.0 * g2 - g1) / 3.0;
    fd_spread = std::abs(g2 - g1) / 3.0;
    quad_noise = (e_center + e_ph + e_ph2 + e_p2h) / h;
    result.one_sided = true;
  }

  result.force = -derivative;
  result.estimated_error = fd_spread + quad_noise;
  return result;
}

ForceResult semi_analytic_force(const Environment& env, const Geometry& geom,
                                const QuadratureConfig& quad,
                                Normalization norm, bool selection_rule) {
  if (!selection_rule) {
    throw std::invalid_argument(
        "casimir_force: the semi-analytic method requires the axial selection "
        "rule (dn/dz comes from the closed-form diagonal H)");
  }
  ForceResult result;
  result.method = ForceMethod::SemiAnalytic;

  const double f_c = contrast_factor(env);
  const SpectralModes coupled = spectral_modes(f_c, geom.d_over_r(), true);
  if (!coupled.valid) {
    result.breakdown = true;
    result.breakdown_n = first_offending_n(coupled);
    return result;
  }

  const double wp = env.sphere().plasma_energy_ev();
  const double gamma = env.sphere().damping_ratio();
  const double cutoff = quad.omega_max * wp;
  const double radius = geom.radius_nm();
  const double d = geom.center_distance_nm();
  const double r3_over_d4 = radius * radius * radius / (d * d * d * d);

  double force = 0.0;
  double error = 0.0;
  for (const ModeEntry& mode : coupled.entries) {
    const double c_m = mode.m == 0 ? 2.0 / 3.0 : 1.0 / 3.0;
    const double dn_dz = -3.0 * c_m * f_c * r3_over_d4;
    const auto integrand = [&](double w) {
      return 0.5 * w * mode_term_dn(mode.n, w, wp, gamma, norm);
    };
    const double ws = std::sqrt(mode.n) * wp;
    const double half_width = std::max(0.5 * gamma * wp, 1e-12 * wp);
    std::vector<double> pts{0.0, cutoff};
    for (double w : {ws, ws - half_width, ws + half_width,
                     ws - 10.0 * half_width, ws + 10.0 * half_width}) {
      if (w > 0.0 && w < cutoff) pts.push_back(w);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const EnergyIntegral du_dn = integrate_energy(integrand, pts, quad, cutoff);
    force -= mode.degeneracy * mode.weight * dn_dz * du_dn.value;
    error += std::abs(mode.degeneracy * mode.weight * dn_dz) * du_dn.error;
  }

  result.force = force;
  result.estimated_error = error;
  return result;
}

}  // namespace

ForceResult casimir_force(const Environment& env, const Geometry& geom,
                          const QuadratureConfig& quad, ForceMethod method,
                          Normalization norm, bool selection_rule) {
  quad.validate();
  require_drude_sphere(env);
  if (method == ForceMethod::FiniteDifference) {
    return finite_difference_force(env, geom, quad, norm, selection_rule);
  }
  return semi_analytic_force(env, geom, quad, norm, selection_rule);
}

double sharp_limit_energy(const Environment& env, const Geometry& geom,
                          Normalization norm, bool selection_rule) {
  if (!env.sphere().is_drude()) {
    throw std::invalid_argument("sharp_limit_energy: the sphere must be Drude");
  }
  const double f_c = contrast_factor(env);
  const SpectralModes coupled =
      spectral_modes(f_c, geom.d_over_r(), selection_rule);
  if (!coupled.valid) {
    throw BreakdownError("sharp_limit_energy: dipolar approximation breakdown",
                         first_offending_n(coupled));
  }
  double mode_sum = 0.0;
  for (const ModeEntry& e : coupled.entries) {
    mode_sum += e.degeneracy * e.weight * std::sqrt(e.n);
  }
  mode_sum -= 3.0 * std::sqrt(1.0 / 3.0);

  const double wp = env.sphere().plasma_energy_ev();
  double u = 0.5 * wp * mode_sum;
  if (norm == Normalization::Verbatim) u *= wp;
  return u;
}

double retardation_length_nm(const Material& sphere) {
  if (!sphere.is_drude()) return std::numeric_limits<double>::infinity();
  return kHBarC_eVnm / sphere.plasma_energy_ev();
}

}  // namespace casimir
