#include "casimir/dos.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/format.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(const SpectralModes& modes) {
  if (modes.valid) return;
  double offending = 0.0;
  for (const ModeEntry& e : modes.entries) {
    if (!(e.n > 0.0 && e.n < 1.0)) {
      offending = e.n;
      break;
    }
  }
  throw BreakdownError(
      "dipolar approximation breakdown: depolarization factor outside (0, 1)",
      offending);
}

void require_drude_params(double omega_ev, double omega_p_ev, double gamma) {
  if (!(omega_ev >= 0.0)) {
    throw std::invalid_argument("dos_omega: omega_ev must be >= 0");
  }
  if (!(omega_p_ev > 0.0)) {
    throw std::invalid_argument("dos_omega: omega_p_ev must be > 0");
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("dos_omega: gamma must be > 0");
  }
}

// One surface mode's contribution per unit spectral weight.
double mode_term(double n, double omega, double omega_p, double gamma,
                 Normalization norm) {
  const double wg = omega * gamma * omega_p;
  const double det = omega * omega - n * omega_p * omega_p;
  const double lorentz = wg / (det * det + wg * wg);
  double value = (2.0 * omega_p * omega_p / kPi) * std::sqrt(n) * lorentz;
  if (norm == Normalization::PerModeUnity) value /= omega_p;
  return value;
}

}  // namespace

double dos_omega_direction(const SpectralModes& modes, int m, double omega_ev,
                           double omega_p_ev, double gamma, Normalization norm) {
  require_valid(modes);
  require_drude_params(omega_ev, omega_p_ev, gamma);
  Mat3::index_of_m(m);
  double rho = 0.0;
  for (const ModeEntry& e : modes.entries) {
    if (e.m != std::abs(m)) continue;
    rho += e.weight * mode_term(e.n, omega_ev, omega_p_ev, gamma, norm);
  }
  return rho;
}

double dos_omega_total(const SpectralModes& modes, double omega_ev,
                       double omega_p_ev, double gamma, Normalization norm) {
  require_valid(modes);
  require_drude_params(omega_ev, omega_p_ev, gamma);
  double rho = 0.0;
  for (const ModeEntry& e : modes.entries) {
    rho += e.degeneracy * e.weight *
           mode_term(e.n, omega_ev, omega_p_ev, gamma, norm);
  }
  return rho;
}

std::vector<double> default_omega_grid(double omega_p_ev, std::size_t points) {
  if (!(omega_p_ev > 0.0)) {
    throw std::invalid_argument("default_omega_grid: omega_p_ev must be > 0");
  }
  if (points < 2) {
    throw std::invalid_argument("default_omega_grid: need at least two points");
  }
  std::vector<double> grid(points);
  const double step = 2.0 * omega_p_ev / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = step * static_cast<double>(i);
  }
  return grid;
}

DOSProfile dos_difference(const Environment& env, const Geometry& geom,
                          std::span<const double> omega_grid, double gamma,
                          Normalization norm, bool selection_rule) {
  if (!env.sphere().is_drude()) {
    throw std::invalid_argument("dos_difference: the sphere must be a Drude material");
  }
  if (omega_grid.size() < 2) {
    throw std::invalid_argument("dos_difference: grid needs at least two points");
  }
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] >= 0.0) || (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))) {
      throw std::invalid_argument(
          "dos_difference: grid must be nonnegative and strictly increasing");
    }
  }

  const double f_c = contrast_factor(env);
  const SpectralModes coupled = spectral_modes(f_c, geom.d_over_r(), selection_rule);
  require_valid(coupled);
  const SpectralModes isolated = spectral_modes(0.0, geom.d_over_r(), selection_rule);
  const double wp = env.sphere().plasma_energy_ev();

  DOSProfile profile;
  profile.normalization = norm;
  profile.omegas.assign(omega_grid.begin(), omega_grid.end());
  profile.rho_sp.reserve(omega_grid.size());
  profile.rho_s.reserve(omega_grid.size());
  profile.diff.reserve(omega_grid.size());
  for (double w : omega_grid) {
    const double sp = dos_omega_total(coupled, w, wp, gamma, norm);
    const double s = dos_omega_total(isolated, w, wp, gamma, norm);
    profile.rho_sp.push_back(sp);
    profile.rho_s.push_back(s);
    profile.diff.push_back(sp - s);
  }
  return profile;
}

std::vector<SeparationProfile> sample_dos_profiles(
    const Environment& env, std::span<const double> z_over_r,
    std::span<const double> omega_grid, Normalization norm) {
  const double gamma = env.sphere().damping_ratio();
  std::vector<SeparationProfile> table;
  table.reserve(z_over_r.size());
  for (double ratio : z_over_r) {
    SeparationProfile entry;
    entry.z_over_r = ratio;
    try {
      const Geometry geom(1.0, ratio);  // modes depend on geometry via z/R only
      entry.profile = dos_difference(env, geom, omega_grid, gamma, norm);
      entry.valid = true;
    } catch (const BreakdownError&) {
      entry.valid = false;
    }
    table.push_back(std::move(entry));
  }
  return table;
}

void write_profile_csv(std::ostream& os, const DOSProfile& profile) {
  os << "omega_eV,rho_sp,rho_s,diff\n";
  for (std::size_t i = 0; i < profile.omegas.size(); ++i) {
    os << sci9(profile.omegas[i]) << ',' << sci9(profile.rho_sp[i]) << ','
       << sci9(profile.rho_s[i]) << ',' << sci9(profile.diff[i]) << '\n';
  }
}

}  // namespace casimir
