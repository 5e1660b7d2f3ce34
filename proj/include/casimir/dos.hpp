#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/spectral.hpp"

namespace casimir {

/// How the frequency-domain density of states is scaled. PerModeUnity
/// (default) divides the printed expression by omega_p so each surface mode
/// integrates to one state over omega and energies come out in eV; Verbatim
/// keeps the expression as printed (each mode then integrates to omega_p).
enum class Normalization { PerModeUnity, Verbatim };

/// Frequency-domain density of states of the surface modes for one direction,
///   rho_m(w) = (2 wp^2/pi) sum_s sqrt(n_s) C_s (w g wp) /
///              [(w^2 - n_s wp^2)^2 + (w g wp)^2],
/// divided by wp under PerModeUnity. The total weights directions by their
/// degeneracy: rho = rho_0 + 2 rho_1. Requires valid modes (throws
/// BreakdownError otherwise: sqrt(n_s) of a negative n has no real mode).
double dos_omega_direction(const SpectralModes& modes, int m, double omega_ev,
                           double omega_p_ev, double gamma,
                           Normalization norm = Normalization::PerModeUnity);
double dos_omega_total(const SpectralModes& modes, double omega_ev,
                       double omega_p_ev, double gamma,
                       Normalization norm = Normalization::PerModeUnity);

/// Coupled/isolated density of states sampled on a frequency grid.
/// diff[i] = rho_sp[i] - rho_s[i] exactly as stored.
struct DOSProfile {
  std::vector<double> omegas;  // eV, strictly increasing
  std::vector<double> rho_sp;  // sphere near the substrate
  std::vector<double> rho_s;   // isolated sphere (f_c = 0)
  std::vector<double> diff;
  Normalization normalization = Normalization::PerModeUnity;
};

/// Uniform display grid on [0, 2 omega_p].
std::vector<double> default_omega_grid(double omega_p_ev,
                                       std::size_t points = 2000);

/// rho^sp - rho^s on the given grid. The sphere must be a Drude material
/// (omega_p is taken from it); gamma is passed explicitly so diagnostics can
/// vary the broadening. Both the coupled and the isolated profile use the
/// same gamma. Throws BreakdownError when the coupled modes are invalid.
DOSProfile dos_difference(const Environment& env, const Geometry& geom,
                          std::span<const double> omega_grid, double gamma,
                          Normalization norm = Normalization::PerModeUnity,
                          bool selection_rule = true);

struct SeparationProfile {
  double z_over_r = 0.0;
  bool valid = false;
  DOSProfile profile;  // empty when not valid
};

/// One DOS-difference profile per separation, skipping dipolar-breakdown
/// separations with a flagged entry instead of aborting.
std::vector<SeparationProfile> sample_dos_profiles(
    const Environment& env, std::span<const double> z_over_r,
    std::span<const double> omega_grid,
    Normalization norm = Normalization::PerModeUnity);

/// CSV emission: header `omega_eV,rho_sp,rho_s,diff`, scientific notation
/// with 9 significant digits.
void write_profile_csv(std::ostream& os, const DOSProfile& profile);

}  // namespace casimir
