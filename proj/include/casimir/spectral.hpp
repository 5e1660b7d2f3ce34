#pragma once

#include <array>
#include <complex>
#include <vector>

namespace casimir {

/// Sphere of radius R at surface-to-surface gap z above the substrate
/// (both nm). The center-to-substrate distance is d = z + R.
class Geometry {
 public:
  Geometry(double radius_nm, double gap_nm);

  double radius_nm() const { return radius_nm_; }
  double gap_nm() const { return gap_nm_; }
  double center_distance_nm() const { return gap_nm_ + radius_nm_; }
  double d_over_r() const { return 1.0 + gap_nm_ / radius_nm_; }

 private:
  double radius_nm_;
  double gap_nm_;
};

/// Dense 3x3 real matrix over the dipole components m in {-1, 0, +1}.
class Mat3 {
 public:
  double& at(int i, int j) { return a_[static_cast<std::size_t>(3 * i + j)]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(3 * i + j)]; }

  double& at_m(int m, int m_prime) { return at(index_of_m(m), index_of_m(m_prime)); }
  double at_m(int m, int m_prime) const { return at(index_of_m(m), index_of_m(m_prime)); }

  bool symmetric(double tol = 1e-12) const;

  /// m in {-1, 0, +1} -> row/column index; throws std::invalid_argument.
  static int index_of_m(int m);

 private:
  std::array<double, 9> a_{};
};

/// Dimensionless dipole-image-dipole interaction element
///   A_m^{m'} = 4 pi (-1)^m (d/R)^{-3} (2/3) [(1+m)!(1-m)!(1+m')!(1-m')!]^{-1/2}.
/// With the axial-symmetry selection rule (default) off-diagonal m != m'
/// elements vanish; selection_rule=false evaluates the expression literally.
/// Throws std::domain_error for d_over_r < 1 (sphere intersects substrate).
double interaction_element(double d_over_r, int m, int m_prime,
                           bool selection_rule = true);

/// Surface-mode matrix H_m^{m'} = (1/3) delta_mm' + f_c (1/4pi) (-1)^m A_m^{m'}.
/// Depends on geometry only through d/R. Closed forms under the selection
/// rule: H00 = 1/3 + (2/3) f_c (d/R)^-3, H11 = 1/3 + (1/3) f_c (d/R)^-3.
Mat3 h_matrix(double f_c, double d_over_r, bool selection_rule = true);

struct ModeEntry {
  int m = 0;            // 0 = perpendicular to the substrate, 1 = parallel
  double n = 0.0;       // depolarization factor (1/3 for an isolated sphere)
  double weight = 0.0;  // spectral weight C_s; sums to 1 per direction
  int degeneracy = 1;   // 1 for m = 0, 2 for m = +-1
};

struct SpectralModes {
  std::vector<ModeEntry> entries;
  double f_c = 0.0;
  double d_over_r = 1.0;
  bool valid = false;  // true iff every retained n lies in (0, 1)
};

/// Eigenvalues n_s and per-direction weights C_s = (U_{ms})^2 of a symmetric
/// H (checked to 1e-12; throws std::invalid_argument otherwise). Entries with
/// equal n are merged per direction and negligible weights dropped, so the
/// selection-rule case yields one entry per direction with C = 1.
SpectralModes eigenmodes(const Mat3& h);

/// Convenience: eigenmodes(h_matrix(f_c, d_over_r)) with metadata filled in.
SpectralModes spectral_modes(double f_c, double d_over_r,
                             bool selection_rule = true);

/// Density of states in the spectral variable u for one direction,
///   rho_m(u) = -(1/pi) Im sum_s C_s / (u + i eta - n_s),
/// and the degeneracy-weighted total rho = rho_0 + 2 rho_1.
double dos_u_direction(const SpectralModes& modes, int m, double u, double eta);
double dos_u_total(const SpectralModes& modes, double u, double eta);

using CVec3 = std::array<std::complex<double>, 3>;

/// Resolvent solve (u I - H) x = g; the sign convention is fixed so that
/// -(1/pi) Im x_m at u + i eta reproduces dos_u_direction. Throws
/// std::domain_error when u is an eigenvalue of H and the system is singular.
CVec3 solve_response(const Mat3& h, std::complex<double> u, const CVec3& g);

/// Cyclic-Jacobi eigendecomposition of a symmetric 3x3 matrix; eigenvalues
/// ascending, eigenvectors in the matching columns of `vectors`.
void sym_eigen3(const Mat3& a, std::array<double, 3>& values, Mat3& vectors);

}  // namespace casimir
