#include "casimir/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

// [(1+m)!(1-m)!]^{-1/2} for m in {-1, 0, +1}: 1/sqrt(2), 1, 1/sqrt(2).
double factorial_weight(int m) {
  return m == 0 ? 1.0 : std::numbers::sqrt2 / 2.0;
}

double parity_sign(int m) { return m == 0 ? 1.0 : -1.0; }

}  // namespace

Geometry::Geometry(double radius_nm, double gap_nm)
    : radius_nm_(radius_nm), gap_nm_(gap_nm) {
  if (!(radius_nm > 0.0) || !std::isfinite(radius_nm)) {
    throw std::invalid_argument("Geometry: radius_nm must be positive and finite");
  }
  if (!(gap_nm >= 0.0) || !std::isfinite(gap_nm)) {
    throw std::invalid_argument("Geometry: gap_nm must be >= 0 and finite");
  }
}

bool Mat3::symmetric(double tol) const {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    }
  }
  return true;
}

int Mat3::index_of_m(int m) {
  if (m < -1 || m > 1) {
    throw std::invalid_argument("dipole component m must be -1, 0 or +1");
  }
  return m + 1;
}

double interaction_element(double d_over_r, int m, int m_prime,
                           bool selection_rule) {
  Mat3::index_of_m(m);
  Mat3::index_of_m(m_prime);
  if (!(d_over_r >= 1.0)) {
    throw std::domain_error("interaction_element: d/R < 1, sphere intersects the substrate");
  }
  if (selection_rule && m != m_prime) return 0.0;
  const double scale = 1.0 / (d_over_r * d_over_r * d_over_r);
  return 4.0 * kPi * parity_sign(m) * scale * (2.0 / 3.0) *
         factorial_weight(m) * factorial_weight(m_prime);
}

Mat3 h_matrix(double f_c, double d_over_r, bool selection_rule) {
  if (!(std::abs(f_c) <= 1.0)) {
    throw std::invalid_argument("h_matrix: |f_c| must be <= 1");
  }
  Mat3 h;
  for (int m = -1; m <= 1; ++m) {
    for (int mp = -1; mp <= 1; ++mp) {
      const double a = interaction_element(d_over_r, m, mp, selection_rule);
      double v = f_c * parity_sign(m) * a / (4.0 * kPi);
      if (m == mp) v += 1.0 / 3.0;
      h.at_m(m, mp) = v;
    }
  }
  return h;
}

void sym_eigen3(const Mat3& a_in, std::array<double, 3>& values, Mat3& vectors) {
  double a[3][3];
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = a_in.at(i, j);
  }

  double frob2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) frob2 += a[i][j] * a[i][j];
  }

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) off2 += 2.0 * a[p][q] * a[p][q];
    }
    if (off2 <= 1e-30 * frob2 || off2 == 0.0) break;

    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double phi = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        const double c = std::cos(phi);
        const double s = std::sin(phi);

        const double app = a[p][p];
        const double aqq = a[q][q];
        const double apq = a[p][q];
        a[p][p] = c * c * app + s * s * aqq - 2.0 * s * c * apq;
        a[q][q] = s * s * app + c * c * aqq + 2.0 * s * c * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < 3; ++r) {
          if (r != p && r != q) {
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = a[p][r] = c * arp - s * arq;
            a[r][q] = a[q][r] = s * arp + c * arq;
          }
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = c * vrp - s * vrq;
          v[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i][i] < a[j][j]; });
  for (int k = 0; k < 3; ++k) {
    values[static_cast<std::size_t>(k)] = a[order[static_cast<std::size_t>(k)]]
                                           [order[static_cast<std::size_t>(k)]];
    for (int r = 0; r < 3; ++r) {
      vectors.at(r, k) = v[r][order[static_cast<std::size_t>(k)]];
    }
  }
}

SpectralModes eigenmodes(const Mat3& h) {
  if (!h.symmetric(1e-12)) {
    throw std::invalid_argument("eigenmodes: H must be symmetric (real f_c)");
  }

  std::array<double, 3> n{};
  Mat3 u;
  sym_eigen3(h, n, u);

  SpectralModes modes;
  modes.valid = true;

  // Per-direction weights C_s = U_{ms}^2; eigenvalues that coincide are
  // merged (only the summed weight of a degenerate subspace is basis
  // independent) and negligible weights dropped.
  const double merge_tol = 1e-12;
  for (int m : {0, 1}) {
    const int row = Mat3::index_of_m(m);
    const int degeneracy = m == 0 ? 1 : 2;
    int s = 0;
    while (s < 3) {
      double n_s = n[static_cast<std::size_t>(s)];
      double weight = 0.0;
      int t = s;
      while (t < 3 &&
             std::abs(n[static_cast<std::size_t>(t)] - n_s) <=
                 merge_tol * std::max(1.0, std::abs(n_s))) {
        const double c = u.at(row, t);
        weight += c * c;
        ++t;
      }
      if (weight > 1e-14) {
        modes.entries.push_back(ModeEntry{m, n_s, weight, degeneracy});
        if (!(n_s > 0.0 && n_s < 1.0)) modes.valid = false;
      }
      s = t;
    }
  }
  return modes;
}

SpectralModes spectral_modes(double f_c, double d_over_r, bool selection_rule) {
  SpectralModes modes = eigenmodes(h_matrix(f_c, d_over_r, selection_rule));
  modes.f_c = f_c;
  modes.d_over_r = d_over_r;
  return modes;
}

double dos_u_direction(const SpectralModes& modes, int m, double u, double eta) {
  if (!(eta > 0.0)) {
    throw std::invalid_argument("dos_u: eta must be > 0");
  }
  Mat3::index_of_m(m);
  double rho = 0.0;
  for (const ModeEntry& e : modes.entries) {
    if (e.m != std::abs(m)) continue;
    const double du = u - e.n;
    rho += e.weight * (eta / (du * du + eta * eta)) / kPi;
  }
  return rho;
}

double dos_u_total(const SpectralModes& modes, double u, double eta) {
  if (!(eta > 0.0)) {
    throw std::invalid_argument("dos_u: eta must be > 0");
  }
  double rho = 0.0;
  for (const ModeEntry& e : modes.entries) {
    const double du = u - e.n;
    rho += e.degeneracy * e.weight * (eta / (du * du + eta * eta)) / kPi;
  }
  return rho;
}

CVec3 solve_response(const Mat3& h, std::complex<double> u, const CVec3& g) {
  // (u I - H) x = g by Gaussian elimination with partial pivoting.
  std::complex<double> m[3][4];
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[i][j] = (i == j ? u : 0.0) - h.at(i, j);
      scale = std::max(scale, std::abs(m[i][j]));
    }
    m[i][3] = g[static_cast<std::size_t>(i)];
  }
  const double pivot_tol = 1e-14 * std::max(scale, 1e-300);

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) <= pivot_tol) {
      throw std::domain_error("solve_response: singular system (u on the spectrum of H)");
    }
    if (pivot != col) std::swap(m[pivot], m[col]);
    for (int r = col + 1; r < 3; ++r) {
      const std::complex<double> f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }

  CVec3 x{};
  for (int i = 2; i >= 0; --i) {
    std::complex<double> acc = m[i][3];
    for (int j = i + 1; j < 3; ++j) acc -= m[i][j] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / m[i][i];
  }
  return x;
}

}  // namespace casimir
