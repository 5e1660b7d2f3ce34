#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "casimir/dos.hpp"
#include "casimir/errors.hpp"
#include "casimir/peaks.hpp"
#include "casimir/quadrature.hpp"

using namespace casimir;

namespace {

std::vector<double> negate(const std::vector<double>& ys) {
  std::vector<double> out(ys.size());
  std::transform(ys.begin(), ys.end(), out.begin(), [](double y) { return -y; });
  return out;
}

// Peaks of the signal that actually rise above zero; a valley between two
// positive lobes is not a negative peak.
std::vector<Peak> positive_peaks(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  auto peaks = find_peaks(xs, ys);
  std::erase_if(peaks, [](const Peak& p) { return !(p.y > 0.0); });
  return peaks;
}

std::vector<Peak> negative_peaks(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  auto peaks = find_peaks(xs, negate(ys));
  std::erase_if(peaks, [](const Peak& p) { return !(p.y > 0.0); });
  for (Peak& p : peaks) p.y = -p.y;
  return peaks;
}

std::size_t argmax(const std::vector<double>& ys) {
  return static_cast<std::size_t>(
      std::max_element(ys.begin(), ys.end()) - ys.begin());
}

double grid_step(const std::vector<double>& grid) { return grid[1] - grid[0]; }

}  // namespace

TEST_CASE("isolated-sphere dos peaks at the dipole resonance") {
  const SpectralModes iso = spectral_modes(0.0, 2.0);
  const double wp = 8.55;
  const double gamma = 0.0126;
  const std::vector<double> grid = default_omega_grid(wp);
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rho[i] = dos_omega_total(iso, grid[i], wp, gamma);
  }
  const double peak_omega = grid[argmax(rho)];
  CHECK(std::abs(peak_omega - wp / std::sqrt(3.0)) <= grid_step(grid));
}

TEST_CASE("dos in omega is nonnegative for valid modes") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> fc_dist(-1.0, 0.0);
  std::uniform_real_distribution<double> dr_dist(1.5, 10.0);
  std::uniform_real_distribution<double> w_dist(0.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    const SpectralModes modes = spectral_modes(fc_dist(rng), dr_dist(rng));
    if (!modes.valid) continue;
    CHECK(dos_omega_total(modes, w_dist(rng), 8.55, 0.0126) >= 0.0);
  }
}

TEST_CASE("each mode integrates to about one state in unity normalization") {
  SpectralModes single;
  single.entries = {ModeEntry{0, 1.0 / 3.0, 1.0, 1}};
  single.valid = true;
  const double wp = 8.55;
  const double gamma = 0.0126;
  const double cutoff = 50.0 * wp;
  const double ws = std::sqrt(1.0 / 3.0) * wp;
  const std::vector<double> bp = {0.0,          ws - 1.0, ws - 0.05, ws,
                                  ws + 0.05,    ws + 1.0, 2.0 * wp,  cutoff};
  const auto f = [&](double w) {
    return dos_omega_direction(single, 0, w, wp, gamma);
  };
  const QuadOutcome out = integrate_adaptive(f, bp, 1e-9, 2000);
  CHECK(out.value == doctest::Approx(1.0).epsilon(1e-2));

  // Verbatim normalization integrates to omega_p instead.
  const auto f_verbatim = [&](double w) {
    return dos_omega_direction(single, 0, w, wp, gamma, Normalization::Verbatim);
  };
  const QuadOutcome out_v = integrate_adaptive(f_verbatim, bp, 1e-9, 2000);
  CHECK(out_v.value == doctest::Approx(wp).epsilon(1e-2));
}

TEST_CASE("dos rejects invalid modes and bad parameters") {
  const SpectralModes broken = spectral_modes(-1.0, 1.0);
  CHECK_THROWS_AS((void)dos_omega_total(broken, 1.0, 8.55, 0.0126),
                  BreakdownError);
  const SpectralModes ok = spectral_modes(0.0, 2.0);
  CHECK_THROWS_AS((void)dos_omega_total(ok, 1.0, 8.55, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)dos_omega_total(ok, -1.0, 8.55, 0.0126),
                  std::invalid_argument);
}

TEST_CASE("null coupling gives an identically zero difference") {
  const Environment env(presets::gold(), presets::vacuum());
  const Geometry geom(10.0, 10.0);
  const std::vector<double> grid = default_omega_grid(8.55, 500);
  const DOSProfile profile = dos_difference(env, geom, grid, 0.0126);
  for (std::size_t i = 0; i < profile.diff.size(); ++i) {
    CHECK(profile.diff[i] == 0.0);
    CHECK(profile.rho_sp[i] == profile.rho_s[i]);
  }
}

TEST_CASE("difference profile structure for Au over a perfect conductor") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const Geometry geom(10.0, 10.0);  // z/R = 1
  const std::vector<double> grid = default_omega_grid(8.55);
  const DOSProfile p = dos_difference(env, geom, grid, 0.0126);

  // Negative extremum sits at the isolated-sphere resonance.
  const std::size_t imin = argmax(negate(p.diff));
  CHECK(std::abs(grid[imin] - 4.9363448015713) <= grid_step(grid));

  // Positive structure below it.
  double max_below = 0.0;
  for (std::size_t i = 0; i < imin; ++i) max_below = std::max(max_below, p.diff[i]);
  CHECK(max_below > 0.0);
}

TEST_CASE("difference dies off at large separation") {
  const Environment env(presets::potassium(), presets::sapphire());
  const std::vector<double> grid = default_omega_grid(3.8, 800);
  const auto max_abs = [&](double z_over_r) {
    const Geometry geom(10.0, 10.0 * z_over_r);
    const DOSProfile p = dos_difference(env, geom, grid, 0.105);
    double m = 0.0;
    for (double d : p.diff) m = std::max(m, std::abs(d));
    return m;
  };
  CHECK(max_abs(4.0) * 10.0 < max_abs(0.5));
  // The amplitude follows the (d/R)^-3 mode shift once the shift is small
  // against the linewidth, so a 1e-3 suppression of the z/R = 0.5 level needs
  // (d/R)^3 > 1000 x the near-contact value, i.e. z/R beyond ~15.
  CHECK(max_abs(10.0) < 1e-2 * max_abs(0.5));
  CHECK(max_abs(20.0) < 1e-3 * max_abs(0.5));
}

TEST_CASE("isolated dos is independent of substrate and separation") {
  const std::vector<double> grid = default_omega_grid(8.55, 400);
  const Environment over_perfect(presets::gold(), presets::perfect_conductor());
  const Environment over_tio2(presets::gold(), presets::titania());
  const DOSProfile a = dos_difference(over_perfect, Geometry(10.0, 10.0), grid, 0.0126);
  const DOSProfile b = dos_difference(over_tio2, Geometry(10.0, 30.0), grid, 0.0126);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a.rho_s[i] == b.rho_s[i]);
  }
}

TEST_CASE("state count is conserved up to finite-width tails") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const Geometry geom(10.0, 10.0);
  const double wp = 8.55;
  const double gamma = 0.0126;
  const double cutoff = 50.0 * wp;
  const SpectralModes coupled = spectral_modes(-1.0, geom.d_over_r());
  const SpectralModes iso = spectral_modes(0.0, geom.d_over_r());

  std::vector<double> bp = {0.0, cutoff};
  for (const SpectralModes* modes : {&coupled, &iso}) {
    for (const ModeEntry& e : modes->entries) {
      const double ws = std::sqrt(e.n) * wp;
      for (double w : {ws - 0.5, ws, ws + 0.5}) {
        if (w > 0 && w < cutoff) bp.push_back(w);
      }
    }
  }
  std::sort(bp.begin(), bp.end());

  const auto rho_s = [&](double w) { return dos_omega_total(iso, w, wp, gamma); };
  const auto rho_diff = [&](double w) {
    return dos_omega_total(coupled, w, wp, gamma) - rho_s(w);
  };
  const double total_s = integrate_adaptive(rho_s, bp, 1e-9, 2000).value;
  const double total_diff = integrate_adaptive(rho_diff, bp, 1e-9, 2000).value;
  CHECK(std::abs(total_diff) <= 0.02 * total_s);
}

TEST_CASE("profile tables skip breakdown separations with a flag") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const std::vector<double> ratios = {0.0, 0.5, 1.0, 2.0, 4.0};
  const std::vector<double> grid = default_omega_grid(8.55);
  const auto table = sample_dos_profiles(env, ratios, grid);
  REQUIRE(table.size() == 5);
  CHECK(!table[0].valid);  // contact: n_0 = -1/3
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i].valid);
    CHECK(table[i].profile.omegas.size() == grid.size());
  }
}

TEST_CASE("Au over a perfect conductor shows two positive peaks and one negative") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const std::vector<double> grid = default_omega_grid(8.55);
  const auto table = sample_dos_profiles(env, std::vector<double>{1.0}, grid);
  REQUIRE(table.size() == 1);
  REQUIRE(table[0].valid);
  const DOSProfile& p = table[0].profile;

  const auto positive = positive_peaks(p.omegas, p.diff);
  const auto negative = negative_peaks(p.omegas, p.diff);
  REQUIRE(positive.size() == 2);
  REQUIRE(negative.size() == 1);

  // Perpendicular mode below the parallel one, both below the isolated line.
  const double w_perp = std::sqrt(0.25) * 8.55;
  const double w_par = std::sqrt(7.0 / 24.0) * 8.55;
  CHECK(std::abs(positive[0].x - w_perp) <= grid_step(grid));
  CHECK(std::abs(positive[1].x - w_par) <= grid_step(grid));
  CHECK(positive[0].x < positive[1].x);
  CHECK(std::abs(negative[0].x - 4.9363448015713) <= grid_step(grid));

  // The parallel peak carries twice the degeneracy of the perpendicular one.
  CHECK(positive[1].y > positive[0].y);
}

TEST_CASE("K peaks merge within the large damping width") {
  const Environment env(presets::potassium(), presets::sapphire());
  const std::vector<double> grid = default_omega_grid(3.8);
  const auto table = sample_dos_profiles(env, std::vector<double>{1.0}, grid);
  REQUIRE(table[0].valid);
  const DOSProfile& p = table[0].profile;
  CHECK(positive_peaks(p.omegas, p.diff).size() == 1);
  CHECK(negative_peaks(p.omegas, p.diff).size() == 1);
}

TEST_CASE("positive peaks blue-shift toward the isolated resonance") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const std::vector<double> ratios = {0.5, 1.0, 2.0, 4.0};
  const std::vector<double> grid = default_omega_grid(8.55);
  const auto table = sample_dos_profiles(env, ratios, grid);

  double prev = 0.0;
  std::size_t prev_neg = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    REQUIRE(table[i].valid);
    const DOSProfile& p = table[i].profile;
    const double pos = p.omegas[argmax(p.diff)];
    CHECK(pos > prev);
    CHECK(pos < 4.9363448015713);
    prev = pos;

    // The negative peak does not move between successive separations.
    const std::size_t neg = argmax(negate(p.diff));
    if (i > 0) CHECK((neg > prev_neg ? neg - prev_neg : prev_neg - neg) <= 1);
    prev_neg = neg;

    // Peak strength decays with separation.
    if (i > 0) {
      double m_here = 0.0;
      double m_prev = 0.0;
      for (double d : p.diff) m_here = std::max(m_here, std::abs(d));
      for (double d : table[i - 1].profile.diff) m_prev = std::max(m_prev, std::abs(d));
      CHECK(m_here < m_prev);
    }
  }
}

TEST_CASE("profile csv format") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const std::vector<double> grid = {0.0, 4.0, 8.0};
  const DOSProfile p = dos_difference(env, Geometry(10.0, 10.0), grid, 0.0126);
  std::ostringstream os;
  write_profile_csv(os, p);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "omega_eV,rho_sp,rho_s,diff");
  std::getline(in, line);
  CHECK(line.substr(0, 15) == "0.00000000e+00,");
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("grid validation") {
  const Environment env(presets::gold(), presets::perfect_conductor());
  const Geometry geom(10.0, 10.0);
  CHECK_THROWS_AS(
      (void)dos_difference(env, geom, std::vector<double>{1.0}, 0.0126),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)dos_difference(env, geom, std::vector<double>{2.0, 1.0}, 0.0126),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)dos_difference(env, geom, std::vector<double>{-1.0, 1.0}, 0.0126),
      std::invalid_argument);
  // Breakdown propagates.
  CHECK_THROWS_AS((void)dos_difference(env, Geometry(10.0, 0.0),
                                       std::vector<double>{0.0, 1.0}, 0.0126),
                  BreakdownError);
}
