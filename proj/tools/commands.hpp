#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace casimir::cli {

/// Options shared by every subcommand; all of them are flat `key=value`
/// config-file keys as well (flags win over the file).
struct PhysicsOptions {
  std::string sphere;     // K | Au | drude:<wp_eV>,<gamma>
  std::string substrate;  // tio2 | sapphire | perfect | vacuum | eps:<value>
  double ambient_eps = 1.0;
  std::optional<double> radius_nm;
  std::optional<double> z_nm;
  std::optional<double> z_over_r;
  double quad_tol = 1e-8;
  double omega_max = 50.0;  // units of omega_p
  bool tail_correction = true;
  int max_subdivisions = 2000;
  std::string normalization = "unity";  // unity | verbatim
  std::string force_method = "fd";      // fd | analytic
  bool literal_interaction = false;
  std::string out = "-";
};

struct SweepOptions {
  std::string variable;  // z | z_over_r | R
  std::optional<double> from;
  std::optional<double> to;
  int points = 0;
  std::string spacing = "linear";  // linear | log
};

struct DosOptions {
  std::optional<double> omega_max_ev;  // default 2 * omega_p
  int omega_points = 2000;
};

struct FigureOptions {
  int n = 0;
  std::string out_dir = ".";
};

/// Exit codes: 0 success, 2 invalid input, 3 dipolar breakdown (single-point
/// commands only; sweeps degrade per row instead).
int cmd_eval(const PhysicsOptions& phys, std::ostream& out, std::ostream& err);
int cmd_sweep(const PhysicsOptions& phys, const SweepOptions& sweep,
              std::ostream& out, std::ostream& err);
int cmd_dos(const PhysicsOptions& phys, const DosOptions& dos,
            std::ostream& out, std::ostream& err);
int cmd_figure(const PhysicsOptions& phys, const FigureOptions& figure,
               std::ostream& err);

}  // namespace casimir::cli
