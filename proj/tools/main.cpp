#include <iostream>

#include <CLI11.hpp>

#include "casimir/errors.hpp"
#include "casimir/version.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "casimir: nonretarded sphere-substrate Casimir interaction in the "
      "dipolar spectral representation"};
  argv = app.ensure_utf8(argv);
  app.set_version_flag("--version", casimir::kVersion);
  app.set_config("--config", "", "flat key=value configuration file")
      ->envname("CASIMIR_CONFIG");

  casimir::cli::PhysicsOptions phys;
  casimir::cli::SweepOptions sweep;
  casimir::cli::DosOptions dos;
  casimir::cli::FigureOptions figure;

  // Shared options live on the app so they double as flat config-file keys;
  // subcommands reach them through fallthrough.
  app.add_option("--sphere", phys.sphere, "K | Au | drude:<wp_eV>,<gamma>");
  app.add_option("--substrate", phys.substrate,
                 "tio2 | sapphire | perfect | vacuum | eps:<value>");
  app.add_option("--ambient-eps", phys.ambient_eps,
                 "ambient permittivity (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--radius-nm", phys.radius_nm, "sphere radius R in nm")
      ->check(CLI::PositiveNumber);
  app.add_option("--z-nm", phys.z_nm, "surface-to-substrate gap z in nm")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--z-over-r", phys.z_over_r, "gap in units of the radius")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--quad-tol", phys.quad_tol,
                 "relative quadrature tolerance (default 1e-8)")
      ->check(CLI::Range(1e-15, 1e-2));
  app.add_option("--omega-max", phys.omega_max,
                 "energy-integral cutoff in units of omega_p (default 50)")
      ->check(CLI::Range(10.0, 1e9));
  app.add_flag("--tail-correction,!--no-tail-correction", phys.tail_correction,
               "add the fitted 1/omega^2 tail beyond the cutoff (default on)");
  app.add_option("--max-subdivisions", phys.max_subdivisions,
                 "quadrature subdivision budget (default 2000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--normalization", phys.normalization, "unity | verbatim")
      ->check(CLI::IsMember({"unity", "verbatim"}));
  app.add_option("--force-method", phys.force_method, "fd | analytic")
      ->check(CLI::IsMember({"fd", "analytic"}));
  app.add_flag("--literal-interaction", phys.literal_interaction,
               "evaluate the printed interaction matrix without the axial "
               "selection rule (diagnostic)");
  app.add_option("--out", phys.out, "output path, or - for stdout (default)");

  app.add_option("--variable", sweep.variable, "sweep variable: z | z_over_r | R");
  app.add_option("--from", sweep.from, "sweep start");
  app.add_option("--to", sweep.to, "sweep end");
  app.add_option("--points", sweep.points, "sweep grid points (>= 2)")
      ->check(CLI::Range(2, 1000000));
  app.add_option("--spacing", sweep.spacing, "linear | log (default linear)")
      ->check(CLI::IsMember({"linear", "log"}));

  app.add_option("--omega-max-eV", dos.omega_max_ev,
                 "dos grid upper edge in eV (default 2 omega_p)")
      ->check(CLI::PositiveNumber);
  app.add_option("--omega-points", dos.omega_points,
                 "dos grid points (default 2000)")
      ->check(CLI::Range(2, 10000000));

  CLI::App* cmd_eval =
      app.add_subcommand("eval", "single-point energy and force (JSON)");
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "parameter sweep (CSV: x,U_eV,F_eV_per_nm,F_pN,valid)");
  CLI::App* cmd_dos = app.add_subcommand(
      "dos", "density-of-states difference profile (CSV: omega_eV,rho_sp,rho_s,diff)");
  CLI::App* cmd_figure =
      app.add_subcommand("figure", "emit the CSV data sets behind figures 1-4");
  cmd_figure->add_option("n", figure.n, "figure number (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  cmd_figure->add_option("--out-dir", figure.out_dir,
                         "directory for figN_<sphere>_<substrate>.csv files");
  for (CLI::App* sub : {cmd_eval, cmd_sweep, cmd_dos, cmd_figure}) {
    sub->fallthrough();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_eval->parsed()) {
      return casimir::cli::cmd_eval(phys, std::cout, std::cerr);
    }
    if (cmd_sweep->parsed()) {
      return casimir::cli::cmd_sweep(phys, sweep, std::cout, std::cerr);
    }
    if (cmd_dos->parsed()) {
      return casimir::cli::cmd_dos(phys, dos, std::cout, std::cerr);
    }
    if (cmd_figure->parsed()) {
      return casimir::cli::cmd_figure(phys, figure, std::cerr);
    }
  } catch (const casimir::BreakdownError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
