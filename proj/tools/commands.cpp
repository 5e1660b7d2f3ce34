#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "casimir/dos.hpp"
#include "casimir/energy_force.hpp"
#include "casimir/errors.hpp"
#include "casimir/format.hpp"
#include "casimir/materials.hpp"
#include "casimir/spectral.hpp"
#include "casimir/version.hpp"

namespace casimir::cli {

namespace {

using nlohmann::ordered_json;

// --- option resolution -----------------------------------------------------

Material parse_sphere(const std::string& spec) {
  if (auto preset = sphere_preset(spec)) return *preset;
  if (spec.rfind("drude:", 0) == 0) {
    const std::string body = spec.substr(6);
    const auto comma = body.find(',');
    if (comma != std::string::npos) {
      try {
        const double wp = std::stod(body.substr(0, comma));
        const double gamma = std::stod(body.substr(comma + 1));
        return Material::drude(wp, gamma);
      } catch (const std::logic_error&) {
        // fall through to the shared error below
      }
    }
  }
  throw std::invalid_argument(
      "--sphere: expected K, Au or drude:<wp_eV>,<gamma> (got '" + spec + "')");
}

Material parse_substrate(const std::string& spec) {
  if (auto preset = substrate_preset(spec)) return *preset;
  if (spec.rfind("eps:", 0) == 0) {
    try {
      return Material::constant(std::stod(spec.substr(4)));
    } catch (const std::logic_error&) {
    }
  }
  throw std::invalid_argument(
      "--substrate: expected tio2, sapphire, perfect, vacuum or eps:<value> "
      "(got '" + spec + "')");
}

Environment make_environment(const PhysicsOptions& phys) {
  if (phys.sphere.empty()) {
    throw std::invalid_argument("--sphere is required");
  }
  if (phys.substrate.empty()) {
    throw std::invalid_argument("--substrate is required");
  }
  if (!(phys.ambient_eps > 0.0)) {
    throw std::invalid_argument("--ambient-eps: must be > 0");
  }
  return Environment(parse_sphere(phys.sphere), parse_substrate(phys.substrate),
                     Material::constant(phys.ambient_eps));
}

double require_radius(const PhysicsOptions& phys) {
  if (!phys.radius_nm) {
    throw std::invalid_argument("--radius-nm is required for this command");
  }
  if (!(*phys.radius_nm > 0.0)) {
    throw std::invalid_argument("--radius-nm: must be > 0");
  }
  return *phys.radius_nm;
}

// Gap from --z-nm or --z-over-r (exactly one of the two).
double resolve_gap(const PhysicsOptions& phys, double radius_nm) {
  if (phys.z_nm && phys.z_over_r) {
    throw std::invalid_argument("--z-nm and --z-over-r are mutually exclusive");
  }
  if (phys.z_nm) {
    if (!(*phys.z_nm >= 0.0)) throw std::invalid_argument("--z-nm: must be >= 0");
    return *phys.z_nm;
  }
  if (phys.z_over_r) {
    if (!(*phys.z_over_r >= 0.0)) {
      throw std::invalid_argument("--z-over-r: must be >= 0");
    }
    return *phys.z_over_r * radius_nm;
  }
  throw std::invalid_argument("one of --z-nm or --z-over-r is required");
}

QuadratureConfig make_quad(const PhysicsOptions& phys) {
  QuadratureConfig quad;
  quad.rel_tol = phys.quad_tol;
  quad.omega_max = phys.omega_max;
  quad.tail_correction = phys.tail_correction;
  quad.max_subdivisions = phys.max_subdivisions;
  try {
    quad.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--quad-tol/--omega-max: ") + e.what());
  }
  return quad;
}

Normalization parse_normalization(const std::string& name) {
  if (name == "unity") return Normalization::PerModeUnity;
  if (name == "verbatim") return Normalization::Verbatim;
  throw std::invalid_argument("--normalization: expected unity or verbatim (got '" +
                              name + "')");
}

ForceMethod parse_force_method(const std::string& name) {
  if (name == "fd") return ForceMethod::FiniteDifference;
  if (name == "analytic") return ForceMethod::SemiAnalytic;
  throw std::invalid_argument("--force-method: expected fd or analytic (got '" +
                              name + "')");
}

// --- output plumbing -------------------------------------------------------

std::ostream& resolve_out(const std::string& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (path == "-" || path.empty()) return fallback;
  file.open(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("--out: cannot open '" + path + "' for writing");
  }
  return file;
}

std::string iso_timestamp() {
  std::time_t t = 0;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool retardation_war[[maybe_unused]] = false;

// Warn (never error) when the geometry leaves the nonretarded validity range.
bool warn_retardation(std::ostream& err, const Material& sphere,
                      double radius_nm, double max_gap_nm) {
  const double limit = retardation_length_nm(sphere);
  if (radius_nm > limit || max_gap_nm > limit) {
    err << "warning: nonretarded theory assumes R and z below hbar*c/(hbar*omega_p)"
        << " = " << limit << " nm (got R = " << radius_nm << " nm, z up to "
        << max_gap_nm << " nm)\n";
    return true;
  }
  return false;
}

ordered_json material_json(const std::string& spec, const Material& m) {
  ordered_json j;
  j["spec"] = spec;
  switch (m.kind()) {
    case MaterialKind::Drude:
      j["kind"] = "drude";
      j["plasma_energy_eV"] = m.plasma_energy_ev();
      j["damping_ratio"] = m.damping_ratio();
      break;
    case MaterialKind::Constant:
      j["kind"] = "constant";
      j["epsilon"] = m.epsilon();
      break;
    case MaterialKind::PerfectConductor:
      j["kind"] = "perfect_conductor";
      break;
  }
  return j;
}

ordered_json modes_json(const SpectralModes& modes) {
  ordered_json arr = ordered_json::array();
  for (const ModeEntry& e : modes.entries) {
    ordered_json m;
    m["m"] = e.m;
    m["n"] = e.n;
    m["weight"] = e.weight;
    m["degeneracy"] = e.degeneracy;
    arr.push_back(m);
  }
  return arr;
}

// --- sweep helpers ----------------------------------------------------------

std::vector<double> sweep_grid(const SweepOptions& sweep) {
  if (!sweep.from || !sweep.to) {
    throw std::invalid_argument("--from and --to are required for sweep");
  }
  const double from = *sweep.from;
  const double to = *sweep.to;
  if (!(from < to)) throw std::invalid_argument("--from: must be < --to");
  if (sweep.points < 2) throw std::invalid_argument("--points: must be >= 2");
  const bool log_spacing = sweep.spacing == "log";
  if (!log_spacing && sweep.spacing != "linear") {
    throw std::invalid_argument("--spacing: expected linear or log (got '" +
                                sweep.spacing + "')");
  }
  if (log_spacing && !(from > 0.0)) {
    throw std::invalid_argument("--from: log spacing requires from > 0");
  }
  std::vector<double> xs(static_cast<std::size_t>(sweep.points));
  const auto count = static_cast<double>(sweep.points - 1);
  for (int i = 0; i < sweep.points; ++i) {
    const double frac = static_cast<double>(i) / count;
    xs[static_cast<std::size_t>(i)] =
        log_spacing ? from * std::pow(to / from, frac) : from + (to - from) * frac;
  }
  return xs;
}

struct RowOutputs {
  bool valid = false;
  double u = 0.0;
  double f = 0.0;
};

RowOutputs evaluate_row(const Environment& env, const Geometry& geom,
                        const QuadratureConfig& quad, ForceMethod method,
                        Normalization norm, bool selection_rule) {
  RowOutputs row;
  const EnergyResult energy =
      casimir_energy(env, geom, quad, norm, selection_rule);
  if (energy.breakdown) return row;
  const ForceResult force =
      casimir_force(env, geom, quad, method, norm, selection_rule);
  if (force.breakdown) return row;
  row.valid = true;
  row.u = energy.energy;
  row.f = force.force;
  return row;
}

void emit_row(std::ostream& os, double x, const RowOutputs& row) {
  if (row.valid) {
    os << sci9(x) << ',' << sci9(row.u) << ',' << sci9(row.f) << ','
       << sci9(row.f * kPicoNewtonPerEvPerNm) << ",true\n";
  } else {
    os << sci9(x) << ",,,,false\n";
  }
}

// --- figure definitions ------------------------------------------------------

struct PanelMaterial {
  const char* name;
  Material material;
};

std::vector<PanelMaterial> figure_spheres() {
  return {{"K", presets::potassium()}, {"Au", presets::gold()}};
}

std::vector<double> linspace(double from, double to, int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    xs[static_cast<std::size_t>(i)] =
        from + (to - from) * static_cast<double>(i) / (points - 1);
  }
  return xs;
}

std::ofstream open_figure_file(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("--out-dir: cannot open '" + path.string() +
                             "' for writing");
  }
  return file;
}

}  // namespace

int cmd_eval(const PhysicsOptions& phys, std::ostream& out, std::ostream& err) {
  try {
    const Environment env = make_environment(phys);
    const double radius = require_radius(phys);
    const double gap = resolve_gap(phys, radius);
    const Geometry geom(radius, gap);
    const QuadratureConfig quad = make_quad(phys);
    const Normalization norm = parse_normalization(phys.normalization);
    const ForceMethod method = parse_force_method(phys.force_method);
    const bool selection_rule = !phys.literal_interaction;

    const bool warned = warn_retardation(err, env.sphere(), radius, gap);
    const double f_c = contrast_factor(env);
    const SpectralModes modes =
        spectral_modes(f_c, geom.d_over_r(), selection_rule);

    ordered_json rec;
    rec["tool"] = "casimir";
    rec["version"] = kVersion;
    rec["timestamp"] = iso_timestamp();
    ordered_json inputs;
    inputs["sphere"] = material_json(phys.sphere, env.sphere());
    inputs["substrate"] = material_json(phys.substrate, env.substrate());
    inputs["ambient_eps"] = phys.ambient_eps;
    inputs["radius_nm"] = radius;
    inputs["z_nm"] = gap;
    ordered_json jq;
    jq["rel_tol"] = quad.rel_tol;
    jq["omega_max"] = quad.omega_max;
    jq["tail_correction"] = quad.tail_correction;
    jq["max_subdivisions"] = quad.max_subdivisions;
    inputs["quadrature"] = jq;
    inputs["normalization"] = phys.normalization;
    inputs["force_method"] = phys.force_method;
    inputs["selection_rule"] = selection_rule;
    rec["inputs"] = inputs;

    ordered_json outputs;
    outputs["f_c"] = f_c;
    outputs["d_over_R"] = geom.d_over_r();
    outputs["modes"] = modes_json(modes);
    outputs["retardation_warning"] = warned;

    const EnergyResult energy = casimir_energy(env, geom, quad, norm, selection_rule);
    if (energy.breakdown) {
      outputs["valid"] = false;
      outputs["breakdown_n"] = energy.breakdown_n;
      rec["outputs"] = outputs;
      std::ofstream file;
      resolve_out(phys.out, file, out) << rec.dump(2) << '\n';
      err << "error: dipolar approximation breakdown (n = " << energy.breakdown_n
          << " outside (0, 1))\n";
      return 3;
    }
    const ForceResult force =
        casimir_force(env, geom, quad, method, norm, selection_rule);

    outputs["valid"] = true;
    outputs["U_eV"] = energy.energy;
    outputs["U_error_eV"] = energy.estimated_error;
    outputs["F_eV_per_nm"] = force.force;
    outputs["F_pN"] = force.force * kPicoNewtonPerEvPerNm;
    outputs["F_error_eV_per_nm"] = force.estimated_error;
    outputs["force_one_sided"] = force.one_sided;
    rec["outputs"] = outputs;

    std::ofstream file;
    resolve_out(phys.out, file, out) << rec.dump(2) << '\n';
    return 0;
  } catch (const BreakdownError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_sweep(const PhysicsOptions& phys, const SweepOptions& sweep,
              std::ostream& out, std::ostream& err) {
  try {
    const Environment env = make_environment(phys);
    const QuadratureConfig quad = make_quad(phys);
    const Normalization norm = parse_normalization(phys.normalization);
    const ForceMethod method = parse_force_method(phys.force_method);
    const bool selection_rule = !phys.literal_interaction;
    const std::vector<double> xs = sweep_grid(sweep);

    // Geometry binding per grid point.
    enum class Variable { Gap, GapOverRadius, Radius };
    Variable variable;
    if (sweep.variable == "z") {
      variable = Variable::Gap;
    } else if (sweep.variable == "z_over_r") {
      variable = Variable::GapOverRadius;
    } else if (sweep.variable == "R") {
      variable = Variable::Radius;
    } else {
      throw std::invalid_argument("--variable: expected z, z_over_r or R (got '" +
                                  sweep.variable + "')");
    }

    double fixed_radius = 0.0;
    if (variable != Variable::Radius) {
      fixed_radius = require_radius(phys);
    } else {
      if (!phys.z_nm && !phys.z_over_r) {
        throw std::invalid_argument(
            "one of --z-nm or --z-over-r is required for an R sweep");
      }
      if (!(*sweep.from > 0.0)) {
        throw std::invalid_argument("--from: an R sweep requires from > 0");
      }
    }
    if (variable == Variable::Gap && !(*sweep.from >= 0.0)) {
      throw std::invalid_argument("--from: a z sweep requires from >= 0");
    }
    if (variable == Variable::GapOverRadius && !(*sweep.from >= 0.0)) {
      throw std::invalid_argument("--from: a z/R sweep requires from >= 0");
    }

    const auto geometry_at = [&](double x) {
      switch (variable) {
        case Variable::Gap:
          return Geometry(fixed_radius, x);
        case Variable::GapOverRadius:
          return Geometry(fixed_radius, x * fixed_radius);
        case Variable::Radius:
          return Geometry(x, resolve_gap(phys, x));
      }
      throw std::logic_error("unreachable");
    };

    double max_radius = 0.0;
    double max_gap = 0.0;
    for (double x : xs) {
      const Geometry g = geometry_at(x);
      max_radius = std::max(max_radius, g.radius_nm());
      max_gap = std::max(max_gap, g.gap_nm());
    }
    warn_retardation(err, env.sphere(), max_radius, max_gap);

    std::ofstream file;
    std::ostream& os = resolve_out(phys.out, file, out);
    os << "x,U_eV,F_eV_per_nm,F_pN,valid\n";
    for (double x : xs) {
      const RowOutputs row =
          evaluate_row(env, geometry_at(x), quad, method, norm, selection_rule);
      emit_row(os, x, row);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_dos(const PhysicsOptions& phys, const DosOptions& dos,
            std::ostream& out, std::ostream& err) {
  try {
    const Environment env = make_environment(phys);
    if (!env.sphere().is_drude()) {
      throw std::invalid_argument("--sphere: dos requires a Drude sphere");
    }
    double radius = 10.0;  // only z/R enters the modes
    if (phys.radius_nm) radius = require_radius(phys);
    if (!phys.z_nm && !phys.z_over_r) {
      throw std::invalid_argument("one of --z-nm or --z-over-r is required");
    }
    if (phys.z_nm && !phys.radius_nm) {
      throw std::invalid_argument("--radius-nm is required with --z-nm");
    }
    const Geometry geom(radius, resolve_gap(phys, radius));
    const Normalization norm = parse_normalization(phys.normalization);
    const bool selection_rule = !phys.literal_interaction;

    const double wp = env.sphere().plasma_energy_ev();
    const double omega_max = dos.omega_max_ev.value_or(2.0 * wp);
    if (!(omega_max > 0.0)) {
      throw std::invalid_argument("--omega-max-eV: must be > 0");
    }
    if (dos.omega_points < 2) {
      throw std::invalid_argument("--omega-points: must be >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(dos.omega_points));
    for (int i = 0; i < dos.omega_points; ++i) {
      grid[static_cast<std::size_t>(i)] =
          omega_max * static_cast<double>(i) / (dos.omega_points - 1);
    }

    warn_retardation(err, env.sphere(), geom.radius_nm(), geom.gap_nm());
    const DOSProfile profile = dos_difference(
        env, geom, grid, env.sphere().damping_ratio(), norm, selection_rule);

    std::ofstream file;
    write_profile_csv(resolve_out(phys.out, file, out), profile);
    return 0;
  } catch (const BreakdownError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

namespace {

void write_figure_sweep(std::ostream& os, const char* x_name,
                        const Environment& env,
                        const std::vector<double>& xs, bool x_is_ratio,
                        double radius, const QuadratureConfig& quad,
                        ForceMethod method, Normalization norm) {
  os << x_name << ",U_eV,F_eV_per_nm,F_pN,valid\n";
  for (double x : xs) {
    const Geometry geom(radius, x_is_ratio ? x * radius : x);
    emit_row(os, x, evaluate_row(env, geom, quad, method, norm, true));
  }
}

}  // namespace

int cmd_figure(const PhysicsOptions& phys, const FigureOptions& figure,
               std::ostream& err) {
  try {
    if (figure.n < 1 || figure.n > 4) {
      throw std::invalid_argument("figure: n must be 1, 2, 3 or 4");
    }
    const QuadratureConfig quad = make_quad(phys);
    const Normalization norm = parse_normalization(phys.normalization);
    const ForceMethod method = parse_force_method(phys.force_method);

    const std::vector<PanelMaterial> spheres = figure_spheres();
    const std::vector<PanelMaterial> substrates_full = {
        {"sapphire", presets::sapphire()},
        {"tio2", presets::titania()},
        {"perfect", presets::perfect_conductor()}};
    const std::vector<PanelMaterial> substrates_pair = {
        {"sapphire", presets::sapphire()},
        {"perfect", presets::perfect_conductor()}};

    switch (figure.n) {
      case 1: {
        // U vs z/R for {K, Au} x {sapphire, tio2, perfect}, R = 10 nm.
        const std::vector<double> ratios = linspace(0.0, 4.0, 81);
        for (const auto& sphere : spheres) {
          for (const auto& substrate : substrates_full) {
            const Environment env(sphere.material, substrate.material);
            auto file = open_figure_file(
                figure.out_dir, std::string("fig1_") + sphere.name + "_" +
                                    substrate.name + ".csv");
            write_figure_sweep(file, "z_over_R", env, ratios, true, 10.0, quad,
                               method, norm);
          }
        }
        break;
      }
      case 2: {
        // F vs z (0-40 nm) over a perfect conductor, R in {10, 100, 1000} nm.
        const std::vector<double> zs = linspace(0.0, 40.0, 81);
        for (const auto& sphere : spheres) {
          const Environment env(sphere.material, presets::perfect_conductor());
          warn_retardation(err, env.sphere(), 1000.0, 40.0);
          auto file = open_figure_file(
              figure.out_dir,
              std::string("fig2_") + sphere.name + "_perfect.csv");
          file << "z_nm,R_nm,U_eV,F_eV_per_nm,F_pN,valid\n";
          for (double radius : {10.0, 100.0, 1000.0}) {
            for (double z : zs) {
              const RowOutputs row = evaluate_row(env, Geometry(radius, z), quad,
                                                  method, norm, true);
              if (row.valid) {
                file << sci9(z) << ',' << sci9(radius) << ',' << sci9(row.u)
                     << ',' << sci9(row.f) << ','
                     << sci9(row.f * kPicoNewtonPerEvPerNm) << ",true\n";
              } else {
                file << sci9(z) << ',' << sci9(radius) << ",,,,false\n";
              }
            }
          }
        }
        break;
      }
      case 3: {
        // F vs z for R = 10 nm, {K, Au} x {sapphire, perfect}.
        const std::vector<double> zs = linspace(0.0, 40.0, 81);
        for (const auto& sphere : spheres) {
          for (const auto& substrate : substrates_pair) {
            const Environment env(sphere.material, substrate.material);
            auto file = open_figure_file(
                figure.out_dir, std::string("fig3_") + sphere.name + "_" +
                                    substrate.name + ".csv");
            write_figure_sweep(file, "z_nm", env, zs, false, 10.0, quad, method,
                               norm);
          }
        }
        break;
      }
      case 4: {
        // DOS-difference profiles for z/R in {0, 0.5, 1, 2, 4}; contact rows
        // are flagged when the dipolar model breaks down there.
        const std::vector<double> ratios = {0.0, 0.5, 1.0, 2.0, 4.0};
        for (const auto& sphere : spheres) {
          for (const auto& substrate : substrates_pair) {
            const Environment env(sphere.material, substrate.material);
            const std::vector<double> grid =
                default_omega_grid(env.sphere().plasma_energy_ev());
            const auto table = sample_dos_profiles(env, ratios, grid, norm);
            auto file = open_figure_file(
                figure.out_dir, std::string("fig4_") + sphere.name + "_" +
                                    substrate.name + ".csv");
            file << "z_over_R,omega_eV,rho_sp,rho_s,diff,valid\n";
            for (const SeparationProfile& entry : table) {
              if (!entry.valid) {
                file << sci9(entry.z_over_r) << ",,,,,false\n";
                continue;
              }
              const DOSProfile& p = entry.profile;
              for (std::size_t i = 0; i < p.omegas.size(); ++i) {
                file << sci9(entry.z_over_r) << ',' << sci9(p.omegas[i]) << ','
                     << sci9(p.rho_sp[i]) << ',' << sci9(p.rho_s[i]) << ','
                     << sci9(p.diff[i]) << ",true\n";
              }
            }
          }
        }
        break;
      }
      default:
        throw std::logic_error("unreachable");
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace casimir::cli
