// Command-line front end: equilibrium solving, vortex simulation,
// bound-state reconstruction, beam propagation and the double-slit demo.
//
// Exit codes: 0 success, 2 invalid configuration, 3 convergence failure,
// 4 runtime abort (collision during integration).

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "stieltjes/equilibrium.hpp"
#include "stieltjes/io.hpp"
#include "stieltjes/log.hpp"
#include "stieltjes/orthopoly.hpp"
#include "stieltjes/paraxial.hpp"
#include "stieltjes/qhj.hpp"
#include "stieltjes/vortex.hpp"

namespace {

using namespace stieltjes;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitAbort = 4;

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "best_residual=" << io::format_double(e.best_residual()) << "\n";
    return kExitConvergence;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file: " + path);
  return out;
}

struct EquilibriumArgs {
  std::string family = "hermite";
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_re = 1.0;
  double gamma_im = 0.0;
  double tol = 1e-12;
  std::string field_json;
  int restarts = 20;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_equilibrium(const EquilibriumArgs& args) {
  const Complex gamma{args.gamma_re, args.gamma_im};
  SolveOptions options;
  options.tolerance = args.tol;

  RationalField field;
  std::optional<orthopoly::PolynomialSpec> spec;
  if (args.family == "custom") {
    if (args.field_json.empty())
      throw ParameterError("custom family requires --field-json");
    field = io::read_field_json(args.field_json);
  } else if (args.family == "hermite" || args.family == "laguerre" ||
             args.family == "jacobi") {
    orthopoly::Family fam = args.family == "hermite" ? orthopoly::Family::hermite
                            : args.family == "laguerre"
                                ? orthopoly::Family::laguerre
                                : orthopoly::Family::jacobi;
    spec = orthopoly::PolynomialSpec{fam, args.n, args.alpha, args.beta};
    // Scaling the background with gamma keeps the classical roots as the
    // equilibrium for any nonzero strength (gamma covariance).
    field = gamma * field_for(*spec);
  } else {
    throw ParameterError("unknown family: " + args.family);
  }

  ChargeConfiguration config;
  try {
    config = solve_equilibrium(field, args.n, gamma, std::nullopt, options);
  } catch (const ConvergenceError& original) {
    // A constant background admits no equilibrium for N >= 2; fall back to
    // the multi-start search so the report carries the best residual found.
    if (field.poles.empty() && field.linear == Complex{0.0, 0.0}) {
      SearchOptions search;
      search.restarts = args.restarts;
      search.seed = args.seed;
      const SearchResult result =
          constant_background_search(args.n, field.constant, gamma, search);
      const Eigen::VectorXcd residuals = equilibrium_residual(result.config);
      std::ostringstream csv;
      io::write_positions_csv(csv, result.config.positions, residuals);
      if (!args.out.empty()) open_output(args.out) << csv.str();
      std::cout << "max_residual=" << io::format_double(result.residual_inf) << "\n";
      if (result.residual_inf > options.tolerance)
        throw ConvergenceError("no equilibrium in a constant background (search floor)",
                               result.residual_inf);
      return kExitOk;
    }
    throw original;
  }

  const Eigen::VectorXcd residuals = equilibrium_residual(config);
  std::ostringstream csv;
  io::write_positions_csv(csv, config.positions, residuals);
  if (!args.out.empty()) {
    open_output(args.out) << csv.str();
  }

  const double max_residual = residuals.cwiseAbs().maxCoeff();
  std::cout << "max_residual=" << io::format_double(max_residual) << "\n";
  if (spec) {
    const Eigen::VectorXd oracle = orthopoly::roots(*spec);
    double deviation = 0.0;
    for (int j = 0; j < args.n; ++j)
      deviation = std::max(deviation, std::abs(config.positions[j] - Complex{oracle[j], 0.0}));
    std::cout << "oracle_deviation=" << io::format_double(deviation) << "\n";
  }
  if (args.out.empty()) std::cout << csv.str();
  return kExitOk;
}

struct VortexArgs {
  std::string config;
  std::string out;
};

int cmd_vortex_sim(const VortexArgs& args) {
  const io::SimulationConfig config = io::read_simulation_config(args.config);
  validate(config.system);

  vortex::IntegrationOptions options;
  options.output_stride = config.output_stride;
  options.allow_complex_strength = config.allow_complex_strength;
  const vortex::Trajectory trajectory =
      vortex::integrate(config.system, config.t_end, config.dt, options);

  std::ostringstream csv;
  io::write_trajectory_csv(csv, trajectory);
  if (!args.out.empty())
    open_output(args.out) << csv.str();
  else
    std::cout << csv.str();

  double impulse_drift = 0.0;
  double max_displacement = 0.0;
  for (std::size_t s = 0; s < trajectory.times.size(); ++s) {
    impulse_drift = std::max(impulse_drift,
                             std::abs(trajectory.impulses[s] - trajectory.impulses[0]));
    for (Eigen::Index a = 0; a < config.system.positions.size(); ++a)
      max_displacement =
          std::max(max_displacement,
                   std::abs(trajectory.states[s][a] - trajectory.states[0][a]));
  }
  std::cout << "samples=" << trajectory.times.size() << "\n";
  std::cout << "impulse_drift=" << io::format_double(impulse_drift) << "\n";
  std::cout << "max_displacement=" << io::format_double(max_displacement) << "\n";

  if (trajectory.status == vortex::TrajectoryStatus::collision_abort) {
    std::cerr << "error: " << trajectory.diagnostic << "\n";
    return kExitAbort;
  }
  return kExitOk;
}

struct QhjArgs {
  int n = 0;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  std::string out;
};

int cmd_qhj(const QhjArgs& args) {
  qhj::QuantumProblem problem{args.mass, args.omega, args.hbar, args.n};
  const qhj::BoundState state = qhj::solve_bound_state(problem);

  // Riccati residual on the standard grid, skipping disks around poles.
  const double scale = std::sqrt(args.hbar / (args.mass * args.omega));
  const double extent = 6.0 * scale;
  const double exclusion = 0.1 * scale;
  const int samples = 2401;
  double max_residual = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x = -extent + 2.0 * extent * s / (samples - 1);
    bool near_pole = false;
    for (Eigen::Index kdx = 0; kdx < state.poles.size(); ++kdx)
      if (std::abs(x - state.poles[kdx]) < exclusion) near_pole = true;
    if (near_pole) continue;
    max_residual = std::max(
        max_residual,
        std::abs(qhj::riccati_residual(state.momentum, problem, state.energy, x)));
  }

  nlohmann::json result{
      {"level", args.n},
      {"hbar", args.hbar},
      {"mass", args.mass},
      {"omega", args.omega},
      {"energy", state.energy},
      {"poles", nlohmann::json::array()},
      {"pole_strength", io::to_json(state.momentum.pole_strength)},
      {"smooth_linear", io::to_json(state.momentum.smooth_part.linear)},
      {"max_riccati_residual", max_residual},
      {"grid", {{"extent", extent}, {"samples", samples}, {"pole_exclusion", exclusion}}}};
  for (Eigen::Index j = 0; j < state.poles.size(); ++j)
    result["poles"].push_back(state.poles[j]);

  const std::string text = result.dump(2) + "\n";
  if (!args.out.empty())
    open_output(args.out) << text;
  else
    std::cout << text;
  std::cout << "energy=" << io::format_double(state.energy) << "\n";
  std::cout << "max_riccati_residual=" << io::format_double(max_residual) << "\n";
  return kExitOk;
}

struct PropagateArgs {
  std::string mode = "paraxial";
  std::string input;
  double dz = 0.0;
  int steps = 1;
  std::string out;
};

int cmd_propagate(const PropagateArgs& args) {
  if (args.steps < 1) throw ParameterError("--steps must be >= 1");
  paraxial::BeamField field = io::read_beam_field(args.input);
  const double norm_before = paraxial::l2_norm(field);
  for (int s = 0; s < args.steps; ++s) {
    if (args.mode == "paraxial")
      field = paraxial::paraxial_propagate(field, args.dz);
    else if (args.mode == "helmholtz")
      field = paraxial::helmholtz_propagate(field, args.dz);
    else
      throw ParameterError("mode must be paraxial or helmholtz");
  }
  const double norm_after = paraxial::l2_norm(field);
  io::write_beam_field(args.out, field);
  std::cout << "norm_before=" << io::format_double(norm_before) << "\n";
  std::cout << "norm_after=" << io::format_double(norm_after) << "\n";
  std::cout << "norm_drift=" << io::format_double(std::abs(norm_after - norm_before))
            << "\n";
  return kExitOk;
}

struct DoubleSlitArgs {
  double wavelength = 0.0;
  double separation = 0.0;
  double slit_width = 0.0;
  double distance = 0.0;
  double screen_extent = 0.0;
  int samples = 1024;
  std::string out;
};

int cmd_double_slit(const DoubleSlitArgs& args) {
  paraxial::DoubleSlitGeometry geometry;
  geometry.wavelength = args.wavelength;
  geometry.separation = args.separation;
  geometry.slit_width = args.slit_width;
  geometry.distance = args.distance;
  geometry.samples = args.samples;
  geometry.screen_extent =
      args.screen_extent > 0.0
          ? args.screen_extent
          : 10.0 * args.wavelength * args.distance / args.separation;

  const paraxial::IntensityProfile profile = paraxial::double_slit(geometry);
  std::ostringstream csv;
  io::write_intensity_csv(csv, profile);
  if (!args.out.empty())
    open_output(args.out) << csv.str();
  else
    std::cout << csv.str();
  std::cout << "fringe_spacing=" << io::format_double(profile.fringe_spacing) << "\n";
  return kExitOk;
}

struct MakeFieldArgs {
  std::string kind = "gaussian";
  int nx = 512;
  int ny = 512;
  double dx = 1.0;
  double dy = 1.0;
  double k = 1.0;
  double w0 = 16.0;
  double value_re = 1.0;
  double value_im = 0.0;
  double z = 0.0;
  std::string out;
};

int cmd_make_field(const MakeFieldArgs& args) {
  paraxial::BeamField field;
  if (args.kind == "gaussian")
    field = paraxial::make_gaussian(args.nx, args.ny, args.dx, args.dy, args.k,
                                    args.w0);
  else if (args.kind == "constant")
    field = paraxial::make_constant(args.nx, args.ny, args.dx, args.dy, args.k,
                                    Complex{args.value_re, args.value_im});
  else
    throw ParameterError("kind must be gaussian or constant");
  field.z = args.z;
  io::write_beam_field(args.out, field);
  std::cout << "wrote " << args.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes equilibria, point vortices and paraxial waves"};
  app.set_version_flag("--version", "stieltjes 0.1.0");
  app.require_subcommand(0, 1);

  EquilibriumArgs eq;
  auto* eq_cmd = app.add_subcommand(
      "equilibrium", "Solve the charge equilibrium for a background field");
  eq_cmd->add_option("--family", eq.family, "hermite|laguerre|jacobi|custom");
  eq_cmd->add_option("--n", eq.n, "number of charges")->required();
  eq_cmd->add_option("--alpha", eq.alpha, "family parameter alpha");
  eq_cmd->add_option("--beta", eq.beta, "family parameter beta");
  eq_cmd->add_option("--gamma-re", eq.gamma_re, "Re of the charge strength");
  eq_cmd->add_option("--gamma-im", eq.gamma_im, "Im of the charge strength");
  eq_cmd->add_option("--tol", eq.tol, "residual tolerance");
  eq_cmd->add_option("--field-json", eq.field_json, "field file for --family custom");
  eq_cmd->add_option("--restarts", eq.restarts, "multi-start restarts (constant field)");
  eq_cmd->add_option("--seed", eq.seed, "seed for multi-start randomization");
  eq_cmd->add_option("--out", eq.out, "positions CSV output path");

  VortexArgs vx;
  auto* vx_cmd = app.add_subcommand("vortex-sim", "Integrate a point-vortex system");
  vx_cmd->add_option("--config", vx.config, "JSON run configuration")->required();
  vx_cmd->add_option("--out", vx.out, "trajectory CSV output path");

  QhjArgs qh;
  auto* qh_cmd = app.add_subcommand(
      "qhj", "Reconstruct a harmonic-oscillator bound state from charge poles");
  qh_cmd->add_option("--n", qh.n, "quantum level")->required();
  qh_cmd->add_option("--hbar", qh.hbar, "Planck constant");
  qh_cmd->add_option("--mass", qh.mass, "particle mass");
  qh_cmd->add_option("--omega", qh.omega, "oscillator frequency");
  qh_cmd->add_option("--out", qh.out, "JSON output path");

  PropagateArgs pr;
  auto* pr_cmd = app.add_subcommand("propagate", "Propagate a sampled beam field");
  pr_cmd->add_option("--mode", pr.mode, "paraxial|helmholtz");
  pr_cmd->add_option("--input", pr.input, "beam field input path")->required();
  pr_cmd->add_option("--dz", pr.dz, "axial step")->required();
  pr_cmd->add_option("--steps", pr.steps, "number of steps");
  pr_cmd->add_option("--out", pr.out, "beam field output path")->required();

  DoubleSlitArgs ds;
  auto* ds_cmd = app.add_subcommand("double-slit", "Far-field double-slit intensity");
  ds_cmd->add_option("--wavelength", ds.wavelength, "wavelength")->required();
  ds_cmd->add_option("--separation", ds.separation, "slit separation d")->required();
  ds_cmd->add_option("--slit-width", ds.slit_width, "slit width a")->required();
  ds_cmd->add_option("--distance", ds.distance, "screen distance L")->required();
  ds_cmd->add_option("--screen-extent", ds.screen_extent,
                     "screen window (default 10 fringes)");
  ds_cmd->add_option("--samples", ds.samples, "screen samples");
  ds_cmd->add_option("--out", ds.out, "intensity CSV output path");

  MakeFieldArgs mf;
  auto* mf_cmd = app.add_subcommand("make-field", "Write a sampled beam field");
  mf_cmd->add_option("--kind", mf.kind, "gaussian|constant");
  mf_cmd->add_option("--nx", mf.nx, "grid size in x");
  mf_cmd->add_option("--ny", mf.ny, "grid size in y");
  mf_cmd->add_option("--dx", mf.dx, "grid spacing in x");
  mf_cmd->add_option("--dy", mf.dy, "grid spacing in y");
  mf_cmd->add_option("--k", mf.k, "carrier wavenumber");
  mf_cmd->add_option("--w0", mf.w0, "gaussian waist");
  mf_cmd->add_option("--value-re", mf.value_re, "constant value, real part");
  mf_cmd->add_option("--value-im", mf.value_im, "constant value, imag part");
  mf_cmd->add_option("--z", mf.z, "axial position");
  mf_cmd->add_option("--out", mf.out, "beam field output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (app.got_subcommand(eq_cmd)) return run_guarded([&] { return cmd_equilibrium(eq); });
  if (app.got_subcommand(vx_cmd)) return run_guarded([&] { return cmd_vortex_sim(vx); });
  if (app.got_subcommand(qh_cmd)) return run_guarded([&] { return cmd_qhj(qh); });
  if (app.got_subcommand(pr_cmd)) return run_guarded([&] { return cmd_propagate(pr); });
  if (app.got_subcommand(ds_cmd)) return run_guarded([&] { return cmd_double_slit(ds); });
  if (app.got_subcommand(mf_cmd)) return run_guarded([&] { return cmd_make_field(mf); });

  std::cout << app.help();
  return kExitOk;
}
