#include "biphoton/cli.hpp"

#include <chrono>
#include <cstdio>
#include <optional>

#include <CLI11.hpp>

#include "biphoton/analysis.hpp"
#include "biphoton/correlation.hpp"
#include "biphoton/csv.hpp"
#include "biphoton/ensemble.hpp"

namespace biphoton::cli {

namespace {

void add_phase_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--xi", cfg.xi, "signal-path control phase [rad]");
  cmd->add_option("--zeta", cfg.zeta, "idler phase relative to the signal [rad]");
  cmd->add_option("--convention", cfg.convention, "detuning-to-phase convention")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Convention>{{"paper", Convention::paper}, {"si", Convention::si}},
          CLI::ignore_case));
}

void add_sampling_flags(CLI::App* cmd, RunConfig& cfg, bool allow_analytic) {
  std::map<std::string, Method> methods{{"quad", Method::quad}, {"mc", Method::mc}};
  if (allow_analytic) methods.emplace("analytic", Method::analytic);
  cmd->add_option("--method", cfg.method, "evaluation method")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  cmd->add_option("--nodes", cfg.nodes, "quadrature nodes (odd)");
  cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count");
  cmd->add_option("--seed", cfg.seed, "Monte Carlo seed");
}

void add_tau_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tau-min", cfg.tau_min, "first delay [s]");
  cmd->add_option("--tau-max", cfg.tau_max, "last delay [s]");
  cmd->add_option("--steps", cfg.steps, "grid points");
}

void validate(const RunConfig& cfg) {
  const bool sweeps_tau = cfg.command == "sweep-tau" || cfg.command == "filtered";
  const bool uses_sampling = sweeps_tau || cfg.command == "sweep-xi";

  if (cfg.command != "fit" && cfg.steps < 2) throw UsageError("--steps must be at least 2");
  if (sweeps_tau && !(cfg.tau_min < cfg.tau_max))
    throw UsageError("--tau-min must be below --tau-max");
  if (uses_sampling) {
    if (!(cfg.sigma > 0.0)) throw UsageError("--sigma must be positive");
    if (cfg.method == Method::quad && (cfg.nodes < 3 || cfg.nodes % 2 == 0))
      throw UsageError("--nodes must be odd and at least 3");
    if (cfg.method == Method::mc && cfg.samples < 1)
      throw UsageError("--samples must be at least 1");
    if (!(cfg.truncation > 0.0)) throw UsageError("--truncation must be positive");
  }
  if (cfg.command == "filtered") {
    if (!(cfg.filter_center > 0.0)) throw UsageError("--center must be positive");
    if (!(cfg.filter_width > 0.0)) throw UsageError("--width must be positive");
  }
  if (cfg.command == "sweep-xi" && !(cfg.xi_min < cfg.xi_max))
    throw UsageError("--xi-min must be below --xi-max");
  if (cfg.command == "noon") {
    if (cfg.noon_n < 1) throw UsageError("--n must be at least 1");
    if (!(cfg.phi_min < cfg.phi_max)) throw UsageError("--phi-min must be below --phi-max");
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"phase-controlled two-photon interference simulator"};
  app.require_subcommand(1);

  auto* sweep_tau = app.add_subcommand("sweep-tau", "coincidence vs delay for a Gaussian ensemble");
  add_phase_flags(sweep_tau, cfg);
  sweep_tau->add_option("--sigma", cfg.sigma, "Gaussian detuning width [Hz]");
  sweep_tau->add_option("--truncation", cfg.truncation, "Gaussian support half-width [sigma]");
  add_tau_flags(sweep_tau, cfg);
  add_sampling_flags(sweep_tau, cfg, true);
  sweep_tau->add_option("-o,--output", cfg.output, "output CSV path")->required();

  auto* sweep_xi = app.add_subcommand("sweep-xi", "coincidence vs control phase at fixed delay");
  sweep_xi->add_option("--zeta", cfg.zeta, "idler phase relative to the signal [rad]");
  sweep_xi->add_option("--convention", cfg.convention, "detuning-to-phase convention")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Convention>{{"paper", Convention::paper}, {"si", Convention::si}},
          CLI::ignore_case));
  sweep_xi->add_option("--sigma", cfg.sigma, "Gaussian detuning width [Hz]");
  sweep_xi->add_option("--truncation", cfg.truncation, "Gaussian support half-width [sigma]");
  sweep_xi->add_option("--tau", cfg.tau_at, "fixed delay [s]");
  sweep_xi->add_option("--xi-min", cfg.xi_min, "first control phase [rad]");
  sweep_xi->add_option("--xi-max", cfg.xi_max, "last control phase [rad]");
  sweep_xi->add_option("--steps", cfg.steps, "grid points");
  add_sampling_flags(sweep_xi, cfg, true);
  sweep_xi->add_option("-o,--output", cfg.output, "output CSV path")->required();

  auto* filtered = app.add_subcommand("filtered", "coincidence vs delay behind a band-pass filter");
  add_phase_flags(filtered, cfg);
  filtered->add_option("--center", cfg.filter_center, "band center [Hz]");
  filtered->add_option("--width", cfg.filter_width, "band width [Hz]");
  add_tau_flags(filtered, cfg);
  add_sampling_flags(filtered, cfg, false);
  filtered->add_option("-o,--output", cfg.output, "output CSV path")->required();

  auto* noon = app.add_subcommand("noon", "n-photon projection fringe");
  noon->add_option("--n", cfg.noon_n, "photon number");
  noon->add_option("--phi-min", cfg.phi_min, "first phase [rad]");
  noon->add_option("--phi-max", cfg.phi_max, "last phase [rad]");
  noon->add_option("--steps", cfg.steps, "grid points");
  noon->add_option("-o,--output", cfg.output, "output CSV path")->required();

  auto* fit = app.add_subcommand("fit", "fit a Gaussian envelope to a coincidence CSV");
  fit->add_option("-i,--input", cfg.input, "input CSV path")->required();
  fit->add_option("-o,--output", cfg.output, "optional fit-parameter CSV path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  validate(cfg);
  return cfg;
}

namespace {

const char* method_name(Method m) {
  switch (m) {
    case Method::quad: return "quad";
    case Method::mc: return "mc";
    default: return "analytic";
  }
}

SamplingPlan make_plan(const RunConfig& cfg) {
  if (cfg.method == Method::mc) return MonteCarloPlan{cfg.samples, cfg.seed};
  return QuadraturePlan{cfg.nodes};
}

CorrelationCurve analytic_curve(const RunConfig& cfg, const std::vector<double>& grid) {
  const PhaseConfig phase{cfg.xi, cfg.zeta, cfg.convention};
  CorrelationCurve curve;
  curve.tau = grid;
  curve.r_stderr.assign(grid.size(), 0.0);
  curve.r_mean.reserve(grid.size());
  for (double t : grid) curve.r_mean.push_back(analytic_coincidence(phase, cfg.sigma, t));
  curve.meta = {"analytic", phase, GaussianSpectrum{cfg.sigma, cfg.truncation}, std::nullopt,
                "tau"};
  return curve;
}

CorrelationCurve xi_curve(const RunConfig& cfg, const std::vector<double>& grid) {
  if (cfg.method == Method::analytic)
    return xi_sweep(cfg.zeta, cfg.sigma, grid, cfg.tau_at, cfg.convention);
  const Spectrum spectrum = GaussianSpectrum{cfg.sigma, cfg.truncation};
  const SamplingPlan plan = make_plan(cfg);
  CorrelationCurve curve;
  curve.tau = grid;
  curve.r_mean.reserve(grid.size());
  curve.r_stderr.reserve(grid.size());
  for (double x : grid) {
    const PhaseConfig phase{x, cfg.zeta, cfg.convention};
    const auto point = ensemble_coincidence(phase, spectrum, plan, {cfg.tau_at});
    curve.r_mean.push_back(point.r_mean.front());
    curve.r_stderr.push_back(point.r_stderr.front());
  }
  curve.meta = {method_name(cfg.method), PhaseConfig{0.0, cfg.zeta, cfg.convention}, spectrum,
                make_plan(cfg), "xi"};
  return curve;
}

}  // namespace

int run(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const PhaseConfig phase{cfg.xi, cfg.zeta, cfg.convention};
  std::size_t points = 0;
  std::string method = method_name(cfg.method);

  if (cfg.command == "sweep-tau") {
    const auto grid = linspace(cfg.tau_min, cfg.tau_max, cfg.steps);
    const auto curve = cfg.method == Method::analytic
                           ? analytic_curve(cfg, grid)
                           : ensemble_coincidence(phase, GaussianSpectrum{cfg.sigma, cfg.truncation},
                                                  make_plan(cfg), grid);
    write_curve_csv(curve, cfg.output);
    points = grid.size();
  } else if (cfg.command == "sweep-xi") {
    const auto curve = xi_curve(cfg, linspace(cfg.xi_min, cfg.xi_max, cfg.steps));
    write_curve_csv(curve, cfg.output);
    points = cfg.steps;
  } else if (cfg.command == "filtered") {
    const auto grid = linspace(cfg.tau_min, cfg.tau_max, cfg.steps);
    const auto curve = filtered_coincidence(
        phase, BandPassSpectrum{cfg.filter_center, cfg.filter_width}, make_plan(cfg), grid);
    write_curve_csv(curve, cfg.output);
    points = grid.size();
  } else if (cfg.command == "noon") {
    const auto grid = linspace(cfg.phi_min, cfg.phi_max, cfg.steps);
    std::vector<double> values;
    values.reserve(grid.size());
    for (double p : grid) values.push_back(noon_correlation(cfg.noon_n, p));
    write_noon_csv(cfg.noon_n, grid, values, cfg.output);
    points = grid.size();
    method = "exact";
  } else {  // fit
    const auto curve = read_curve_csv(cfg.input);
    const auto fit = fit_gaussian_envelope(curve);
    std::printf("b = %s\n", format_double(fit.baseline).c_str());
    std::printf("a = %s\n", format_double(fit.amplitude).c_str());
    std::printf("c = %s\n", format_double(fit.rate).c_str());
    std::printf("rms_residual = %s\n", format_double(fit.rms_residual).c_str());
    std::printf("converged = %d\n", fit.converged ? 1 : 0);
    std::printf("iterations = %d\n", fit.iterations);
    if (!cfg.output.empty()) write_fit_csv(fit, cfg.output);
    points = curve.tau.size();
    method = "fit";
  }

  const auto ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "%s: %zu points in %.1f ms\n", method.c_str(), points, ms);
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    std::printf("%s", h.text.c_str());
    return 0;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  try {
    return run(cfg);
  } catch (const DegenerateCurveError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace biphoton::cli
