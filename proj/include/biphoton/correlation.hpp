#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biphoton/ensemble.hpp"
#include "biphoton/model.hpp"

namespace biphoton {

/// Provenance of a curve, carried into the CSV header.
struct CurveMeta {
  std::string method;  // "quad", "mc" or "analytic"
  PhaseConfig phase{};
  std::optional<Spectrum> spectrum;
  std::optional<SamplingPlan> plan;
  std::string axis = "tau";  // "tau" or "xi"
};

/// A coincidence curve over a strictly increasing grid. r_mean stays in
/// [0, 1]; r_stderr is zero everywhere except Monte Carlo output.
struct CorrelationCurve {
  std::vector<double> tau;  // grid values; the axis name lives in meta.axis
  std::vector<double> r_mean;
  std::vector<double> r_stderr;
  CurveMeta meta{};
};

/// Coincidence rate of a single spectral sample,
/// R = i_c * i_d = cos^2(zeta - xi - 2*Delta), in [0, 1].
double pair_coincidence(const PhaseConfig& cfg, double delta_f, double tau);

/// Ensemble-averaged coincidence over a delay grid. Monte Carlo fills
/// r_stderr with the standard error of the per-sample mean.
CorrelationCurve ensemble_coincidence(const PhaseConfig& cfg, const Spectrum& spectrum,
                                      const SamplingPlan& plan,
                                      const std::vector<double>& tau_grid);

/// Closed form of the Gaussian-ensemble average (untruncated):
/// 1/2 + 1/2 cos(2 (zeta - xi)) exp(-8 sigma^2 tau^2), with the exponent
/// picking up (2*pi)^2 under Convention::si.
double analytic_coincidence(const PhaseConfig& cfg, double sigma, double tau);

/// Coincidence versus the control phase xi at a fixed delay, evaluated from
/// the closed form. Axis of the returned curve is "xi".
CorrelationCurve xi_sweep(double zeta, double sigma, const std::vector<double>& xi_grid,
                          double tau, Convention convention = Convention::paper);

/// Ensemble coincidence with a band-pass spectrum: a beat at 4*center (or
/// its 2*pi-scaled equivalent) under a sinc envelope set by the width.
CorrelationCurve filtered_coincidence(const PhaseConfig& cfg, const BandPassSpectrum& band,
                                      const SamplingPlan& plan,
                                      const std::vector<double>& tau_grid);

/// N-photon projection fringe (1 + cos(n*phi)) / 2. Rejects n = 0.
double noon_correlation(unsigned n, double phi);

}  // namespace biphoton
