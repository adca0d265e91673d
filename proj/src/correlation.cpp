#include "biphoton/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biphoton/numeric.hpp"

namespace biphoton {

namespace {

void check_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": empty grid");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1]))
      throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double pair_coincidence(const PhaseConfig& cfg, double delta_f, double tau) {
  const auto q = output_intensities(cfg, delta_f, tau);
  return q.i_c * q.i_d;  // (1 - s)(1 + s) = cos^2(theta)
}

CorrelationCurve ensemble_coincidence(const PhaseConfig& cfg, const Spectrum& spectrum,
                                      const SamplingPlan& plan,
                                      const std::vector<double>& tau_grid) {
  check_grid(tau_grid, "ensemble_coincidence");
  const auto samples = sample_detunings(spectrum, plan);
  const auto* mc = std::get_if<MonteCarloPlan>(&plan);

  CorrelationCurve curve;
  curve.tau = tau_grid;
  curve.r_mean.resize(tau_grid.size());
  curve.r_stderr.assign(tau_grid.size(), 0.0);
  curve.meta = {mc ? "mc" : "quad", cfg, spectrum, plan, "tau"};

  std::vector<double> buf(samples.size());
  for (std::size_t k = 0; k < tau_grid.size(); ++k) {
    const double tau = tau_grid[k];
    if (mc) {
      const auto n = static_cast<double>(samples.size());
      for (std::size_t j = 0; j < samples.size(); ++j)
        buf[j] = pair_coincidence(cfg, samples[j].delta_f, tau);
      const double mean = pairwise_sum(buf) / n;
      if (samples.size() > 1) {
        for (double& v : buf) {
          const double d = v - mean;
          v = d * d;
        }
        const double var = pairwise_sum(buf) / (n - 1.0);
        curve.r_stderr[k] = std::sqrt(var / n);
      }
      curve.r_mean[k] = clamp01(mean);
    } else {
      for (std::size_t j = 0; j < samples.size(); ++j)
        buf[j] = samples[j].weight * pair_coincidence(cfg, samples[j].delta_f, tau);
      curve.r_mean[k] = clamp01(pairwise_sum(buf));
    }
  }
  return curve;
}

double analytic_coincidence(const PhaseConfig& cfg, double sigma, double tau) {
  if (!(sigma > 0.0)) throw std::invalid_argument("analytic_coincidence: sigma must be positive");
  const double st = sigma * tau;
  const double rate = cfg.convention == Convention::si ? 32.0 * pi * pi : 8.0;
  return 0.5 + 0.5 * std::cos(2.0 * (cfg.zeta - cfg.xi)) * std::exp(-rate * st * st);
}

CorrelationCurve xi_sweep(double zeta, double sigma, const std::vector<double>& xi_grid,
                          double tau, Convention convention) {
  check_grid(xi_grid, "xi_sweep");
  CorrelationCurve curve;
  curve.tau = xi_grid;
  curve.r_mean.resize(xi_grid.size());
  curve.r_stderr.assign(xi_grid.size(), 0.0);
  for (std::size_t k = 0; k < xi_grid.size(); ++k) {
    const PhaseConfig cfg{xi_grid[k], zeta, convention};
    curve.r_mean[k] = clamp01(analytic_coincidence(cfg, sigma, tau));
  }
  curve.meta = {"analytic", PhaseConfig{0.0, zeta, convention},
                GaussianSpectrum{sigma, 0.0}, std::nullopt, "xi"};
  return curve;
}

CorrelationCurve filtered_coincidence(const PhaseConfig& cfg, const BandPassSpectrum& band,
                                      const SamplingPlan& plan,
                                      const std::vector<double>& tau_grid) {
  if (!(band.center > 0.0))
    throw std::invalid_argument("filtered_coincidence: center must be positive");
  return ensemble_coincidence(cfg, Spectrum{band}, plan, tau_grid);
}

double noon_correlation(unsigned n, double phi) {
  if (n == 0) throw std::invalid_argument("noon_correlation: n must be >= 1");
  return 0.5 * (1.0 + std::cos(static_cast<double>(n) * phi));
}

}  // namespace biphoton
