#include "biphoton/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biphoton/numeric.hpp"

namespace biphoton {

namespace {

void validate(const GaussianSpectrum& g) {
  if (!(g.sigma > 0.0)) throw std::invalid_argument("GaussianSpectrum: sigma must be positive");
  if (!(g.truncation > 0.0))
    throw std::invalid_argument("GaussianSpectrum: truncation must be positive");
}

void validate(const BandPassSpectrum& b) {
  if (!(b.center > 0.0)) throw std::invalid_argument("BandPassSpectrum: center must be positive");
  if (!(b.width > 0.0)) throw std::invalid_argument("BandPassSpectrum: width must be positive");
}

void normalize_weights(std::vector<PairSample>& samples) {
  std::vector<double> w(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) w[k] = samples[k].weight;
  const double total = pairwise_sum(w);
  for (auto& s : samples) s.weight /= total;
}

std::vector<PairSample> quad_gaussian(const GaussianSpectrum& g, std::size_t nodes) {
  const auto xs = symmetric_grid(g.truncation * g.sigma, nodes);
  std::vector<PairSample> out(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double u = xs[k] / g.sigma;
    out[k] = {xs[k], std::exp(-0.5 * u * u)};
  }
  out.front().weight *= 0.5;
  out.back().weight *= 0.5;
  normalize_weights(out);
  return out;
}

std::vector<PairSample> quad_band(const BandPassSpectrum& b, std::size_t nodes) {
  const double lo = std::max(0.0, b.center - 0.5 * b.width);
  const double hi = b.center + 0.5 * b.width;
  const auto xs = linspace(lo, hi, nodes);
  std::vector<PairSample> out(2 * nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    double w = 1.0;
    if (k == 0 || k == nodes - 1) w = 0.5;
    // mirror each positive-band node into the negative band, same weight
    out[nodes + k] = {xs[k], w};
    out[nodes - 1 - k] = {-xs[k], w};
  }
  normalize_weights(out);
  return out;
}

std::vector<PairSample> mc_gaussian(const GaussianSpectrum& g, const MonteCarloPlan& plan) {
  std::vector<PairSample> out(plan.n);
  const double w = 1.0 / static_cast<double>(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i) {
    CounterRng rng(plan.seed, i);
    double z;
    do {
      z = rng.next_normal();
    } while (std::abs(z) > g.truncation);
    out[i] = {z * g.sigma, w};
  }
  return out;
}

std::vector<PairSample> mc_band(const BandPassSpectrum& b, const MonteCarloPlan& plan) {
  const double lo = std::max(0.0, b.center - 0.5 * b.width);
  const double hi = b.center + 0.5 * b.width;
  std::vector<PairSample> out(plan.n);
  const double w = 1.0 / static_cast<double>(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i) {
    CounterRng rng(plan.seed, i);
    const double mag = lo + (hi - lo) * rng.next_unit();
    const double sign = rng.next_unit() < 0.5 ? -1.0 : 1.0;
    out[i] = {sign * mag, w};
  }
  return out;
}

}  // namespace

std::vector<PairSample> sample_detunings(const Spectrum& spectrum, const SamplingPlan& plan) {
  std::visit([](const auto& s) { validate(s); }, spectrum);
  if (const auto* q = std::get_if<QuadraturePlan>(&plan)) {
    if (q->nodes < 3 || q->nodes % 2 == 0)
      throw std::invalid_argument("QuadraturePlan: nodes must be odd and >= 3");
    if (const auto* g = std::get_if<GaussianSpectrum>(&spectrum)) return quad_gaussian(*g, q->nodes);
    return quad_band(std::get<BandPassSpectrum>(spectrum), q->nodes);
  }
  const auto& mc = std::get<MonteCarloPlan>(plan);
  if (mc.n < 1) throw std::invalid_argument("MonteCarloPlan: n must be >= 1");
  if (const auto* g = std::get_if<GaussianSpectrum>(&spectrum)) return mc_gaussian(*g, mc);
  return mc_band(std::get<BandPassSpectrum>(spectrum), mc);
}

namespace {

// weighted per-port means; pick the pair of intensities with `select`
template <typename Select>
std::pair<double, double> averaged_ports(const PhaseConfig& cfg, const Spectrum& spectrum,
                                         const SamplingPlan& plan, double tau, Select select) {
  const auto samples = sample_detunings(spectrum, plan);
  std::vector<double> acc_c(samples.size());
  std::vector<double> acc_d(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto q = output_intensities(cfg, samples[k].delta_f, tau);
    const auto [ic, id] = select(q);
    acc_c[k] = samples[k].weight * ic;
    acc_d[k] = samples[k].weight * id;
  }
  return {pairwise_sum(acc_c), pairwise_sum(acc_d)};
}

}  // namespace

std::pair<double, double> mean_port_intensities(const PhaseConfig& cfg, const Spectrum& spectrum,
                                                const SamplingPlan& plan, double tau) {
  return averaged_ports(cfg, spectrum, plan, tau, [](const IntensityQuad& q) {
    return std::pair{0.5 * (q.i_c + q.i_c2), 0.5 * (q.i_d + q.i_d2)};
  });
}

std::pair<double, double> single_term_intensity(Term term, const PhaseConfig& cfg,
                                                const Spectrum& spectrum, const SamplingPlan& plan,
                                                double tau) {
  if (term == Term::ab)
    return averaged_ports(cfg, spectrum, plan, tau,
                          [](const IntensityQuad& q) { return std::pair{q.i_c, q.i_d}; });
  return averaged_ports(cfg, spectrum, plan, tau,
                        [](const IntensityQuad& q) { return std::pair{q.i_c2, q.i_d2}; });
}

}  // namespace biphoton
