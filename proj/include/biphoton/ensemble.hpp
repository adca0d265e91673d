#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "biphoton/model.hpp"

namespace biphoton {

/// Gaussian detuning density of width sigma, hard-truncated at
/// +-truncation*sigma.
struct GaussianSpectrum {
  double sigma = 1e9;      // Hz
  double truncation = 3.0; // in units of sigma
};

/// Two-sided band filter: keeps |delta_f| within width/2 of center, with both
/// signs of the detuning equally likely.
struct BandPassSpectrum {
  double center = 1e9;  // Hz
  double width = 1e7;   // Hz
};

using Spectrum = std::variant<GaussianSpectrum, BandPassSpectrum>;

struct MonteCarloPlan {
  std::size_t n = 100000;
  std::uint64_t seed = 0;
};

/// Deterministic grid rule: equally spaced nodes weighted by the spectral
/// density, end nodes at half weight (trapezoid), normalized to sum 1.
struct QuadraturePlan {
  std::size_t nodes = 2001;  // odd, >= 3
};

using SamplingPlan = std::variant<MonteCarloPlan, QuadraturePlan>;

/// Draw or enumerate the detuning ensemble. Monte Carlo samples are keyed on
/// (seed, index), so sample i is reproducible in isolation; quadrature grids
/// come out exactly +-symmetric (for a band-pass spectrum the rule places
/// `nodes` nodes on the positive band and mirrors them, 2*nodes in total).
std::vector<PairSample> sample_detunings(const Spectrum& spectrum, const SamplingPlan& plan);

/// Which of the two indistinguishable pairings to keep.
enum class Term { ab, ba };

/// Ensemble averages of the two port intensities with both pairings summed
/// and the total normalized per pairing. The sine fringes of the two pairings
/// cancel identically, so this is (1, 1) for every tau.
std::pair<double, double> mean_port_intensities(const PhaseConfig& cfg, const Spectrum& spectrum,
                                                const SamplingPlan& plan, double tau);

/// Ensemble averages of the port intensities when only one pairing
/// contributes. The fringe survives near tau = 0 and washes out with delay.
std::pair<double, double> single_term_intensity(Term term, const PhaseConfig& cfg,
                                                const Spectrum& spectrum, const SamplingPlan& plan,
                                                double tau);

}  // namespace biphoton
