#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "biphoton/numeric.hpp"

namespace biphoton {

using ComplexAmplitude = std::complex<double>;

/// How a frequency detuning times a delay turns into phase: `paper` uses
/// Delta = delta_f * tau directly as an angle, `si` treats delta_f as an
/// ordinary frequency in Hz, Delta = 2*pi * delta_f * tau.
enum class Convention { paper, si };

/// Static phase knobs of the interferometer. xi acts on the signal path ahead
/// of the splitter, zeta is the idler phase relative to the signal.
struct PhaseConfig {
  double xi = 0.0;
  double zeta = pi / 2.0;
  Convention convention = Convention::paper;
};

/// One spectral sample of the pair ensemble: the signal sits at +delta_f from
/// band center and the idler at -delta_f. Weights sum to 1 over a draw.
struct PairSample {
  double delta_f = 0.0;  // Hz
  double weight = 0.0;
};

/// Output amplitudes of the two indistinguishable pairings: (e_c, e_d) with
/// the signal entering port a, (e_c2, e_d2) with the roles swapped.
struct FieldQuad {
  ComplexAmplitude e_c{};
  ComplexAmplitude e_d{};
  ComplexAmplitude e_c2{};
  ComplexAmplitude e_d2{};
};

struct IntensityQuad {
  double i_c = 0.0;
  double i_d = 0.0;
  double i_c2 = 0.0;
  double i_d2 = 0.0;
};

/// Lossless 50/50 splitter: (a, b) -> ((a + i b)/sqrt2, (i a + b)/sqrt2).
inline std::pair<ComplexAmplitude, ComplexAmplitude> bs_transform(ComplexAmplitude a,
                                                                  ComplexAmplitude b) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  const ComplexAmplitude j{0.0, 1.0};
  return {(a + j * b) * inv_sqrt2, (j * a + b) * inv_sqrt2};
}

/// Phase a pair member detuned by delta_f accumulates over the delay tau.
inline double detuning_phase(double delta_f, double tau, Convention convention) {
  const double d = delta_f * tau;
  return convention == Convention::si ? two_pi * d : d;
}

/// Port amplitudes of both pairings for one spectral sample. Each pairing
/// feeds the splitter a unit-modulus column; the common propagation phase is
/// dropped since only relative phases survive in intensities.
inline FieldQuad output_fields(const PhaseConfig& cfg, double delta_f, double tau) {
  const double delta = detuning_phase(delta_f, tau, cfg.convention);
  const ComplexAmplitude in_a = std::polar(1.0, cfg.xi);
  const ComplexAmplitude in_b = std::polar(1.0, cfg.zeta - 2.0 * delta);
  const ComplexAmplitude in_a2 = std::polar(1.0, cfg.zeta - cfg.xi - 2.0 * delta);
  const ComplexAmplitude in_b2{1.0, 0.0};
  const auto [c, d] = bs_transform(in_a, in_b);
  const auto [c2, d2] = bs_transform(in_a2, in_b2);
  return {c, d, c2, d2};
}

/// Port intensities for one spectral sample, in units of the single-photon
/// intensity. With theta = zeta - xi - 2*Delta these are 1 -+ sin(theta) for
/// the first pairing and 1 +- sin(theta) for the second.
inline IntensityQuad output_intensities(const PhaseConfig& cfg, double delta_f, double tau) {
  const double delta = detuning_phase(delta_f, tau, cfg.convention);
  const double s = std::sin(cfg.zeta - cfg.xi - 2.0 * delta);
  return {1.0 - s, 1.0 + s, 1.0 + s, 1.0 - s};
}

enum class ZetaSign { plus, minus };

/// Relative phase bookkeeping at zero delay for xi in {0, pi/2} and
/// zeta = +-pi/2: returns (reflected, transmitted), each the phase the a-path
/// contribution leads the b-path contribution by at that output port, in
/// [0, 2*pi). pi means destructive, 0 means constructive.
inline std::pair<double, double> phase_ledger(double xi, ZetaSign zeta_sign) {
  const bool xi_zero = std::abs(xi) <= 1e-12;
  const bool xi_quarter = std::abs(xi - pi / 2.0) <= 1e-12;
  if (!xi_zero && !xi_quarter)
    throw std::invalid_argument("phase_ledger: xi must be 0 or pi/2");
  const double zeta = (zeta_sign == ZetaSign::plus ? 0.5 : -0.5) * pi;
  const ComplexAmplitude j{0.0, 1.0};
  const ComplexAmplitude from_a = std::polar(1.0, xi);
  const ComplexAmplitude from_b = std::polar(1.0, zeta);
  // at one port b is reflected (picks up the splitter's i), at the other a is
  const double reflected = wrap_angle(std::arg(from_a) - std::arg(j * from_b));
  const double transmitted = wrap_angle(std::arg(j * from_a) - std::arg(from_b));
  return {reflected, transmitted};
}

}  // namespace biphoton
