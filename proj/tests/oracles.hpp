#pragma once

// Reference computations kept deliberately independent of the library
// internals: explicit component arithmetic, textbook integration rules,
// closed forms evaluated on their own.

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// [[1, i], [i, 1]] / sqrt(2) applied with explicit real/imag arithmetic
inline std::pair<std::complex<double>, std::complex<double>> splitter_matrix(
    std::complex<double> a, std::complex<double> b) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::complex<double> o1{s * (a.real() - b.imag()), s * (a.imag() + b.real())};
  const std::complex<double> o2{s * (b.real() - a.imag()), s * (a.real() + b.imag())};
  return {o1, o2};
}

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / (2.0 * panels);
  double s = f(a) + f(b);
  for (int k = 1; k < 2 * panels; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// mean of cos^2(zeta - xi - 2 delta tau) under a Gaussian density truncated
// at +-trunc sigma, via Simpson on numerator and mass
inline double truncated_gaussian_mean(double sigma, double trunc, double xi, double zeta,
                                      double tau, int panels = 20000) {
  const double a = -trunc * sigma, b = trunc * sigma;
  auto density = [&](double d) { return std::exp(-0.5 * (d / sigma) * (d / sigma)); };
  auto f = [&](double d) {
    const double c = std::cos(zeta - xi - 2.0 * d * tau);
    return density(d) * c * c;
  };
  return simpson(f, a, b, panels) / simpson(density, a, b, panels);
}

// standard deviation of a normal hard-truncated at +-a sigma
inline double truncated_normal_std(double sigma, double a) {
  const double phi = std::exp(-0.5 * a * a) / std::sqrt(2.0 * pi);
  const double mass = std::erf(a / std::sqrt(2.0));  // 2 Phi(a) - 1
  return sigma * std::sqrt(1.0 - 2.0 * a * phi / mass);
}

// flat band of width w mirrored around +-center: mean of sin^2(2 delta tau)
inline double band_beat(double center, double width, double tau) {
  const double x = 2.0 * width * tau;
  const double envelope = x == 0.0 ? 1.0 : std::sin(x) / x;
  return 0.5 - 0.5 * std::cos(4.0 * center * tau) * envelope;
}

// (1 + Re z^n) / 2 with z^n built by repeated multiplication
inline double noon_by_powers(unsigned n, double phi) {
  const std::complex<double> z = std::polar(1.0, phi);
  std::complex<double> w{1.0, 0.0};
  for (unsigned k = 0; k < n; ++k) w *= z;
  return 0.5 * (1.0 + w.real());
}

// plain left-to-right weighted mean, independent of the library reduction
template <typename Samples, typename F>
double naive_weighted_mean(const Samples& samples, F&& f) {
  double acc = 0.0;
  for (const auto& s : samples) acc += s.weight * f(s.delta_f);
  return acc;
}

}  // namespace oracle
