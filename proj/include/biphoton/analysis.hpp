#pragma once

#include <stdexcept>

#include "biphoton/correlation.hpp"

namespace biphoton {

enum class CurveKind { dip, peak, flat };

/// Shape summary of a coincidence curve. baseline comes from the outer 10% of
/// points on each side, the extremum is the point farthest from it, fwhm is
/// the full width at half of the extremum's deviation (0 when the half level
/// is never crossed), visibility = |extremum - baseline| / baseline.
struct CurveMetrics {
  double baseline = 0.0;
  double extremum = 0.0;
  double visibility = 0.0;
  double fwhm = 0.0;
  CurveKind kind = CurveKind::flat;
};

/// Fit of R(tau) ~= baseline + amplitude * exp(-rate * tau^2) by damped
/// Gauss-Newton least squares.
struct FitResult {
  double baseline = 0.0;
  double amplitude = 0.0;
  double rate = 0.0;  // 1 / s^2
  double rms_residual = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// A curve with no envelope to fit (flat within 1e-9).
struct DegenerateCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requires at least 5 finite points.
CurveMetrics curve_metrics(const CorrelationCurve& curve);

/// Least-squares Gaussian envelope fit. Requires at least 8 points; initial
/// guesses come from curve_metrics. Converges when the relative step drops
/// below 1e-10; gives up (converged = false, best iterate kept) on singular
/// normal equations or after 100 iterations. Throws DegenerateCurveError when
/// the curve is flat.
FitResult fit_gaussian_envelope(const CorrelationCurve& curve);

}  // namespace biphoton
