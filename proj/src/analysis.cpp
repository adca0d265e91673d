#include "biphoton/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "biphoton/numeric.hpp"

namespace biphoton {

namespace {

void check_finite(const CorrelationCurve& curve, const char* what) {
  for (double t : curve.tau)
    if (!std::isfinite(t)) throw std::invalid_argument(std::string(what) + ": non-finite grid value");
  for (double r : curve.r_mean)
    if (!std::isfinite(r)) throw std::invalid_argument(std::string(what) + ": non-finite value");
  if (curve.tau.size() != curve.r_mean.size())
    throw std::invalid_argument(std::string(what) + ": grid/value size mismatch");
}

// linear interpolation of the grid position where the deviation crosses level
double cross_at(double t0, double d0, double t1, double d1, double level) {
  return t0 + (d0 - level) * (t1 - t0) / (d0 - d1);
}

// solve A x = g for 3x3 A by Gaussian elimination with partial pivoting;
// false when a pivot degenerates
bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> g,
            std::array<double, 3>& x) {
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double tiny = 1e-14 * (scale + 1.0);
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < tiny) return false;
    std::swap(a[piv], a[col]);
    std::swap(g[piv], g[col]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      g[r] -= f * g[col];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double s = g[r];
    for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

}  // namespace

CurveMetrics curve_metrics(const CorrelationCurve& curve) {
  const std::size_t n = curve.r_mean.size();
  if (n < 5) throw std::invalid_argument("curve_metrics: need at least 5 points");
  check_finite(curve, "curve_metrics");
  const auto& r = curve.r_mean;
  const auto& t = curve.tau;

  const std::size_t m = std::max<std::size_t>(1, n / 10);
  std::vector<double> edges(r.begin(), r.begin() + m);
  edges.insert(edges.end(), r.end() - m, r.end());
  const double baseline = pairwise_sum(edges) / static_cast<double>(edges.size());

  std::size_t idx = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(r[k] - baseline) > std::abs(r[idx] - baseline)) idx = k;
  const double extremum = r[idx];

  CurveMetrics out;
  out.baseline = baseline;
  out.extremum = extremum;
  constexpr double kind_eps = 1e-6;
  out.kind = extremum < baseline - kind_eps ? CurveKind::dip
             : extremum > baseline + kind_eps ? CurveKind::peak
                                              : CurveKind::flat;
  out.visibility =
      baseline > 0.0 ? std::clamp(std::abs(extremum - baseline) / baseline, 0.0, 1.0) : 0.0;

  if (out.kind == CurveKind::flat) return out;

  // walk outward from the extremum until the deviation halves
  const double sign = extremum > baseline ? 1.0 : -1.0;
  const double half = 0.5 * std::abs(extremum - baseline);
  auto dev = [&](std::size_t k) { return (r[k] - baseline) * sign; };
  double left = 0.0, right = 0.0;
  bool has_left = false, has_right = false;
  for (std::size_t k = idx; k + 1 < n; ++k)
    if (dev(k) >= half && dev(k + 1) < half) {
      right = cross_at(t[k], dev(k), t[k + 1], dev(k + 1), half);
      has_right = true;
      break;
    }
  for (std::size_t k = idx; k > 0; --k)
    if (dev(k) >= half && dev(k - 1) < half) {
      left = cross_at(t[k], dev(k), t[k - 1], dev(k - 1), half);
      has_left = true;
      break;
    }
  out.fwhm = (has_left && has_right) ? right - left : 0.0;
  return out;
}

FitResult fit_gaussian_envelope(const CorrelationCurve& curve) {
  const std::size_t n = curve.r_mean.size();
  if (n < 8) throw std::invalid_argument("fit_gaussian_envelope: need at least 8 points");
  check_finite(curve, "fit_gaussian_envelope");

  const CurveMetrics m = curve_metrics(curve);
  const double a0 = m.extremum - m.baseline;
  if (std::abs(a0) < 1e-9)
    throw DegenerateCurveError("fit_gaussian_envelope: curve is flat, no envelope to fit");

  // fit in a rescaled delay variable to keep the normal equations conditioned
  double scale = std::max(std::abs(curve.tau.front()), std::abs(curve.tau.back()));
  if (!(scale > 0.0)) scale = 1.0;
  std::vector<double> t2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = curve.tau[k] / scale;
    t2[k] = u * u;
  }
  const auto& y = curve.r_mean;

  double b = m.baseline;
  double a = a0;
  const double fw = m.fwhm / scale;
  double c = fw > 0.0 ? 4.0 * std::log(2.0) / (fw * fw) : 16.0;

  auto sse_of = [&](double b_, double a_, double c_) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double res = y[k] - (b_ + a_ * std::exp(-c_ * t2[k]));
      s += res * res;
    }
    return s;
  };

  double sse = sse_of(b, a, c);
  double lambda = 1e-3;
  bool converged = false;
  int iterations = 0;

  while (iterations < 100 && !converged) {
    ++iterations;
    std::array<std::array<double, 3>, 3> jtj{};
    std::array<double, 3> jtr{};
    for (std::size_t k = 0; k < n; ++k) {
      const double e = std::exp(-c * t2[k]);
      const double res = y[k] - (b + a * e);
      const std::array<double, 3> j{1.0, e, -a * t2[k] * e};
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) jtj[p][q] += j[p] * j[q];
        jtr[p] += j[p] * res;
      }
    }
    for (int p = 0; p < 3; ++p) jtj[p][p] += lambda;

    std::array<double, 3> step{};
    if (!solve3(jtj, jtr, step)) break;  // singular normal equations

    const double nb = b + step[0], na = a + step[1], nc = c + step[2];
    const double nsse = sse_of(nb, na, nc);
    if (nsse <= sse) {
      const double step_norm = std::sqrt(step[0] * step[0] + step[1] * step[1] + step[2] * step[2]);
      const double param_norm = std::sqrt(b * b + a * a + c * c);
      b = nb;
      a = na;
      c = nc;
      sse = nsse;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (step_norm <= 1e-10 * (param_norm + 1e-30)) converged = true;
    } else {
      lambda *= 10.0;
      if (lambda > 1e15) break;  // stuck in a flat direction
    }
  }

  FitResult out;
  out.baseline = b;
  out.amplitude = a;
  out.rate = c / (scale * scale);
  out.rms_residual = std::sqrt(sse / static_cast<double>(n));
  out.converged = converged;
  out.iterations = iterations;
  return out;
}

}  // namespace biphoton
