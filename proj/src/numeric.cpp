#include "biphoton/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace biphoton {

double wrap_angle(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo + static_cast<double>(k) * step;
  out.back() = hi;
  return out;
}

std::vector<double> symmetric_grid(double half_width, std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("symmetric_grid: n must be odd and >= 3");
  const std::size_t m = n / 2;
  std::vector<double> out(n);
  out[m] = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    const double v = half_width * (static_cast<double>(j) / static_cast<double>(m));
    out[m + j] = v;
    out[m - j] = -v;
  }
  return out;
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 32) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(mix(seed + kGolden) ^ mix(stream * kGolden + 0x632BE59BD9B4E019ull)) {}

std::uint64_t CounterRng::next_u64() { return mix(base_ + ++counter_ * kGolden); }

double CounterRng::next_unit() {
  // (k + 0.5) * 2^-53 with k in [0, 2^53) stays strictly inside (0, 1)
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double CounterRng::next_normal() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace biphoton
