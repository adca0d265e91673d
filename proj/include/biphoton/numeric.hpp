#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace biphoton {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2*pi). Values landing exactly on 2*pi map to 0.
double wrap_angle(double a);

/// n equally spaced values from lo to hi inclusive. Requires n >= 2; the last
/// entry is pinned to hi exactly.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Odd-length grid with an exact 0 at the center and exact +-x node pairing,
/// spanning [-half_width, +half_width].
std::vector<double> symmetric_grid(double half_width, std::size_t n);

/// Deterministic pairwise (recursive halving) reduction. Keeps rounding error
/// near machine precision even for 1e6-element sums, and the result depends
/// only on the element order.
double pairwise_sum(std::span<const double> xs);

/// Counter-based generator: sample i of a given (seed, stream) is addressable
/// directly, so a value does not depend on how many draws preceded it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_unit();    // uniform on (0, 1)
  double next_normal();  // standard normal via Box-Muller

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace biphoton
