#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "biphoton/ensemble.hpp"
#include "biphoton/numeric.hpp"
#include "oracles.hpp"

using namespace biphoton;

namespace {

double weight_total(const std::vector<PairSample>& s) {
  double acc = 0.0;
  for (const auto& p : s) acc += p.weight;
  return acc;
}

}  // namespace

TEST_SUITE("ensemble") {

TEST_CASE("three-node Gaussian rule") {
  const auto s = sample_detunings(GaussianSpectrum{1e9, 3.0}, QuadraturePlan{3});
  REQUIRE(s.size() == 3);
  CHECK(s[0].delta_f == -3e9);
  CHECK(s[1].delta_f == 0.0);
  CHECK(s[2].delta_f == 3e9);
  CHECK(s[1].weight > s[0].weight);
  CHECK(s[1].weight > s[2].weight);
  CHECK(weight_total(s) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Gaussian grid is exactly symmetric") {
  const auto s = sample_detunings(GaussianSpectrum{1e9, 3.0}, QuadraturePlan{2001});
  REQUIRE(s.size() == 2001);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto& mirror = s[s.size() - 1 - k];
    CHECK(s[k].delta_f == -mirror.delta_f);  // bitwise pairing
    CHECK(s[k].weight == mirror.weight);
    CHECK(std::abs(s[k].delta_f) <= 3e9);
    CHECK(s[k].weight > 0.0);
  }
  CHECK(s[1000].delta_f == 0.0);
  CHECK(weight_total(s) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("band-pass rule mirrors the positive band") {
  const BandPassSpectrum band{1e9, 1e7};
  const auto s = sample_detunings(band, QuadraturePlan{501});
  REQUIRE(s.size() == 1002);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto& mirror = s[s.size() - 1 - k];
    CHECK(s[k].delta_f == -mirror.delta_f);
    CHECK(s[k].weight == mirror.weight);
    CHECK(std::abs(std::abs(s[k].delta_f) - band.center) <= 0.5 * band.width + 1e-3);
  }
  CHECK(weight_total(s) == doctest::Approx(1.0).epsilon(1e-12));
  // uniform interior weights, band edges at half weight
  CHECK(s[501].weight == doctest::Approx(0.5 * s[502].weight).epsilon(1e-12));
  CHECK(s[502].weight == doctest::Approx(s[700].weight).epsilon(1e-12));
}

TEST_CASE("band reaching zero is clamped") {
  const auto s = sample_detunings(BandPassSpectrum{4e6, 1e7}, QuadraturePlan{101});
  for (const auto& p : s) CHECK(std::abs(p.delta_f) <= 9e6 + 1.0);
}

TEST_CASE("Monte Carlo draws are reproducible and seed-sensitive") {
  const GaussianSpectrum g{1e9, 3.0};
  const auto a = sample_detunings(g, MonteCarloPlan{512, 42});
  const auto b = sample_detunings(g, MonteCarloPlan{512, 42});
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(PairSample)) == 0);

  const auto c = sample_detunings(g, MonteCarloPlan{512, 43});
  bool any_different = false;
  for (std::size_t k = 0; k < a.size(); ++k) any_different |= a[k].delta_f != c[k].delta_f;
  CHECK(any_different);
}

TEST_CASE("Monte Carlo sample i does not depend on the batch size") {
  const GaussianSpectrum g{1e9, 3.0};
  const auto small = sample_detunings(g, MonteCarloPlan{100, 7});
  const auto large = sample_detunings(g, MonteCarloPlan{10000, 7});
  for (std::size_t k = 0; k < small.size(); ++k)
    CHECK(small[k].delta_f == large[k].delta_f);
}

TEST_CASE("Monte Carlo respects the hard truncation") {
  const double sigma = 1e9, trunc = 3.0;
  const auto s = sample_detunings(GaussianSpectrum{sigma, trunc}, MonteCarloPlan{200000, 3});
  double acc = 0.0, acc2 = 0.0;
  for (const auto& p : s) {
    CHECK(std::abs(p.delta_f) <= trunc * sigma);
    acc += p.delta_f;
    acc2 += p.delta_f * p.delta_f;
  }
  const double n = static_cast<double>(s.size());
  const double mean = acc / n;
  const double sd = std::sqrt(acc2 / n - mean * mean);
  CHECK(std::abs(mean) <= 4.0 * sigma / std::sqrt(n));
  const double expected_sd = oracle::truncated_normal_std(sigma, trunc);
  CHECK(sd == doctest::Approx(expected_sd).epsilon(0.03));
}

TEST_CASE("Monte Carlo band draws stay in band with balanced signs") {
  const BandPassSpectrum band{1e9, 1e7};
  const auto s = sample_detunings(band, MonteCarloPlan{100000, 5});
  std::size_t positive = 0;
  for (const auto& p : s) {
    CHECK(std::abs(std::abs(p.delta_f) - band.center) <= 0.5 * band.width);
    positive += p.delta_f > 0.0;
  }
  const double frac = static_cast<double>(positive) / static_cast<double>(s.size());
  CHECK(frac > 0.45);
  CHECK(frac < 0.55);
}

TEST_CASE("with both pairings the port means are flat at one photon each") {
  CounterRng rng(21, 0);
  const Spectrum g = GaussianSpectrum{1e9, 3.0};
  for (int k = 0; k < 25; ++k) {
    const PhaseConfig cfg{(rng.next_unit() - 0.5) * 8.0 * pi, (rng.next_unit() - 0.5) * 8.0 * pi,
                          k % 2 ? Convention::si : Convention::paper};
    const double tau = (rng.next_unit() - 0.5) * 1e-8;
    const auto [qc, qd] = mean_port_intensities(cfg, g, QuadraturePlan{801}, tau);
    CHECK(qc == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qd == doctest::Approx(1.0).epsilon(1e-12));
    const auto [mc, md] = mean_port_intensities(cfg, g, MonteCarloPlan{4000, 9}, tau);
    CHECK(mc == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(md == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("a single pairing bunches both photons at zero delay") {
  const PhaseConfig cfg{0.0, pi / 2.0, Convention::paper};
  const Spectrum g = GaussianSpectrum{1e9, 3.0};
  const auto [c_ab, d_ab] = single_term_intensity(Term::ab, cfg, g, QuadraturePlan{2001}, 0.0);
  CHECK(std::abs(c_ab) <= 1e-12);
  CHECK(d_ab == doctest::Approx(2.0).epsilon(1e-12));
  const auto [c_ba, d_ba] = single_term_intensity(Term::ba, cfg, g, QuadraturePlan{2001}, 0.0);
  CHECK(c_ba == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(d_ba) <= 1e-12);
}

TEST_CASE("single-pairing fringe at zero delay follows the phase difference") {
  // i_c = 1 - sin(zeta - xi), independent of the spectrum at tau = 0
  const PhaseConfig cfg{pi / 4.0, pi / 2.0, Convention::paper};
  const Spectrum g = GaussianSpectrum{2e9, 3.0};
  const auto [c, d] = single_term_intensity(Term::ab, cfg, g, QuadraturePlan{501}, 0.0);
  const double expected = 1.0 - std::sin(pi / 4.0);
  CHECK(c == doctest::Approx(expected).epsilon(1e-12));
  CHECK(d == doctest::Approx(2.0 - expected).epsilon(1e-12));
}

TEST_CASE("single-pairing fringe decays with the Gaussian envelope") {
  // i_c mean = 1 - cos(2 delta tau) averaged = 1 - exp(-2 sigma^2 tau^2)
  const double sigma = 1e9;
  const PhaseConfig cfg{0.0, pi / 2.0, Convention::paper};
  const Spectrum g = GaussianSpectrum{sigma, 8.0};
  for (const double st : {0.25, 0.5, 1.0}) {
    const double tau = st / sigma;
    const auto [c, d] = single_term_intensity(Term::ab, cfg, g, QuadraturePlan{4001}, tau);
    const double expected = 1.0 - std::exp(-2.0 * st * st);
    CHECK(c == doctest::Approx(expected).epsilon(1e-6));
    CHECK(d == doctest::Approx(2.0 - expected).epsilon(1e-6));
  }
}

TEST_CASE("single-pairing fringe washes out at long delay") {
  const double sigma = 1e9;
  const double tau = 4.0 / sigma;
  const PhaseConfig cfg{0.0, pi / 2.0, Convention::paper};

  // dense grid keeps the integrand oscillation well resolved at this delay
  const auto [qc, qd] =
      single_term_intensity(Term::ab, cfg, GaussianSpectrum{sigma, 8.0}, QuadraturePlan{100001}, tau);
  CHECK(qc == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(qd == doctest::Approx(1.0).epsilon(1e-6));

  // large Monte Carlo draw lands within statistical error of the same limit
  const auto [mc, md] = single_term_intensity(Term::ab, cfg, GaussianSpectrum{sigma, 8.0},
                                              MonteCarloPlan{10000000, 1}, tau);
  CHECK(std::abs(mc - 1.0) <= 1e-3);  // ~4.5 standard errors
  CHECK(std::abs(md - 1.0) <= 1e-3);
}

TEST_CASE("pairwise reduction agrees with a plain running sum") {
  const auto s = sample_detunings(GaussianSpectrum{1e9, 3.0}, QuadraturePlan{2001});
  const PhaseConfig cfg{0.3, 1.1, Convention::paper};
  const double tau = 7e-10;
  const auto [c, d] = single_term_intensity(Term::ab, cfg, GaussianSpectrum{1e9, 3.0},
                                            QuadraturePlan{2001}, tau);
  const double ref_c = oracle::naive_weighted_mean(s, [&](double df) {
    return 1.0 - std::sin(cfg.zeta - cfg.xi - 2.0 * df * tau);
  });
  CHECK(c == doctest::Approx(ref_c).epsilon(1e-12));
  CHECK(d == doctest::Approx(2.0 - ref_c).epsilon(1e-12));
}

TEST_CASE("invalid spectra and plans are rejected") {
  CHECK_THROWS_AS(sample_detunings(GaussianSpectrum{-1e9, 3.0}, QuadraturePlan{11}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(GaussianSpectrum{1e9, 0.0}, QuadraturePlan{11}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(GaussianSpectrum{1e9, 3.0}, QuadraturePlan{10}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(GaussianSpectrum{1e9, 3.0}, QuadraturePlan{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(GaussianSpectrum{1e9, 3.0}, MonteCarloPlan{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(BandPassSpectrum{0.0, 1e7}, QuadraturePlan{11}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_detunings(BandPassSpectrum{1e9, -1.0}, QuadraturePlan{11}),
                  std::invalid_argument);
}

}  // TEST_SUITE
