#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "biphoton/model.hpp"
#include "biphoton/numeric.hpp"

namespace biphoton::cli {

enum class Method { quad, mc, analytic };

/// Everything a run needs, filled from argv. Fields not used by the chosen
/// command keep their defaults.
struct RunConfig {
  std::string command;

  double xi = 0.0;
  double zeta = pi / 2.0;
  double sigma = 1e9;
  Convention convention = Convention::paper;

  Method method = Method::quad;
  std::size_t nodes = 2001;
  double truncation = 3.0;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;

  double tau_min = -5e-9;
  double tau_max = 5e-9;
  std::size_t steps = 201;

  double tau_at = 0.0;  // fixed delay for sweep-xi
  double xi_min = 0.0;
  double xi_max = pi;

  double filter_center = 1e9;
  double filter_width = 1e7;

  unsigned noon_n = 2;
  double phi_min = 0.0;
  double phi_max = two_pi;

  std::string output;
  std::string input;
};

/// Bad flags or flag combinations; the message names the offending flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `--help` was requested; text is the usage text to print.
struct HelpRequested {
  std::string text;
};

/// argv (without the program name) to a validated RunConfig. Throws
/// UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Execute a parsed run: write the CSV (and for `fit` print the parameters to
/// stdout), put a one-line method/points/wall-time summary on stderr.
int run(const RunConfig& cfg);

/// Full entry point: parse, run, map failures to exit codes. 0 success,
/// 1 file problems, 2 usage, 3 degenerate fit input.
int cli_main(int argc, const char* const* argv);

}  // namespace biphoton::cli
