#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "biphoton/analysis.hpp"
#include "biphoton/correlation.hpp"

namespace biphoton {

/// Parse or I/O failure; line is 1-based (0 when the file could not be read).
struct CsvError : std::runtime_error {
  std::size_t line;
  CsvError(std::size_t line_, const std::string& msg)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

/// Layout, shared by every writer: line 1 `# biphoton-hom v1`, line 2
/// `# key=value,...` provenance, line 3 the column header, then data rows.
/// LF endings, no trailing blank line beyond the final newline.
void write_curve_csv(const CorrelationCurve& curve, const std::string& path);

/// Columns `phi,R` for an n-photon fringe.
void write_noon_csv(unsigned n, const std::vector<double>& phi, const std::vector<double>& r,
                    const std::string& path);

/// Columns `b,a,c,rms_residual,converged,iterations`, one data row.
void write_fit_csv(const FitResult& fit, const std::string& path);

/// Read back a curve written by write_curve_csv (or by anything else that
/// follows the layout). Comment lines are skipped; the grid must be strictly
/// increasing, every value finite, stderr non-negative. Errors carry the
/// offending line number.
CorrelationCurve read_curve_csv(const std::string& path);

}  // namespace biphoton
