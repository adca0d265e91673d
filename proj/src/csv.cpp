#include "biphoton/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace biphoton {

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

namespace {

const char* convention_name(Convention c) { return c == Convention::si ? "si" : "paper"; }

std::string meta_line(const CurveMeta& meta) {
  std::ostringstream os;
  os << "method=" << meta.method;
  os << ",xi=" << format_double(meta.phase.xi);
  os << ",zeta=" << format_double(meta.phase.zeta);
  if (meta.spectrum) {
    if (const auto* g = std::get_if<GaussianSpectrum>(&*meta.spectrum)) {
      os << ",sigma=" << format_double(g->sigma);
    } else {
      const auto& b = std::get<BandPassSpectrum>(*meta.spectrum);
      os << ",filter_center=" << format_double(b.center)
         << ",filter_width=" << format_double(b.width);
    }
  }
  os << ",convention=" << convention_name(meta.phase.convention);
  if (meta.spectrum && meta.method != "analytic") {
    if (const auto* g = std::get_if<GaussianSpectrum>(&*meta.spectrum))
      os << ",truncation=" << format_double(g->truncation);
  }
  if (meta.plan) {
    if (const auto* mc = std::get_if<MonteCarloPlan>(&*meta.plan))
      os << ",samples=" << mc->n << ",seed=" << mc->seed;
    else
      os << ",nodes=" << std::get<QuadraturePlan>(*meta.plan).nodes;
  }
  return os.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

void finish(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_curve_csv(const CorrelationCurve& curve, const std::string& path) {
  auto os = open_out(path);
  os << "# biphoton-hom v1\n";
  os << "# " << meta_line(curve.meta) << "\n";
  const std::string& axis = curve.meta.axis;
  os << axis << ",R_mean,R_stderr\n";
  for (std::size_t k = 0; k < curve.tau.size(); ++k)
    os << format_double(curve.tau[k]) << ',' << format_double(curve.r_mean[k]) << ','
       << format_double(curve.r_stderr[k]) << '\n';
  finish(os, path);
}

void write_noon_csv(unsigned n, const std::vector<double>& phi, const std::vector<double>& r,
                    const std::string& path) {
  auto os = open_out(path);
  os << "# biphoton-hom v1\n";
  os << "# n=" << n << "\n";
  os << "phi,R\n";
  for (std::size_t k = 0; k < phi.size(); ++k)
    os << format_double(phi[k]) << ',' << format_double(r[k]) << '\n';
  finish(os, path);
}

void write_fit_csv(const FitResult& fit, const std::string& path) {
  auto os = open_out(path);
  os << "# biphoton-hom v1\n";
  os << "# method=fit\n";
  os << "b,a,c,rms_residual,converged,iterations\n";
  os << format_double(fit.baseline) << ',' << format_double(fit.amplitude) << ','
     << format_double(fit.rate) << ',' << format_double(fit.rms_residual) << ','
     << (fit.converged ? 1 : 0) << ',' << fit.iterations << '\n';
  finish(os, path);
}

namespace {

double parse_field(const std::string& field, std::size_t line, const char* name) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last)
    throw CsvError(line, std::string("malformed ") + name + " value '" + field + "'");
  if (!std::isfinite(v)) throw CsvError(line, std::string(name) + " value is not finite");
  return v;
}

}  // namespace

CorrelationCurve read_curve_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CsvError(0, "cannot open: " + path);

  CorrelationCurve curve;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;

  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line == "tau,R_mean,R_stderr")
        curve.meta.axis = "tau";
      else if (line == "xi,R_mean,R_stderr")
        curve.meta.axis = "xi";
      else
        throw CsvError(lineno, "expected header tau,R_mean,R_stderr, got '" + line + "'");
      header_seen = true;
      continue;
    }
    std::array<std::string, 3> fields;
    std::size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      const std::size_t comma = line.find(',', start);
      if (f < 2) {
        if (comma == std::string::npos) throw CsvError(lineno, "row needs 3 comma-separated fields");
        fields[f] = line.substr(start, comma - start);
        start = comma + 1;
      } else {
        if (comma != std::string::npos) throw CsvError(lineno, "row needs 3 comma-separated fields");
        fields[f] = line.substr(start);
      }
    }
    const double t = parse_field(fields[0], lineno, curve.meta.axis.c_str());
    const double r = parse_field(fields[1], lineno, "R_mean");
    const double se = parse_field(fields[2], lineno, "R_stderr");
    if (!curve.tau.empty() && !(t > curve.tau.back()))
      throw CsvError(lineno, curve.meta.axis + " values must be strictly increasing");
    if (se < 0.0) throw CsvError(lineno, "R_stderr must be non-negative");
    curve.tau.push_back(t);
    curve.r_mean.push_back(r);
    curve.r_stderr.push_back(se);
  }
  if (!header_seen) throw CsvError(lineno, "missing column header");
  if (curve.tau.empty()) throw CsvError(lineno, "no data rows");
  curve.meta.method = "csv";
  return curve;
}

}  // namespace biphoton
