#include "ufmt/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ufmt {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line,
                             const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

bool parse_two_doubles(const std::string& text, double& a, double& b) {
  std::istringstream ss(text);
  std::string extra;
  if (!(ss >> a >> b)) return false;
  return !(ss >> extra);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CoefficientSeries read_series(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) parse_fail(name, 1, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "ufmt1") parse_fail(name, 1, "expected header 'ufmt1'");

  std::vector<Complex> coeffs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double re = 0.0, im = 0.0;
    if (!parse_two_doubles(line, re, im)) {
      parse_fail(name, lineno, "expected two numbers 're im'");
    }
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) parse_fail(name, lineno, "no coefficients");
  return CoefficientSeries(std::move(coeffs));
}

CoefficientSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_series(in, path);
}

void write_series(std::ostream& out, const CoefficientSeries& s) {
  out << "ufmt1\n";
  for (const Complex& c : s.coeffs()) {
    out << format_double(c.real()) << " " << format_double(c.imag()) << "\n";
  }
}

void write_series_file(const std::string& path, const CoefficientSeries& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_series(out, s);
  if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

}  // namespace ufmt
