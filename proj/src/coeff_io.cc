// Coefficient CSV files: header "m,b_m", one row per coefficient

#include "msarea/coeff_io.h"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace msarea {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_coefficients(std::span<const double> b, std::ostream& out) {
  out << "m,b_m\n";
  for (std::size_t m = 0; m < b.size(); ++m)
    out << m << ',' << format_double(b[m]) << '\n';
  if (!out)
    throw std::runtime_error("write_coefficients: write failed");
}

void write_coefficients(std::span<const DyadicRational> b, std::ostream& out) {
  out << "m,b_m\n";
  for (std::size_t m = 0; m < b.size(); ++m)
    out << m << ',' << b[m].to_string() << '\n';
  if (!out)
    throw std::runtime_error("write_coefficients: write failed");
}

CoefficientData read_coefficients(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line.rfind("m,b_m", 0) != 0)
    throw std::runtime_error("coefficients: missing 'm,b_m' header");
  std::vector<double> floats;
  std::vector<DyadicRational> exacts;
  int mode = -1;  // 0 float, 1 exact
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    auto fail = [&](const std::string& why) {
      return std::runtime_error("coefficients line " + std::to_string(line_no) + ": " + why);
    };
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw fail("expected 'm,b_m'");
    std::size_t m = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + comma, m);
    if (ec != std::errc() || ptr != line.data() + comma)
      throw fail("bad index");
    if (m != expected)
      throw fail("index " + std::to_string(m) + " out of sequence, expected " + std::to_string(expected));
    ++expected;
    const std::string value = line.substr(comma + 1);
    const int row_mode = value.find("/2^") != std::string::npos ? 1 : 0;
    if (mode == -1)
      mode = row_mode;
    if (row_mode != mode)
      throw fail("mixed float and exact values");
    try {
      if (mode == 1) {
        exacts.push_back(DyadicRational::parse(value));
      } else {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size())
          throw std::invalid_argument("trailing characters");
        floats.push_back(x);
      }
    } catch (const std::exception& e) {
      throw fail(std::string("bad value: ") + e.what());
    }
  }
  if (mode == 1)
    return exacts;
  return floats;
}

}  // namespace msarea
