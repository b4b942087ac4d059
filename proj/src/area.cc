// Area upper bounds A_N = pi (1 - sum_{m=1}^N m b_m^2)

#include "msarea/area.h"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace msarea {

AreaSeries accumulate(std::span<const double> b, std::span<const std::int64_t> sample_points,
                      Summation summation) {
  std::vector<std::int64_t> points(sample_points.begin(), sample_points.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && (points.front() < 0 || points.back() >= static_cast<std::int64_t>(b.size())))
    throw std::invalid_argument("accumulate: stream holds b_0..b_" + std::to_string(b.size() - 1) +
                                ", cannot form A_" + std::to_string(points.back()));
  AreaSeries series;
  CompensatedSum comp;
  double naive = 0.0;
  std::int64_t m = 1;
  for (const auto n : points) {
    for (; m <= n; ++m) {
      const double term = static_cast<double>(m) * b[m] * b[m];
      comp.add(term);
      naive += term;
    }
    const double s = summation == Summation::compensated ? comp.value() : naive;
    series.samples.push_back({n, std::numbers::pi * (1.0 - s)});
  }
  return series;
}

std::vector<double> area_bounds(std::span<const double> b) {
  std::vector<double> out;
  out.reserve(b.size());
  CompensatedSum comp;
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (m > 0)
      comp.add(static_cast<double>(m) * b[m] * b[m]);
    out.push_back(std::numbers::pi * (1.0 - comp.value()));
  }
  return out;
}

DyadicRational exact_weighted_square_sum(std::span<const DyadicRational> b, std::int64_t n) {
  if (n >= static_cast<std::int64_t>(b.size()))
    throw std::invalid_argument("exact_weighted_square_sum: stream too short");
  DyadicRational sum;
  for (std::int64_t m = 1; m <= n; ++m)
    sum += DyadicRational(static_cast<long>(m)) * b[m] * b[m];
  return sum;
}

double exact_area_bound(std::span<const DyadicRational> b, std::int64_t n) {
  const DyadicRational rest = DyadicRational(1) - exact_weighted_square_sum(b, n);
  return std::numbers::pi * rest.to_double();
}

double max_abs_tail(std::span<const double> b, std::int64_t n) {
  if (n >= static_cast<std::int64_t>(b.size()))
    throw std::invalid_argument("max_abs_tail: stream too short");
  double worst = 0.0;
  for (std::int64_t m = n / 2 + 1; m <= n; ++m)
    worst = std::max(worst, std::abs(b[m]));
  return worst;
}

namespace {

std::string format10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void require_samples(const AreaSeries& series) {
  if (series.samples.empty())
    throw std::invalid_argument("export: empty area series");
}

}  // namespace

void export_csv(const AreaSeries& series, std::ostream& out) {
  require_samples(series);
  out << "N,A_N\n";
  for (const auto& s : series.samples)
    out << s.n << ',' << format10(s.area) << '\n';
  if (!out)
    throw std::runtime_error("export_csv: write failed");
}

void export_json(const AreaSeries& series, std::ostream& out) {
  require_samples(series);
  auto rows = nlohmann::json::array();
  for (const auto& s : series.samples)
    rows.push_back({{"N", s.n}, {"A_N", s.area}});
  out << rows.dump(2) << '\n';
  if (!out)
    throw std::runtime_error("export_json: write failed");
}

std::string summary_json(const std::string& mode, std::int64_t n, double area, double tail) {
  nlohmann::json j = {{"mode", mode}, {"N", n}, {"area_upper_bound", area}, {"max_abs_bm_tail", tail}};
  return j.dump(2);
}

}  // namespace msarea
