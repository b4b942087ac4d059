// Area upper bounds A_N = pi (1 - sum_{m=1}^N m b_m^2)

#pragma once

#include "msarea/dyadic.h"

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace msarea {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

enum class Summation { compensated, naive };

struct AreaSample {
  std::int64_t n = 0;
  double area = 0.0;
};

struct AreaSeries {
  std::vector<AreaSample> samples;
};

// A_N at each requested N (sorted, duplicates dropped). b[m] is b_m; b_0 does
// not enter the sum. Throws std::invalid_argument if some N >= b.size().
AreaSeries accumulate(std::span<const double> b, std::span<const std::int64_t> sample_points,
                      Summation summation = Summation::compensated);

// A_N for every N = 0 .. b.size()-1.
std::vector<double> area_bounds(std::span<const double> b);

// sum_{m=1}^N m b_m^2 evaluated exactly.
DyadicRational exact_weighted_square_sum(std::span<const DyadicRational> b, std::int64_t n);

// A_N from the exact sum, rounded once before the final multiply by pi.
double exact_area_bound(std::span<const DyadicRational> b, std::int64_t n);

// Largest |b_m| over N/2 < m <= N.
double max_abs_tail(std::span<const double> b, std::int64_t n);

// "N,A_N" rows with 10 significant digits. Throws on an empty series.
void export_csv(const AreaSeries& series, std::ostream& out);
// [{"N":..,"A_N":..}, ...]. Throws on an empty series.
void export_json(const AreaSeries& series, std::ostream& out);
// {"mode":..,"N":..,"area_upper_bound":..,"max_abs_bm_tail":..}
std::string summary_json(const std::string& mode, std::int64_t n, double area, double tail);

}  // namespace msarea
