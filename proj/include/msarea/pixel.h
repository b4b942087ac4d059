// Escape-time pixel counting: a grid estimate of the area of M

#pragma once

#include <complex>
#include <cstdint>

namespace msarea {

struct GridSpec {
  double re_min = -2.0;
  double re_max = 0.5;
  double im_min = 0.0;
  double im_max = 1.25;
  std::int64_t re_cells = 4096;
  std::int64_t im_cells = 4096;
  std::int64_t max_iter = 100000;
  double radius = 2.0;
  // Count the rectangle twice, standing in for its mirror image below the
  // real axis. Meant for rectangles with im_min = 0.
  bool mirror = true;

  // Throws std::invalid_argument on an empty rectangle, a radius below 2,
  // non-positive resolution or negative max_iter.
  void validate() const;
};

// Whether |z_k| > radius for some k <= max_iter, z_0 = 0, z_k = z_{k-1}^2 + c.
// Points in the main cardioid and the period-2 disk, and orbits that revisit
// a previous value exactly, never escape and are reported early.
bool escapes(std::complex<double> c, std::int64_t max_iter, double radius = 2.0);

// Plain iteration, no shortcuts.
bool escapes_plain(std::complex<double> c, std::int64_t max_iter, double radius = 2.0);

// Number of cell centers that do not escape.
std::int64_t count_interior(const GridSpec& spec, int workers);
std::int64_t count_interior_serial(const GridSpec& spec);

// Interior count times cell area, doubled when spec.mirror is set.
double estimate_area(const GridSpec& spec, int workers = 1);
double estimate_area_serial(const GridSpec& spec);

}  // namespace msarea
