// Escape-time pixel counting: a grid estimate of the area of M

#include "msarea/pixel.h"

#include <stdexcept>

namespace msarea {
namespace {

bool in_cardioid_or_bulb(double x, double y) {
  const double y2 = y * y;
  const double xq = x - 0.25;
  const double q = xq * xq + y2;
  if (q * (q + xq) <= 0.25 * y2)
    return true;
  const double xb = x + 1.0;
  return xb * xb + y2 <= 0.0625;
}

double cell_center(double lo, double hi, std::int64_t cells, std::int64_t i) {
  return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(cells);
}

std::int64_t count_row(const GridSpec& spec, std::int64_t j) {
  const double y = cell_center(spec.im_min, spec.im_max, spec.im_cells, j);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < spec.re_cells; ++i) {
    const double x = cell_center(spec.re_min, spec.re_max, spec.re_cells, i);
    if (!escapes({x, y}, spec.max_iter, spec.radius))
      ++count;
  }
  return count;
}

double to_area(const GridSpec& spec, std::int64_t count) {
  const double cell = (spec.re_max - spec.re_min) * (spec.im_max - spec.im_min) /
                      (static_cast<double>(spec.re_cells) * static_cast<double>(spec.im_cells));
  return static_cast<double>(count) * cell * (spec.mirror ? 2.0 : 1.0);
}

}  // namespace

void GridSpec::validate() const {
  if (!(re_max > re_min) || !(im_max > im_min))
    throw std::invalid_argument("grid: empty rectangle");
  if (re_cells < 1 || im_cells < 1)
    throw std::invalid_argument("grid: resolution must be positive");
  if (max_iter < 0)
    throw std::invalid_argument("grid: max_iter must be >= 0");
  if (!(radius >= 2.0))
    throw std::invalid_argument("grid: escape radius must be >= 2");
}

bool escapes_plain(std::complex<double> c, std::int64_t max_iter, double radius) {
  const double r2 = radius * radius;
  double x = 0.0, y = 0.0;
  for (std::int64_t k = 1; k <= max_iter; ++k) {
    const double xn = x * x - y * y + c.real();
    y = 2.0 * x * y + c.imag();
    x = xn;
    if (x * x + y * y > r2)
      return true;
  }
  return false;
}

bool escapes(std::complex<double> c, std::int64_t max_iter, double radius) {
  const double cx = c.real();
  const double cy = c.imag();
  if (in_cardioid_or_bulb(cx, cy))
    return false;
  const double r2 = radius * radius;
  double x = 0.0, y = 0.0;
  // Brent-style cycle detection on exact repeats of the floating-point orbit.
  double saved_x = 0.0, saved_y = 0.0;
  std::int64_t window = 8;
  std::int64_t since = 0;
  for (std::int64_t k = 1; k <= max_iter; ++k) {
    const double xn = x * x - y * y + cx;
    y = 2.0 * x * y + cy;
    x = xn;
    if (x * x + y * y > r2)
      return true;
    if (x == saved_x && y == saved_y)
      return false;
    if (++since == window) {
      saved_x = x;
      saved_y = y;
      since = 0;
      window *= 2;
    }
  }
  return false;
}

std::int64_t count_interior_serial(const GridSpec& spec) {
  spec.validate();
  std::int64_t total = 0;
  for (std::int64_t j = 0; j < spec.im_cells; ++j)
    total += count_row(spec, j);
  return total;
}

std::int64_t count_interior(const GridSpec& spec, int workers) {
  spec.validate();
  if (workers < 1)
    throw std::invalid_argument("count_interior: worker count must be >= 1");
  std::int64_t total = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t j = 0; j < spec.im_cells; ++j)
    total += count_row(spec, j);
  return total;
}

double estimate_area(const GridSpec& spec, int workers) { return to_area(spec, count_interior(spec, workers)); }

double estimate_area_serial(const GridSpec& spec) { return to_area(spec, count_interior_serial(spec)); }

}  // namespace msarea
