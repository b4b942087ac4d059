// Coefficient CSV files: header "m,b_m", one row per coefficient
//
// Float rows carry 17 significant digits so that every double round-trips;
// exact rows carry "numerator/2^exponent".

#pragma once

#include "msarea/beta_table.h"
#include "msarea/dyadic.h"

#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

namespace msarea {

void write_coefficients(std::span<const double> b, std::ostream& out);
void write_coefficients(std::span<const DyadicRational> b, std::ostream& out);

// Mode is taken from the first data row. Rows must be contiguous from m = 0.
// Throws std::runtime_error with the offending line number.
using CoefficientData = std::variant<std::vector<double>, std::vector<DyadicRational>>;
CoefficientData read_coefficients(std::istream& in);

std::string format_double(double x);

}  // namespace msarea
