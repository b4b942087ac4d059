// Base-2 digit sums, 2-adic valuations and the exponent bound p(n,m)

#pragma once

#include <cstdint>
#include <vector>

namespace msarea {

// Base-2 digits of a non-negative integer, least significant first.
// Empty for zero; otherwise the last digit is 1.
struct DigitExpansion {
  std::vector<std::uint8_t> bits;

  static DigitExpansion of(std::uint64_t value);
  std::uint64_t value() const;
};

// Number of 1-bits of m at positions >= n.
int sum_of_digits(int n, std::uint64_t m);

// 2m - 2^(n+2) + 4 - s(n,m). Total: may be negative outside m >= 2^(n+1) - 1.
std::int64_t p_bound(int n, std::int64_t m);

// Exponent of 2 in k!, i.e. k - s(0,k).
std::int64_t factorial_valuation(std::uint64_t k);

// Exponent of 2 in a nonzero 64-bit integer.
int two_adic_valuation(std::int64_t x);

}  // namespace msarea
