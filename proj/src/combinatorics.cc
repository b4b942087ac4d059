// Base-2 digit sums, 2-adic valuations and the exponent bound p(n,m)

#include "msarea/combinatorics.h"

#include <bit>
#include <stdexcept>

namespace msarea {

DigitExpansion DigitExpansion::of(std::uint64_t value) {
  DigitExpansion d;
  for (; value; value >>= 1)
    d.bits.push_back(static_cast<std::uint8_t>(value & 1));
  return d;
}

std::uint64_t DigitExpansion::value() const {
  std::uint64_t v = 0;
  for (size_t i = bits.size(); i-- > 0;)
    v = (v << 1) | bits[i];
  return v;
}

int sum_of_digits(int n, std::uint64_t m) {
  if (n < 0)
    throw std::invalid_argument("sum_of_digits: negative degree");
  if (n >= 64)
    return 0;
  return std::popcount(m >> n);
}

std::int64_t p_bound(int n, std::int64_t m) {
  if (n < 0 || n > 60 || m < 0)
    throw std::invalid_argument("p_bound: argument out of range");
  return 2 * m - (std::int64_t(1) << (n + 2)) + 4 - sum_of_digits(n, static_cast<std::uint64_t>(m));
}

std::int64_t factorial_valuation(std::uint64_t k) {
  return static_cast<std::int64_t>(k) - sum_of_digits(0, k);
}

int two_adic_valuation(std::int64_t x) {
  if (x == 0)
    throw std::invalid_argument("two_adic_valuation: zero has infinite valuation");
  return std::countr_zero(static_cast<std::uint64_t>(x));
}

}  // namespace msarea
