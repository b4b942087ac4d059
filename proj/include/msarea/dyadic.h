// Exact dyadic rationals a / 2^e on top of GMP integers

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace msarea {

// Rationals with arbitrary denominators. Only the contour oracle uses these.
using BigRational = mpq_class;

// Value numerator / 2^exponent, always normalized: the numerator is odd, or
// the value is zero and the exponent is 0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long value);  // NOLINT(google-explicit-constructor)

  // numerator / 2^exponent for any signed exponent, then normalized.
  static DyadicRational from_parts(mpz_class numerator, std::int64_t exponent);
  // Exact value of a finite double. Throws std::invalid_argument otherwise.
  static DyadicRational from_double(double x);

  const mpz_class& numerator() const { return num_; }
  std::uint64_t exponent() const { return exp_; }
  bool is_zero() const { return sgn(num_) == 0; }
  int sign() const { return sgn(num_); }

  // nullopt stands for +infinity (the value is zero).
  std::optional<std::int64_t> valuation() const;

  DyadicRational halve() const;
  DyadicRational negate() const;
  DyadicRational abs() const;

  // Round-to-nearest-even. Throws std::overflow_error past the double range.
  double to_double() const;

  // "numerator/2^exponent", e.g. "-15/2^7" and "0/2^0".
  std::string to_string() const;
  // Exact decimal expansion; every dyadic rational terminates in base 10.
  std::string to_decimal_string() const;
  // Parses the to_string() form. Throws std::invalid_argument.
  static DyadicRational parse(std::string_view text);

  BigRational to_rational() const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  DyadicRational& operator+=(const DyadicRational& b) { return *this = *this + b; }
  DyadicRational& operator-=(const DyadicRational& b) { return *this = *this - b; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b);

 private:
  void normalize();

  mpz_class num_;
  std::uint64_t exp_ = 0;
};

inline DyadicRational dyadic_add(const DyadicRational& a, const DyadicRational& b) { return a + b; }
inline DyadicRational dyadic_mul(const DyadicRational& a, const DyadicRational& b) { return a * b; }
inline DyadicRational dyadic_halve(const DyadicRational& a) { return a.halve(); }
inline double dyadic_to_float(const DyadicRational& a) { return a.to_double(); }
inline std::optional<std::int64_t> two_adic_valuation(const DyadicRational& a) { return a.valuation(); }

// 2-adic valuation of a nonzero rational; nullopt for zero.
std::optional<std::int64_t> two_adic_valuation(const BigRational& q);

// Exact dyadic value of a rational whose reduced denominator is a power of 2.
// Throws std::invalid_argument otherwise.
DyadicRational to_dyadic(const BigRational& q);

}  // namespace msarea
