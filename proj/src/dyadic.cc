// Exact dyadic rationals a / 2^e on top of GMP integers

#include "msarea/dyadic.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace msarea {

DyadicRational::DyadicRational(long value) : num_(value) { normalize(); }

DyadicRational DyadicRational::from_parts(mpz_class numerator, std::int64_t exponent) {
  DyadicRational r;
  if (exponent < 0) {
    mpz_mul_2exp(numerator.get_mpz_t(), numerator.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
    exponent = 0;
  }
  r.num_ = std::move(numerator);
  r.exp_ = static_cast<std::uint64_t>(exponent);
  r.normalize();
  return r;
}

DyadicRational DyadicRational::from_double(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("from_double: value is not finite");
  if (x == 0.0)
    return {};
  int e = 0;
  const double frac = std::frexp(x, &e);
  // frac * 2^53 is an integer of at most 53 bits
  const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  mpz_class num;
  mpz_set_si(num.get_mpz_t(), mant);
  return from_parts(std::move(num), 53 - static_cast<std::int64_t>(e));
}

void DyadicRational::normalize() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  const auto tz = mpz_scan1(num_.get_mpz_t(), 0);
  const auto shift = std::min<std::uint64_t>(tz, exp_);
  if (shift) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

std::optional<std::int64_t> DyadicRational::valuation() const {
  if (is_zero())
    return std::nullopt;
  const auto tz = static_cast<std::int64_t>(mpz_scan1(num_.get_mpz_t(), 0));
  return tz - static_cast<std::int64_t>(exp_);
}

DyadicRational DyadicRational::halve() const {
  DyadicRational r = *this;
  if (!r.is_zero()) {
    if (mpz_even_p(r.num_.get_mpz_t()))
      mpz_fdiv_q_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), 1);
    else
      ++r.exp_;
  }
  return r;
}

DyadicRational DyadicRational::negate() const {
  DyadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

DyadicRational DyadicRational::abs() const {
  DyadicRational r = *this;
  r.num_ = ::abs(r.num_);
  return r;
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  DyadicRational r;
  if (a.exp_ >= b.exp_) {
    mpz_mul_2exp(r.num_.get_mpz_t(), b.num_.get_mpz_t(), a.exp_ - b.exp_);
    r.num_ += a.num_;
    r.exp_ = a.exp_;
  } else {
    mpz_mul_2exp(r.num_.get_mpz_t(), a.num_.get_mpz_t(), b.exp_ - a.exp_);
    r.num_ += b.num_;
    r.exp_ = b.exp_;
  }
  r.normalize();
  return r;
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + b.negate(); }

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  DyadicRational r;
  if (a.is_zero() || b.is_zero())
    return r;
  r.num_ = a.num_ * b.num_;
  r.exp_ = a.exp_ + b.exp_;
  // Numerators are odd unless the exponent is 0.
  if (a.exp_ == 0 || b.exp_ == 0)
    r.normalize();
  return r;
}

bool operator<(const DyadicRational& a, const DyadicRational& b) { return (a - b).sign() < 0; }

double DyadicRational::to_double() const {
  if (is_zero())
    return 0.0;
  const mpz_class mag = ::abs(num_);
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(mag.get_mpz_t(), 2));
  const auto e = static_cast<std::int64_t>(exp_);
  // Quantum of the result: 53 significant bits, or the subnormal spacing.
  const std::int64_t quantum = std::max<std::int64_t>(bits - 1 - e - 52, -1074);
  const std::int64_t drop = quantum + e;
  double result;
  if (drop <= 0) {
    result = std::ldexp(mpz_get_d(mag.get_mpz_t()), static_cast<int>(-e));
  } else {
    mpz_class kept, rest;
    mpz_fdiv_q_2exp(kept.get_mpz_t(), mag.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    mpz_fdiv_r_2exp(rest.get_mpz_t(), mag.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    mpz_class half;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(drop - 1));
    const int c = cmp(rest, half);
    if (c > 0 || (c == 0 && mpz_odd_p(kept.get_mpz_t())))
      ++kept;
    if (quantum > std::numeric_limits<int>::max())
      throw std::overflow_error("dyadic_to_float: value exceeds double range");
    result = std::ldexp(mpz_get_d(kept.get_mpz_t()), static_cast<int>(quantum));
  }
  if (std::isinf(result))
    throw std::overflow_error("dyadic_to_float: value exceeds double range");
  return sign() < 0 ? -result : result;
}

std::string DyadicRational::to_string() const {
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

std::string DyadicRational::to_decimal_string() const {
  // a / 2^e = a * 5^e / 10^e
  mpz_class scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 5, exp_);
  scaled *= ::abs(num_);
  std::string digits = scaled.get_str();
  std::string out;
  if (sign() < 0)
    out += '-';
  if (exp_ == 0)
    return out + digits;
  if (digits.size() <= exp_)
    digits.insert(0, exp_ - digits.size() + 1, '0');
  const auto point = digits.size() - exp_;
  out += digits.substr(0, point);
  out += '.';
  out += digits.substr(point);
  return out;
}

DyadicRational DyadicRational::parse(std::string_view text) {
  const auto slash = text.find("/2^");
  if (slash == std::string_view::npos || slash == 0 || slash + 3 >= text.size())
    throw std::invalid_argument("dyadic parse: expected numerator/2^exponent, got '" + std::string(text) + "'");
  mpz_class num;
  if (num.set_str(std::string(text.substr(0, slash)), 10) != 0)
    throw std::invalid_argument("dyadic parse: bad numerator in '" + std::string(text) + "'");
  const auto exp_text = text.substr(slash + 3);
  std::int64_t e = 0;
  for (const char ch : exp_text) {
    if (ch < '0' || ch > '9' || e > (std::int64_t(1) << 40))
      throw std::invalid_argument("dyadic parse: bad exponent in '" + std::string(text) + "'");
    e = e * 10 + (ch - '0');
  }
  return from_parts(std::move(num), e);
}

BigRational DyadicRational::to_rational() const {
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), exp_);
  BigRational q(num_, den);
  q.canonicalize();
  return q;
}

std::optional<std::int64_t> two_adic_valuation(const BigRational& q) {
  if (sgn(q) == 0)
    return std::nullopt;
  const auto vn = static_cast<std::int64_t>(mpz_scan1(q.get_num_mpz_t(), 0));
  const auto vd = static_cast<std::int64_t>(mpz_scan1(q.get_den_mpz_t(), 0));
  return vn - vd;
}

DyadicRational to_dyadic(const BigRational& q) {
  const mpz_class& den = q.get_den();
  const auto tz = mpz_scan1(den.get_mpz_t(), 0);
  mpz_class odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), den.get_mpz_t(), tz);
  if (odd != 1)
    throw std::invalid_argument("to_dyadic: denominator is not a power of 2");
  return DyadicRational::from_parts(q.get_num(), static_cast<std::int64_t>(tz));
}

}  // namespace msarea
