// Independent checks on computed coefficients

#include "msarea/oracle.h"

#include "msarea/combinatorics.h"
#include "msarea/engine.h"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace msarea {
namespace {

std::string range_text(const std::string& what, std::int64_t lo, std::int64_t hi) {
  return what + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string at_text(int n, std::int64_t m) { return "beta(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

void require_length(std::size_t size, std::int64_t limit, const char* who) {
  if (limit < 0 || limit >= static_cast<std::int64_t>(size))
    throw std::invalid_argument(std::string(who) + ": stream holds " + std::to_string(size) +
                                " coefficients, limit " + std::to_string(limit) + " out of range");
}

// Records the first few failures in the detail text.
class FailureLog {
 public:
  void fail(const std::string& what) {
    ++count_;
    if (count_ <= 5)
      text_ += (text_.empty() ? "" : "; ") + what;
  }
  void finish(CheckRecord& r) const {
    r.passed = count_ == 0;
    if (count_ > 5)
      r.detail += text_ + "; ... " + std::to_string(count_) + " failures";
    else if (count_)
      r.detail += text_;
  }
  std::int64_t count() const { return count_; }

 private:
  std::int64_t count_ = 0;
  std::string text_;
};

std::int64_t pow2(int k) { return std::int64_t(1) << k; }

CheckRecord record(std::string name, std::string range) {
  CheckRecord r;
  r.name = std::move(name);
  r.range = std::move(range);
  return r;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

std::string ValidationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records)
    checks.push_back({{"name", r.name},
                      {"range", r.range},
                      {"worst_deviation", r.worst_deviation},
                      {"passed", r.passed},
                      {"detail", r.detail}});
  nlohmann::json j = {{"checks", checks}, {"passed", passed()}};
  return j.dump(2);
}

// --- zero families -----------------------------------------------------------

bool in_zero_family(std::int64_t m) {
  if (m < 1)
    return false;
  const int nu = std::countr_zero(static_cast<std::uint64_t>(m));
  if (nu == 0)
    return false;
  // m = 2^(n+1), n >= 1, is the k = 0 member
  const std::int64_t k = ((m >> nu) - 1) / 2;
  return k + 3 <= pow2(nu);
}

std::vector<std::int64_t> known_zero_indices(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= limit; ++m)
    if (in_zero_family(m))
      out.push_back(m);
  return out;
}

CheckRecord known_zero_check(std::span<const DyadicRational> b, std::int64_t limit) {
  require_length(b.size(), limit, "known_zero_check");
  CheckRecord r = record("zeros.exact", range_text("m", 1, limit));
  FailureLog log;
  std::int64_t tested = 0;
  for (const auto m : known_zero_indices(limit)) {
    ++tested;
    if (!b[m].is_zero()) {
      r.worst_deviation = std::max(r.worst_deviation, std::abs(b[m].to_double()));
      log.fail("b_" + std::to_string(m) + " = " + b[m].to_string());
    }
  }
  r.detail = std::to_string(tested) + " family indices. ";
  log.finish(r);
  return r;
}

CheckRecord known_zero_check(std::span<const double> b, std::int64_t limit, double tol) {
  require_length(b.size(), limit, "known_zero_check");
  CheckRecord r = record("zeros.float", range_text("m", 1, limit));
  FailureLog log;
  std::int64_t tested = 0;
  for (const auto m : known_zero_indices(limit)) {
    ++tested;
    const double dev = std::abs(b[m]);
    r.worst_deviation = std::max(r.worst_deviation, dev);
    if (!(dev <= tol)) {
      std::ostringstream os;
      os << "|b_" << m << "| = " << dev;
      log.fail(os.str());
    }
  }
  std::ostringstream os;
  os << tested << " family indices, tolerance " << tol << ". ";
  r.detail = os.str();
  log.finish(r);
  return r;
}

// --- closed forms -------------------------------------------------------------

BigRational generalized_binomial(const BigRational& x, std::int64_t k) {
  if (k < 0)
    throw std::invalid_argument("generalized_binomial: negative k");
  BigRational r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= x - BigRational(static_cast<long>(i));
    r /= BigRational(static_cast<long>(i + 1));
  }
  return r;
}

std::optional<ClosedFormCase> closed_form_case(std::int64_t m, ClosedFormIndexing indexing) {
  if (m < 1)
    return std::nullopt;
  const int nu = std::countr_zero(static_cast<std::uint64_t>(m));
  if (nu == 0 || nu > 30)
    return std::nullopt;
  const std::int64_t odd = m >> nu;
  const std::int64_t base = indexing == ClosedFormIndexing::as_printed ? pow2(nu) : pow2(nu + 1);
  if (odd == base - 1 && nu >= 1)
    return ClosedFormCase{1, nu};
  if (odd == base + 1 && nu >= 2)
    return ClosedFormCase{2, nu};
  if (odd == base + 3 && nu >= 2)
    return ClosedFormCase{3, nu};
  return std::nullopt;
}

BigRational closed_form_bm(std::int64_t m, ClosedFormIndexing indexing) {
  const auto c = closed_form_case(m, indexing);
  if (!c)
    throw std::invalid_argument("closed_form_bm: m = " + std::to_string(m) + " matches no closed-form family");
  const int nu = c->nu;
  const mpz_class p = mpz_class(1) << nu;
  auto pow2z = [](int k) -> mpz_class { return mpz_class(1) << k; };
  auto ratio = [](const mpz_class& num, const mpz_class& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
  };
  const long pk = static_cast<long>(pow2(nu));
  switch (c->family) {
    case 1: {
      const BigRational coef = ratio(-1, pow2z(nu + 3) * (p - 1));
      return coef * generalized_binomial(BigRational(mpz_class(2 * pk - 5), 2), pk - 2);
    }
    case 2: {
      const BigRational coef = ratio(3 * (p - 6), pow2z(nu + 5) * (p + 1) * (p - 5));
      return coef * generalized_binomial(BigRational(mpz_class(2 * pk - 3), 2), pk - 1);
    }
    default: {
      const mpz_class poly = 214 * p * p * p - 767 * p * p + 146 * p + 452;
      const BigRational coef = ratio(-poly, pow2z(nu + 8) * (2 * p - 7) * (p * p - 1) * (p + 2));
      return coef * generalized_binomial(BigRational(mpz_class(2 * pk - 5), 2), pk - 2);
    }
  }
}

std::vector<CheckRecord> closed_form_check(std::span<const DyadicRational> b, std::int64_t limit,
                                           ClosedFormIndexing indexing) {
  require_length(b.size(), limit, "closed_form_check");
  const std::string tag = indexing == ClosedFormIndexing::as_printed ? "as_printed" : "doubled_odd_part";
  std::vector<CheckRecord> out;
  for (int family = 1; family <= 3; ++family) {
    CheckRecord r = record("closed_form.family" + std::to_string(family) + "." + tag, range_text("m", 1, limit));
    FailureLog log;
    std::string agreed;
    for (std::int64_t m = 1; m <= limit; ++m) {
      const auto c = closed_form_case(m, indexing);
      if (!c || c->family != family)
        continue;
      const BigRational expected = closed_form_bm(m, indexing);
      const BigRational actual = b[m].to_rational();
      if (expected == actual) {
        agreed += (agreed.empty() ? "" : ",") + std::to_string(m);
      } else {
        const double dev = std::abs(BigRational(expected - actual).get_d());
        r.worst_deviation = std::max(r.worst_deviation, dev);
        log.fail("m=" + std::to_string(m) + ": formula " + expected.get_str() + " vs computed " + actual.get_str());
      }
    }
    r.detail = "agree at {" + agreed + "}. ";
    log.finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

// --- valuations ---------------------------------------------------------------

std::vector<CheckRecord> valuation_check(std::span<const DyadicRational> b, std::int64_t limit) {
  require_length(b.size(), limit, "valuation_check");
  const auto range = range_text("m", 0, limit);
  CheckRecord bound = record("valuation.factorial_bound", range);
  CheckRecord odd_eq = record("valuation.odd_equality", range);
  CheckRecord even_strict = record("valuation.even_strict", range);
  CheckRecord digits = record("valuation.digit_sum_bound", range);
  CheckRecord reduced = record("valuation.beta_bound_row0", range);
  FailureLog f_bound, f_odd, f_even, f_digits, f_reduced;
  double gap_bound = -1e300, gap_digits = -1e300, gap_reduced = -1e300;

  for (std::int64_t m = 0; m <= limit; ++m) {
    const auto v = b[m].valuation();
    const std::int64_t fact = factorial_valuation(static_cast<std::uint64_t>(2 * m + 2));
    const std::int64_t digit_form = 2 * (m + 1) - sum_of_digits(0, static_cast<std::uint64_t>(m + 1));
    if (fact != digit_form)
      f_digits.fail("nu((2m+2)!) != 2(m+1) - s(0,m+1) at m=" + std::to_string(m));
    if (m % 2 == 1) {
      if (!v || -*v != fact)
        f_odd.fail("m=" + std::to_string(m) + ": -nu(b_m) = " + (v ? std::to_string(-*v) : "-inf") +
                   ", nu((2m+2)!) = " + std::to_string(fact));
    }
    if (!v)
      continue;
    const std::int64_t w = -*v;
    gap_bound = std::max(gap_bound, static_cast<double>(w - fact));
    gap_digits = std::max(gap_digits, static_cast<double>(w - digit_form));
    gap_reduced = std::max(gap_reduced, static_cast<double>(w - (2 * m + 1)));
    if (w > fact)
      f_bound.fail("m=" + std::to_string(m) + ": -nu(b_m) = " + std::to_string(w) + " > " + std::to_string(fact));
    if (w > digit_form)
      f_digits.fail("m=" + std::to_string(m));
    if (w > 2 * m + 1)
      f_reduced.fail("m=" + std::to_string(m) + ": -nu(b_m) = " + std::to_string(w) + " > 2m+1");
    if (m % 2 == 0 && m >= 2 && w >= fact)
      f_even.fail("m=" + std::to_string(m) + ": equality at even m");
  }
  bound.worst_deviation = gap_bound;
  digits.worst_deviation = gap_digits;
  reduced.worst_deviation = gap_reduced;
  bound.detail = "max of -nu(b_m) - nu((2m+2)!) over nonzero b_m. ";
  digits.detail = "bound 2(m+1) - s(0,m+1), equal to nu((2m+2)!). ";
  reduced.detail = "row-0 case of -nu(beta(n,m)) <= 2m+3-2^(n+2), i.e. 2m+1 for b_m. ";
  odd_eq.detail = "equality -nu(b_m) = nu((2m+2)!) at every odd m. ";
  even_strict.detail = "strict inequality at every even m >= 2 with b_m != 0. ";
  f_bound.finish(bound);
  f_odd.finish(odd_eq);
  f_even.finish(even_strict);
  f_digits.finish(digits);
  f_reduced.finish(reduced);
  return {bound, odd_eq, even_strict, digits, reduced};
}

std::vector<CheckRecord> beta_valuation_check(const ExactTable& table) {
  const std::int64_t last = table.m_done();
  const auto range = range_text("m", 1, last);
  CheckRecord cert = record("beta.digit_sum_certificate", range);
  CheckRecord general = record("beta.general_bound", range);
  CheckRecord band = record("beta.band_sharpening", range);
  CheckRecord endpoint = record("beta.band_sharpening_endpoint_fails", range);
  CheckRecord implies = record("beta.certificate_implies_general", range);
  FailureLog f_cert, f_general, f_band, f_endpoint, f_implies;
  double gap_cert = -1e300, gap_general = -1e300, gap_band = -1e300;
  std::int64_t endpoints = 0;

  for (int n = 0; n < table.row_count(); ++n) {
    const auto row = table.row(n);
    const std::int64_t start = row_start(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::int64_t m = start + static_cast<std::int64_t>(i);
      const std::int64_t p = p_bound(n, m);
      const std::int64_t general_bound = 2 * m + 3 - pow2(n + 2);
      if (p > general_bound)
        f_implies.fail(at_text(n, m) + ": p(n,m) > 2m+3-2^(n+2)");
      const auto v = row[i].valuation();
      if (n >= 1 && m == start) {
        // -1/2 here, so -nu = 1 while 2m + 2 - 2^(n+2) = 0
        ++endpoints;
        if (!v || -*v <= 2 * m + 2 - pow2(n + 2))
          f_endpoint.fail(at_text(n, m) + " satisfies the sharpened bound");
      }
      if (!v)
        continue;
      const std::int64_t w = -*v;
      gap_cert = std::max(gap_cert, static_cast<double>(w - p));
      gap_general = std::max(gap_general, static_cast<double>(w - general_bound));
      if (w > p)
        f_cert.fail(at_text(n, m) + ": -nu = " + std::to_string(w) + " > p = " + std::to_string(p));
      if (w > general_bound)
        f_general.fail(at_text(n, m));
      if (n >= 1 && m >= pow2(n + 1) && m <= pow2(n + 2) - 3) {
        const std::int64_t sharp = 2 * m + 2 - pow2(n + 2);
        gap_band = std::max(gap_band, static_cast<double>(w - sharp));
        if (w > sharp)
          f_band.fail(at_text(n, m));
      }
    }
  }
  cert.worst_deviation = gap_cert;
  general.worst_deviation = gap_general;
  band.worst_deviation = gap_band;
  cert.detail = "max of -nu(beta) - p(n,m) over nonzero entries. ";
  endpoint.detail = std::to_string(endpoints) + " endpoints m = 2^(n+1)-1 checked. ";
  f_cert.finish(cert);
  f_general.finish(general);
  f_band.finish(band);
  f_endpoint.finish(endpoint);
  f_implies.finish(implies);
  if (endpoints == 0) {
    endpoint.passed = false;
    endpoint.detail += "table too small to reach any endpoint";
  }
  return {cert, general, band, endpoint, implies};
}

// --- structure ----------------------------------------------------------------

std::vector<CheckRecord> structural_identity_check(const ExactTable& table) {
  const std::int64_t last = table.m_done();
  const auto range = range_text("m", 1, last);
  const DyadicRational quarter = DyadicRational::from_parts(1, 2);
  const DyadicRational sixteenth = DyadicRational::from_parts(1, 4);
  auto beta = [&](int n, std::int64_t m) -> const DyadicRational& { return table.at(n, m); };
  auto minus_half = [](const DyadicRational& x) { return x.negate().halve(); };

  CheckRecord band = record("structure.band_identity", range);
  CheckRecord shift = record("structure.band_shift", range);
  CheckRecord after = record("structure.after_band", range);
  CheckRecord constant = record("structure.sixteenth", range);
  CheckRecord later = record("structure.later_entries", range);
  FailureLog f_band, f_shift, f_after, f_const, f_later;
  std::int64_t n_band = 0, n_shift = 0, n_after = 0, n_const = 0, n_later = 0;

  for (int n = 0; n < table.row_count(); ++n) {
    const std::int64_t s = row_start(n);
    const std::int64_t q = pow2(n + 2);
    for (std::int64_t m = s; m <= std::min(q - 3, last); ++m) {
      ++n_band;
      if (!(beta(n, m) == minus_half(beta(0, m - s))))
        f_band.fail(at_text(n, m));
      for (int p = 1; p <= 3; ++p) {
        const std::int64_t m2 = m + pow2(n + 1) * (pow2(p) - 1);
        if (m2 > last)
          break;
        ++n_shift;
        if (!(beta(n, m) == beta(n + p, m2)))
          f_shift.fail(at_text(n, m) + " vs " + at_text(n + p, m2));
      }
    }
    if (q - 2 <= last) {
      ++n_after;
      if (!(beta(n, q - 2) == minus_half(beta(0, s) + quarter)))
        f_after.fail(at_text(n, q - 2));
    }
    // The second identity needs n >= 1: beta(0,3) = -1/4, not -3/16.
    if (n >= 1 && q - 1 <= last) {
      ++n_after;
      if (!(beta(n, q - 1) == minus_half(beta(0, s + 1) + quarter)))
        f_after.fail(at_text(n, q - 1));
    }
    if (n >= 1 && q <= last) {
      ++n_const;
      if (!(beta(n, q) == sixteenth))
        f_const.fail(at_text(n, q) + " = " + beta(n, q).to_string());
    }
    // beta(n, 2^(n+2)+2j) = -1/2 beta(0, 2^(n+1)+2j+1), j = 1, 2 for n >= 2; j = 3 for n >= 3
    for (int j = 1; j <= 3; ++j) {
      if (n < (j == 3 ? 3 : 2))
        continue;
      const std::int64_t m = q + 2 * j;
      const std::int64_t m0 = pow2(n + 1) + 2 * j + 1;
      if (std::max(m, m0) > last)
        continue;
      ++n_later;
      if (!(beta(n, m) == minus_half(beta(0, m0))))
        f_later.fail(at_text(n, m));
    }
  }
  band.detail = std::to_string(n_band) + " entries. ";
  shift.detail = std::to_string(n_shift) + " pairs. ";
  after.detail = std::to_string(n_after) + " entries. ";
  constant.detail = std::to_string(n_const) + " entries. ";
  later.detail = std::to_string(n_later) + " entries. ";
  f_band.finish(band);
  f_shift.finish(shift);
  f_after.finish(after);
  f_const.finish(constant);
  f_later.finish(later);
  return {band, shift, after, constant, later};
}

CheckRecord roundtrip_check(const ExactTable& table) {
  CheckRecord r = record("roundtrip.exact", range_text("m", 1, table.m_done()));
  FailureLog log;
  std::int64_t tested = 0;
  for (int n = 0; n < table.row_count(); ++n) {
    const std::int64_t s = row_start(n);
    for (std::int64_t m = s; m <= table.m_done(); ++m) {
      ++tested;
      const auto& value = table.at(n, m);
      const DyadicRational rhs = DyadicRational::from_parts(value.numerator(), static_cast<std::int64_t>(value.exponent()) - 1) +
                                 convolution(table, n, m) + table.at(0, m - s);
      if (!(rhs == table.at(n + 1, m)))
        log.fail(at_text(n, m));
    }
  }
  r.detail = std::to_string(tested) + " entries. ";
  log.finish(r);
  return r;
}

CheckRecord roundtrip_check(const FloatTable& table, double ulps) {
  CheckRecord r = record("roundtrip.float", range_text("m", 1, table.m_done()));
  FailureLog log;
  std::int64_t tested = 0;
  for (int n = 0; n < table.row_count(); ++n) {
    const std::int64_t s = row_start(n);
    for (std::int64_t m = s; m <= table.m_done(); ++m) {
      ++tested;
      const double twice = 2.0 * table.at(n, m);
      const double conv = convolution(table, n, m);
      const double tail = table.at(0, m - s);
      const double lhs = table.at(n + 1, m);
      const double rhs = (twice + conv) + tail;
      const double scale = std::max({std::abs(twice), std::abs(conv), std::abs(tail), std::abs(lhs)});
      if (scale == 0.0)
        continue;
      const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
      const double dev = std::abs(lhs - rhs) / ulp;
      r.worst_deviation = std::max(r.worst_deviation, dev);
      if (dev > ulps)
        log.fail(at_text(n, m) + ": " + std::to_string(dev) + " ulps");
    }
  }
  r.detail = std::to_string(tested) + " entries, tolerance " + std::to_string(ulps) + " ulps of the largest term. ";
  log.finish(r);
  return r;
}

// --- contour-integral oracle -----------------------------------------------------

std::vector<mpz_class> faber_polynomial(int n) {
  if (n < 0 || n > 20)
    throw std::invalid_argument("faber_polynomial: degree index out of range");
  std::vector<mpz_class> p = {0, 1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> sq(2 * p.size() - 1);
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (p[a] == 0)
        continue;
      for (std::size_t c = 0; c < p.size(); ++c)
        sq[a + c] += p[a] * p[c];
    }
    sq[1] += 1;
    p = std::move(sq);
  }
  return p;
}

namespace {

// [t^(m+1)] (1 + r(t))^alpha using binomial terms j <= terms, where r has no
// constant term and t = 1/z.
BigRational residue_coefficient(const std::vector<mpz_class>& r, const BigRational& alpha, std::int64_t degree,
                                std::int64_t terms) {
  const auto len = static_cast<std::size_t>(degree + 1);
  std::vector<mpz_class> power(len);  // r^j, truncated
  power[0] = 1;
  BigRational binom = 1;
  BigRational coeff = 0;
  for (std::int64_t j = 0; j <= terms; ++j) {
    if (j > 0) {
      std::vector<mpz_class> next(len);
      for (std::size_t a = 0; a < len; ++a) {
        if (power[a] == 0)
          continue;
        for (std::size_t c = 1; c < r.size() && a + c < len; ++c)
          if (r[c] != 0)
            next[a + c] += power[a] * r[c];
      }
      power = std::move(next);
      binom *= alpha - BigRational(static_cast<long>(j - 1));
      binom /= BigRational(static_cast<long>(j));
    }
    coeff += binom * BigRational(power[len - 1]);
  }
  return coeff;
}

}  // namespace

BigRational contour_bm(std::int64_t m, int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("contour_bm: depth must be in 1..12");
  if (m < 1 || m > row_start(n) - 2)
    throw std::invalid_argument("contour_bm: need 1 <= m <= 2^(n+1) - 3");
  const auto p = faber_polynomial(n);
  const std::int64_t degree = pow2(n);
  // p_n(z) = z^degree (1 + r(1/z)), r_i = coefficient of w^(degree - i)
  std::vector<mpz_class> r(static_cast<std::size_t>(degree));
  for (std::int64_t i = 1; i < degree; ++i)
    r[i] = p[degree - i];
  BigRational alpha(mpz_class(static_cast<long>(m)), mpz_class(static_cast<long>(degree)));
  alpha.canonicalize();
  const BigRational c = residue_coefficient(r, alpha, m + 1, m + 1);
  if (residue_coefficient(r, alpha, m + 1, m + 2) != c)
    throw std::runtime_error("contour_bm: binomial truncation not stable");
  BigRational out = -c / BigRational(static_cast<long>(m));
  out.canonicalize();
  return out;
}

CheckRecord contour_check(std::span<const DyadicRational> b, int n, std::int64_t limit) {
  require_length(b.size(), limit, "contour_check");
  CheckRecord r = record("contour.n" + std::to_string(n), range_text("m", 1, limit));
  FailureLog log;
  for (std::int64_t m = 1; m <= limit; ++m) {
    const BigRational expected = contour_bm(m, n);
    const BigRational actual = b[m].to_rational();
    if (expected != actual) {
      r.worst_deviation = std::max(r.worst_deviation, std::abs(BigRational(expected - actual).get_d()));
      log.fail("m=" + std::to_string(m) + ": contour " + expected.get_str() + " vs " + actual.get_str());
    }
  }
  log.finish(r);
  return r;
}

// --- float error audit -----------------------------------------------------------

AuditResult float_error_audit(const FloatTable& approx, const ExactTable& exact, std::int64_t m_limit) {
  if (m_limit < 1 || approx.m_done() < m_limit || exact.m_done() < m_limit)
    throw std::invalid_argument("float_error_audit: both tables must reach column " + std::to_string(m_limit));
  AuditResult a;
  const int rows = top_row(m_limit) + 1;
  for (int n = 0; n < rows; ++n) {
    const std::int64_t s = row_start(n);
    for (std::int64_t m = s; m <= m_limit; ++m) {
      const DyadicRational diff = DyadicRational::from_double(approx.at(n, m)) - exact.at(n, m);
      const double err = std::abs(diff.to_double());
      a.max_entry_error = std::max(a.max_entry_error, err);
      if (n == 0 && err > a.max_coeff_error) {
        a.max_coeff_error = err;
        a.worst_m = m - 1;
      }
    }
    double sum = 0.0;
    for (std::int64_t k = s; k <= m_limit - s; ++k)
      sum += std::abs(approx.at(n, k));
    a.row_sums.push_back(sum);
  }
  return a;
}

CheckRecord float_error_audit_record(const AuditResult& audit, std::int64_t m_limit, double tol) {
  CheckRecord r = record("audit.float_vs_exact", range_text("m", 0, m_limit - 1));
  r.worst_deviation = audit.max_coeff_error;
  const bool finite = std::all_of(audit.row_sums.begin(), audit.row_sums.end(),
                                  [](double x) { return std::isfinite(x); });
  r.passed = audit.max_coeff_error <= tol && finite;
  std::ostringstream os;
  os << "max |b~_m - b_m| = " << audit.max_coeff_error << " at m=" << audit.worst_m
     << ", max entry error = " << audit.max_entry_error << ", tolerance " << tol << ", row sums [";
  for (std::size_t i = 0; i < audit.row_sums.size(); ++i)
    os << (i ? ", " : "") << audit.row_sums[i];
  os << "]";
  r.detail = os.str();
  return r;
}

// --- published values ----------------------------------------------------------

std::span<const PublishedValue> published_coefficients() {
  static constexpr PublishedValue kValues[] = {
      {500000, 5.5221313e-8},  {1000000, -4.713883e-8}, {1500000, 8.4477641e-8}, {2000000, -6.437866e-9},
      {2500000, 1.6594295e-8}, {3000000, 8.150385e-9},  {3500000, -3.911993e-9}, {4000000, 2.315128e-9},
      {4500000, -8.87746e-9},  {5000000, 8.0532e-11},
  };
  return kValues;
}

std::span<const PublishedValue> published_area_bounds() {
  static constexpr PublishedValue kValues[] = {
      {500000, 1.72},     {1000000, 1.703927}, {1500000, 1.69702}, {2000000, 1.69388}, {2500000, 1.69096},
      {3000000, 1.68895}, {3500000, 1.6874},   {4000000, 1.68633}, {4500000, 1.68447}, {5000000, 1.68288},
  };
  return kValues;
}

CheckRecord published_value_check(std::span<const double> b, std::span<const std::int64_t> positions, double tol) {
  CheckRecord r = record("published.coefficients", "");
  FailureLog log;
  for (const auto m : positions) {
    const auto table = published_coefficients();
    const auto it = std::find_if(table.begin(), table.end(), [&](const PublishedValue& v) { return v.index == m; });
    if (it == table.end())
      throw std::invalid_argument("published_value_check: no published value at m = " + std::to_string(m));
    require_length(b.size(), m, "published_value_check");
    const double dev = std::abs(b[m] - it->value);
    r.worst_deviation = std::max(r.worst_deviation, dev);
    if (!(dev <= tol)) {
      std::ostringstream os;
      os << "b_" << m << " = " << b[m] << " vs " << it->value;
      log.fail(os.str());
    }
    r.range += (r.range.empty() ? "m in {" : ",") + std::to_string(m);
  }
  r.range += "}";
  log.finish(r);
  return r;
}

}  // namespace msarea
