// Independent checks on computed coefficients
//
// Every check returns a CheckRecord; a ValidationReport collects them. Oracle
// arithmetic is exact throughout; float values only ever appear as the
// subject under test.

#pragma once

#include "msarea/beta_table.h"
#include "msarea/dyadic.h"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace msarea {

struct CheckRecord {
  std::string name;
  std::string range;
  double worst_deviation = 0.0;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  bool passed() const;
  std::string to_json() const;
};

// --- zero families -------------------------------------------------------

// m = (2k+1) 2^v with k+3 <= 2^v, or m = 2^(n+1) with n >= 1.
bool in_zero_family(std::int64_t m);
std::vector<std::int64_t> known_zero_indices(std::int64_t limit);

// b_m must vanish at every family index m <= limit: exactly, or within tol.
CheckRecord known_zero_check(std::span<const DyadicRational> b, std::int64_t limit);
CheckRecord known_zero_check(std::span<const double> b, std::int64_t limit, double tol = 1e-14);

// --- closed forms --------------------------------------------------------

// x (x-1) ... (x-k+1) / k!
BigRational generalized_binomial(const BigRational& x, std::int64_t k);

// Position convention for the three closed-form families. as_printed uses
// m = (2^v - 1) 2^v, (2^v + 1) 2^v, (2^v + 3) 2^v; doubled_odd_part uses
// m = (2^(v+1) - 1) 2^v, (2^(v+1) + 1) 2^v, (2^(v+1) + 3) 2^v.
enum class ClosedFormIndexing { as_printed, doubled_odd_part };

struct ClosedFormCase {
  int family = 0;  // 1, 2 or 3
  int nu = 0;
};

std::optional<ClosedFormCase> closed_form_case(std::int64_t m, ClosedFormIndexing indexing);

// Evaluates the matching closed form. Throws std::invalid_argument for a
// non-qualifying m.
BigRational closed_form_bm(std::int64_t m, ClosedFormIndexing indexing = ClosedFormIndexing::as_printed);

// One record per family: agreement of the closed form with the computed b_m
// at every qualifying m <= limit. Disagreements fail the record.
std::vector<CheckRecord> closed_form_check(std::span<const DyadicRational> b, std::int64_t limit,
                                           ClosedFormIndexing indexing);

// --- valuations ----------------------------------------------------------

// -nu(b_m) <= nu((2m+2)!) for all m <= limit, equality at every odd m and
// strict inequality at every even m >= 2 with b_m != 0; the sum-of-digits
// form 2(m+1) - s(0,m+1) of the same bound; and the n = 0 reduction
// -nu(b_m) <= 2m + 1 of the general beta bound.
std::vector<CheckRecord> valuation_check(std::span<const DyadicRational> b, std::int64_t limit);

// Denominator bounds on the whole table: -nu(beta(n,m)) <= p(n,m);
// -nu <= 2m + 3 - 2^(n+2); the sharper 2m + 2 - 2^(n+2) on
// 2^(n+1) <= m <= 2^(n+2) - 3 (n >= 1) and its failure at m = 2^(n+1) - 1;
// and p(n,m) <= 2m + 3 - 2^(n+2) pointwise.
std::vector<CheckRecord> beta_valuation_check(const ExactTable& table);

// --- structure -----------------------------------------------------------

// Band identity and its diagonal shift (p <= 3), the two entries right after
// the band, beta(n,2^(n+2)) = 1/16, and the three entries at 2^(n+2)+2,
// 2^(n+2)+4, 2^(n+2)+6. Exact equality.
std::vector<CheckRecord> structural_identity_check(const ExactTable& table);

// beta(n+1,m) = 2 beta(n,m) + conv(n,m) + beta(0,m-2^(n+1)+1) on every entry.
CheckRecord roundtrip_check(const ExactTable& table);
// Float version: within ulps units in the last place of the largest term.
CheckRecord roundtrip_check(const FloatTable& table, double ulps = 4.0);

// --- contour-integral oracle ----------------------------------------------

// Coefficients of p_n(w), index = power; p_0 = w, p_n = p_{n-1}^2 + w.
std::vector<mpz_class> faber_polynomial(int n);

// b_m = -(1/m) [z^-1] p_n(z)^(m/2^n), by expanding p_n = z^(2^n)(1 + r) and
// (1 + r)^(m/2^n) as a truncated binomial series. Requires
// 1 <= m <= 2^(n+1) - 3.
BigRational contour_bm(std::int64_t m, int n);

CheckRecord contour_check(std::span<const DyadicRational> b, int n, std::int64_t limit);

// --- float error audit ----------------------------------------------------

struct AuditResult {
  double max_coeff_error = 0.0;
  std::int64_t worst_m = 0;
  double max_entry_error = 0.0;
  // sum |beta(n,k)| over the convolution range of column M, per row n.
  std::vector<double> row_sums;
};

// Compares float and exact tables over columns <= m_limit; coefficient
// errors cover b_0 .. b_{m_limit-1}.
AuditResult float_error_audit(const FloatTable& approx, const ExactTable& exact, std::int64_t m_limit);
CheckRecord float_error_audit_record(const AuditResult& audit, std::int64_t m_limit, double tol = 1e-13);

// --- published values ------------------------------------------------------

struct PublishedValue {
  std::int64_t index;
  double value;
};

// Computed b_m at positions without a known closed form.
std::span<const PublishedValue> published_coefficients();
// Published upper bounds A_N.
std::span<const PublishedValue> published_area_bounds();

// Compares b_m to the published values at the requested positions. Throws
// std::invalid_argument if the stream is too short or a position is unknown.
CheckRecord published_value_check(std::span<const double> b, std::span<const std::int64_t> positions,
                                  double tol = 1e-13);

}  // namespace msarea
