// Backward recursion for beta(n,m) with the column-batch parallel schedule

#include "msarea/engine.h"

#include "msarea/checkpoint.h"
#include "msarea/combinatorics.h"

#include <algorithm>
#include <bit>
#include <exception>
#include <string>

namespace msarea {
namespace {

// sum_{k=start}^{k_hi} beta(n,k) beta(n,m-k); row[i] holds beta(n, start+i).
double pair_sum(std::span<const double> row, std::int64_t start, std::int64_t m, std::int64_t k_hi) {
  const double* lo = row.data();
  const double* hi = row.data() + (m - 2 * start);
  const std::int64_t count = k_hi - start + 1;
  double acc = 0.0;
  for (std::int64_t i = 0; i < count; ++i)
    acc += lo[i] * hi[-i];
  return acc;
}

// Exact version: scale every product to the largest denominator in the range
// and accumulate integers.
DyadicRational pair_sum(std::span<const DyadicRational> row, std::int64_t start, std::int64_t m,
                        std::int64_t k_hi) {
  const std::int64_t count = k_hi - start + 1;
  const DyadicRational* lo = row.data();
  const DyadicRational* hi = row.data() + (m - 2 * start);
  std::uint64_t top = 0;
  bool any = false;
  for (std::int64_t i = 0; i < count; ++i) {
    if (lo[i].is_zero() || hi[-i].is_zero())
      continue;
    top = std::max(top, lo[i].exponent() + hi[-i].exponent());
    any = true;
  }
  if (!any)
    return {};
  thread_local mpz_class acc, term;
  acc = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& a = lo[i];
    const auto& b = hi[-i];
    if (a.is_zero() || b.is_zero())
      continue;
    const auto shift = top - a.exponent() - b.exponent();
    if (shift == 0) {
      mpz_addmul(acc.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    } else {
      mpz_mul(term.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), shift);
      acc += term;
    }
  }
  return DyadicRational::from_parts(acc, static_cast<std::int64_t>(top));
}

double twice(double x) { return 2.0 * x; }
DyadicRational twice(const DyadicRational& x) {
  return DyadicRational::from_parts(x.numerator(), static_cast<std::int64_t>(x.exponent()) - 1);
}

double half(double x) { return 0.5 * x; }
DyadicRational half(const DyadicRational& x) { return x.halve(); }

bool same_value(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }
bool same_value(const DyadicRational& a, const DyadicRational& b) { return a == b; }

std::string describe(double x) { return std::to_string(x); }
std::string describe(const DyadicRational& x) { return x.to_string(); }

template <class V>
void certify(int n, std::int64_t m, const V& value) {
  if constexpr (ValueTraits<V>::mode == Mode::exact) {
    const auto v = value.valuation();
    if (v && -*v > p_bound(n, m))
      throw CertificateViolation("beta(" + std::to_string(n) + "," + std::to_string(m) + ") = " + value.to_string() +
                                 " exceeds the denominator bound 2^" + std::to_string(p_bound(n, m)));
  }
}

// Computes beta(n,m) into its slot without touching completion marks, so
// concurrent workers may call it for distinct cells of one row.
template <class V>
void store_entry(BetaTable<V>& table, int n, std::int64_t m, const EngineOptions& options) {
  V value;
  if (in_band(n, m)) {
    value = band_value(table, n, m);
    if (options.verify_band) {
      const V full = compute_entry(table, n, m);
      if (!same_value(full, value))
        throw BandMismatch("band identity fails at beta(" + std::to_string(n) + "," + std::to_string(m) +
                           "): " + describe(value) + " vs " + describe(full));
    }
  } else {
    value = compute_entry(table, n, m);
  }
  if (options.certify)
    certify(n, m, value);
  table.slot(n, m) = std::move(value);
}

}  // namespace

void BatchPlan::validate() const {
  if (first_column < 1)
    throw std::invalid_argument("batch plan: first column must be >= 1");
  if (row_threshold < 0 || row_threshold > 40)
    throw std::invalid_argument("batch plan: row threshold must be in 0..40");
  if (width < 1 || width > row_start(row_threshold))
    throw std::invalid_argument("batch plan: width " + std::to_string(width) + " exceeds 2^(" +
                                std::to_string(row_threshold) + "+1) - 1 = " + std::to_string(row_start(row_threshold)));
}

template <class V>
V convolution(const BetaTable<V>& table, int n, std::int64_t m) {
  const std::int64_t start = row_start(n);
  if (m < 2 * start)
    return V{};
  const std::int64_t deepest = m - start;
  if (table.filled_through(n) < deepest)
    throw DependencyMissing(n, table.filled_through(n) + 1);
  const auto row = table.reserved_row(n);
  if (m % 2 == 1)
    return twice(pair_sum(row, start, m, (m - 1) / 2));
  const V& middle = row[m / 2 - start];
  const V pairs = m / 2 - 1 >= start ? pair_sum(row, start, m, m / 2 - 1) : V{};
  return twice(pairs) + middle * middle;
}

template <class V>
V compute_entry(const BetaTable<V>& table, int n, std::int64_t m) {
  const std::int64_t start = row_start(n);
  if (m < start)
    throw std::invalid_argument("compute_entry: beta(" + std::to_string(n) + "," + std::to_string(m) +
                                ") is a trivial entry");
  const V& upstream = table.at(n + 1, m);
  const V conv = convolution(table, n, m);
  const V& tail = table.at(0, m - start);
  return half(upstream - conv - tail);
}

template <class V>
V band_value(const BetaTable<V>& table, int n, std::int64_t m) {
  if (!in_band(n, m))
    throw std::invalid_argument("band_value: column outside the band of row " + std::to_string(n));
  return half(V{} - table.at(0, m - row_start(n)));
}

template <class V>
void fill_entry(BetaTable<V>& table, int n, std::int64_t m, const EngineOptions& options) {
  table.reserve_columns(m);
  store_entry(table, n, m, options);
  if (table.filled_through(n) == m - 1)
    table.mark_filled(n, m);
}

template <class V>
void compute_column(BetaTable<V>& table, std::int64_t m, int row_floor, const EngineOptions& options) {
  if (m < 1)
    throw std::invalid_argument("compute_column: column must be >= 1");
  table.reserve_columns(m);
  for (int n = top_row(m); n >= row_floor; --n)
    if (table.filled_through(n) < m)
      fill_entry(table, n, m, options);
  if (row_floor == 0 && table.m_done() == m - 1)
    table.set_m_done(m);
}

template <class V>
void run_batch(BetaTable<V>& table, const BatchPlan& plan, std::int64_t last_column, int workers,
               const EngineOptions& options) {
  plan.validate();
  const std::int64_t first = plan.first_column;
  if (first != table.m_done() + 1)
    throw std::invalid_argument("run_batch: batch must start right after the last complete column");
  const std::int64_t last = std::min(first + plan.width - 1, last_column);
  if (last < first)
    return;
  table.reserve_columns(last);

  const int deepest = top_row(last);
  const int threshold = plan.row_threshold;
  if (deepest >= threshold) {
    std::exception_ptr error;
#pragma omp parallel num_threads(std::max(workers, 1)) if (workers > 1 && plan.width > 1)
    {
      for (int n = deepest; n >= threshold; --n) {
        const std::int64_t begin = std::max(first, row_start(n));
#pragma omp for schedule(static)
        for (std::int64_t m = begin; m <= last; ++m) {
          try {
            store_entry(table, n, m, options);
          } catch (...) {
#pragma omp critical(msarea_engine_error)
            if (!error)
              error = std::current_exception();
          }
        }
#pragma omp single
        table.mark_filled(n, last);
      }
    }
    if (error)
      std::rethrow_exception(error);
  }
  for (std::int64_t m = first; m <= last; ++m)
    compute_column(table, m, 0, options);
}

template <class V>
CoeffStream<V> run(BetaTable<V>& table, std::int64_t m_target, const RunOptions& options) {
  BatchPlan plan{table.m_done() + 1, options.width, options.row_threshold};
  plan.validate();
  if (options.workers < 1)
    throw std::invalid_argument("run: worker count must be >= 1");
  if (m_target < 0)
    throw std::invalid_argument("run: m_target must be >= 0");
  if (ValueTraits<V>::mode == Mode::exact && m_target > options.exact_cap)
    throw std::invalid_argument("run: exact mode is capped at m_target <= " + std::to_string(options.exact_cap));
  const bool checkpointing = !options.checkpoint.empty() && options.checkpoint_interval > 0;

  while (table.m_done() < m_target) {
    const std::int64_t before = table.m_done();
    plan.first_column = before + 1;
    run_batch(table, plan, m_target, options.workers, options.engine);
    const std::int64_t after = table.m_done();
    if (checkpointing &&
        (after / options.checkpoint_interval > before / options.checkpoint_interval || after == m_target))
      checkpoint_save(table, options.checkpoint);
  }
  return stream_of(table, m_target);
}

template <class V>
CoeffStream<V> stream_of(const BetaTable<V>& table, std::int64_t count) {
  if (count < 0 || count > table.m_done())
    throw std::invalid_argument("stream_of: table holds only " + std::to_string(table.m_done()) + " coefficients");
  CoeffStream<V> s;
  if (count == 0)
    return s;
  const auto row = table.row(0);
  s.b.assign(row.begin(), row.begin() + count);
  return s;
}

#define MSAREA_INSTANTIATE(V)                                                                         \
  template V convolution(const BetaTable<V>&, int, std::int64_t);                                    \
  template V compute_entry(const BetaTable<V>&, int, std::int64_t);                                  \
  template V band_value(const BetaTable<V>&, int, std::int64_t);                                     \
  template void fill_entry(BetaTable<V>&, int, std::int64_t, const EngineOptions&);                  \
  template void compute_column(BetaTable<V>&, std::int64_t, int, const EngineOptions&);              \
  template void run_batch(BetaTable<V>&, const BatchPlan&, std::int64_t, int, const EngineOptions&); \
  template CoeffStream<V> run(BetaTable<V>&, std::int64_t, const RunOptions&);                       \
  template CoeffStream<V> stream_of(const BetaTable<V>&, std::int64_t);

MSAREA_INSTANTIATE(double)
MSAREA_INSTANTIATE(DyadicRational)

#undef MSAREA_INSTANTIATE

}  // namespace msarea
