// Backward recursion for beta(n,m) with the column-batch parallel schedule
//
//   beta(n,m) = 1/2 [ beta(n+1,m) - sum_{k=2^(n+1)-1}^{m-2^(n+1)+1} beta(n,k) beta(n,m-k)
//                     - beta(0, m-2^(n+1)+1) ]
//
// Columns are filled from the deepest nontrivial row upwards, left to right.
// A batch of w consecutive columns starting at m0 can fill row n concurrently
// whenever w <= 2^(n+1) - 1: the deepest same-row dependency of column m0+j is
// column m0+j-2^(n+1)+1 < m0, and the row-0 dependency lies in the same range.
// Rows at or below the plan's threshold N are therefore done one row-level at
// a time across the batch, and rows above N column by column.

#pragma once

#include "msarea/beta_table.h"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace msarea {

// An exact entry violated -nu(beta(n,m)) <= p(n,m).
class CertificateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A band entry computed by the identity disagreed with the full recursion.
class BandMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BatchPlan {
  std::int64_t first_column = 1;
  int width = 1;
  int row_threshold = 0;

  // Throws std::invalid_argument unless 1 <= width <= 2^(row_threshold+1) - 1.
  void validate() const;
};

struct EngineOptions {
  // Recompute band entries 2^(n+1)-1 <= m <= 2^(n+2)-3 by the full recursion
  // and compare against -1/2 beta(0, m-2^(n+1)+1).
  bool verify_band = false;
  // Exact mode: check the denominator certificate on every stored entry.
  bool certify = true;
};

struct RunOptions {
  int width = 1;
  int row_threshold = 0;
  int workers = 1;
  EngineOptions engine;
  // Empty path disables checkpointing.
  std::filesystem::path checkpoint;
  std::int64_t checkpoint_interval = 100000;
  // Exact mode refuses m_target above this; numerators grow like 2m bits.
  std::int64_t exact_cap = 4096;
};

// b_m = beta(0, m+1) for m = 0 .. count-1.
template <class V>
struct CoeffStream {
  static constexpr Mode mode = ValueTraits<V>::mode;
  std::vector<V> b;

  std::size_t count() const { return b.size(); }
};

// Convolution sum of the recursion, folded by symmetry: twice the sum over
// k < m/2 plus the middle square for even m. Ascending k. Zero when the range
// is empty (m < 2^(n+2) - 2). Throws DependencyMissing.
template <class V>
V convolution(const BetaTable<V>& table, int n, std::int64_t m);

// One application of the backward recursion. Requires m >= row_start(n).
template <class V>
V compute_entry(const BetaTable<V>& table, int n, std::int64_t m);

// -1/2 beta(0, m-2^(n+1)+1), valid on the band 2^(n+1)-1 <= m <= 2^(n+2)-3.
template <class V>
V band_value(const BetaTable<V>& table, int n, std::int64_t m);

// True when m lies on the band of row n where band_value applies.
constexpr bool in_band(int n, std::int64_t m) { return m >= row_start(n) && m <= (std::int64_t(4) << n) - 3; }

// Computes and stores beta(n,m), then advances row n's completion mark if
// the entry extends it.
template <class V>
void fill_entry(BetaTable<V>& table, int n, std::int64_t m, const EngineOptions& options = {});

// Fills every unfilled nontrivial row of column m from the deepest down to
// row_floor. Reserves storage as needed.
template <class V>
void compute_column(BetaTable<V>& table, std::int64_t m, int row_floor, const EngineOptions& options = {});

// Runs one batch of plan.width columns (clipped at last_column).
template <class V>
void run_batch(BetaTable<V>& table, const BatchPlan& plan, std::int64_t last_column, int workers,
               const EngineOptions& options = {});

// Extends the table through column m_target and returns b_0 .. b_{m_target-1}.
// Output is identical for every worker count and valid plan.
template <class V>
CoeffStream<V> run(BetaTable<V>& table, std::int64_t m_target, const RunOptions& options = {});

// b_0 .. b_{count-1} read from a table with m_done >= count.
template <class V>
CoeffStream<V> stream_of(const BetaTable<V>& table, std::int64_t count);

}  // namespace msarea
