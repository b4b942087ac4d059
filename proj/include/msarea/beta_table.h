// Storage for the nontrivial coefficients beta(n,m) of p_n(psi(z))

#pragma once

#include "msarea/dyadic.h"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msarea {

enum class Mode : std::uint8_t { float64 = 0, exact = 1 };

inline const char* to_string(Mode mode) { return mode == Mode::float64 ? "float" : "exact"; }

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<double> {
  static constexpr Mode mode = Mode::float64;
};

template <>
struct ValueTraits<DyadicRational> {
  static constexpr Mode mode = Mode::exact;
};

// A coefficient needed by the recursion has not been computed yet.
class DependencyMissing : public std::runtime_error {
 public:
  DependencyMissing(int n, std::int64_t m)
      : std::runtime_error("beta(" + std::to_string(n) + "," + std::to_string(m) + ") is not computed yet"),
        row(n),
        column(m) {}
  int row;
  std::int64_t column;
};

// First nontrivial column of row n: 2^(n+1) - 1.
constexpr std::int64_t row_start(int n) { return (std::int64_t(2) << n) - 1; }

// Deepest nontrivial row of column m >= 1: floor(log2(m+1)) - 1.
int top_row(std::int64_t m);

// Row n holds a dense run of values for columns row_start(n)..m_done. Column 0
// (beta(n,0) = 1) and the trivial zeros beta(n,m), 1 <= m <= 2^(n+1) - 2,
// n >= 1, are answered by rule and never stored.
template <class V>
class BetaTable {
 public:
  using value_type = V;
  static constexpr Mode mode = ValueTraits<V>::mode;

  BetaTable() = default;

  // Rebuilds a table from stored rows, e.g. after loading a checkpoint.
  // Throws std::invalid_argument if the row lengths do not match m_done.
  static BetaTable from_rows(std::vector<std::vector<V>> rows, std::int64_t m_done);

  // Every column <= m_done is complete.
  std::int64_t m_done() const { return m_done_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  // Highest column through which row n is complete.
  std::int64_t filled_through(int n) const;

  // True when beta(n,m) is answered by rule or already stored.
  bool known(int n, std::int64_t m) const;

  // beta(n,m); beta(0,j) for j < 0 is 0. Throws DependencyMissing.
  const V& at(int n, std::int64_t m) const;

  // Stored entries of row n through m_done, the first at column row_start(n).
  std::span<const V> row(int n) const;
  // Stored entries of row n through the reserved extent, computed or not.
  std::span<const V> reserved_row(int n) const { return rows_.at(n).values; }

  // Engine-side mutation: grow storage so every nontrivial cell of columns
  // <= last_column exists, then write cells and advance completion marks.
  void reserve_columns(std::int64_t last_column);
  V& slot(int n, std::int64_t m) { return rows_[n].values[m - row_start(n)]; }
  void mark_filled(int n, std::int64_t through) { rows_[n].filled_through = through; }
  void set_m_done(std::int64_t m) { m_done_ = m; }

 private:
  struct Row {
    std::vector<V> values;
    std::int64_t filled_through = 0;
  };

  std::vector<Row> rows_;
  std::int64_t m_done_ = 0;
};

using FloatTable = BetaTable<double>;
using ExactTable = BetaTable<DyadicRational>;

extern template class BetaTable<double>;
extern template class BetaTable<DyadicRational>;

}  // namespace msarea
