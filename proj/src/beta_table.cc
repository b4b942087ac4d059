// Storage for the nontrivial coefficients beta(n,m) of p_n(psi(z))

#include "msarea/beta_table.h"

#include <bit>

namespace msarea {

int top_row(std::int64_t m) {
  if (m < 1)
    throw std::invalid_argument("top_row: column must be positive");
  return std::bit_width(static_cast<std::uint64_t>(m) + 1) - 2;
}

template <class V>
BetaTable<V> BetaTable<V>::from_rows(std::vector<std::vector<V>> rows, std::int64_t m_done) {
  if (m_done < 0)
    throw std::invalid_argument("from_rows: negative m_done");
  const int expected_rows = m_done >= 1 ? top_row(m_done) + 1 : 0;
  if (static_cast<int>(rows.size()) != expected_rows)
    throw std::invalid_argument("from_rows: row count does not match m_done");
  BetaTable t;
  for (int n = 0; n < expected_rows; ++n) {
    if (static_cast<std::int64_t>(rows[n].size()) != m_done - row_start(n) + 1)
      throw std::invalid_argument("from_rows: row " + std::to_string(n) + " has the wrong length");
    t.rows_.push_back(Row{std::move(rows[n]), m_done});
  }
  t.m_done_ = m_done;
  return t;
}

template <class V>
std::int64_t BetaTable<V>::filled_through(int n) const {
  if (n < static_cast<int>(rows_.size()))
    return rows_[n].filled_through;
  return row_start(n) - 1;
}

template <class V>
bool BetaTable<V>::known(int n, std::int64_t m) const {
  if (m <= 0 || m < row_start(n))
    return true;
  return m <= filled_through(n);
}

template <class V>
const V& BetaTable<V>::at(int n, std::int64_t m) const {
  static const V zero{};
  static const V one{1};
  if (m == 0)
    return one;
  if (m < row_start(n))
    return zero;
  if (m > filled_through(n))
    throw DependencyMissing(n, m);
  return rows_[n].values[m - row_start(n)];
}

template <class V>
std::span<const V> BetaTable<V>::row(int n) const {
  const auto& values = rows_.at(n).values;
  const auto len = std::max<std::int64_t>(0, m_done_ - row_start(n) + 1);
  return std::span<const V>(values.data(), static_cast<size_t>(len));
}

template <class V>
void BetaTable<V>::reserve_columns(std::int64_t last_column) {
  if (last_column < 1)
    return;
  const int deepest = top_row(last_column);
  for (int n = static_cast<int>(rows_.size()); n <= deepest; ++n)
    rows_.push_back(Row{{}, row_start(n) - 1});
  for (int n = 0; n <= deepest; ++n) {
    const auto len = static_cast<size_t>(last_column - row_start(n) + 1);
    if (rows_[n].values.size() < len)
      rows_[n].values.resize(len);
  }
}

template class BetaTable<double>;
template class BetaTable<DyadicRational>;

}  // namespace msarea
