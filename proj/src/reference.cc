// Plain serial evaluation of the backward recursion

#include "msarea/reference.h"

#include "msarea/beta_table.h"

namespace msarea {

template <class V>
ReferenceTable<V>::ReferenceTable(std::int64_t m_target) {
  if (m_target < 0)
    throw std::invalid_argument("ReferenceTable: negative m_target");
  columns_.resize(static_cast<std::size_t>(m_target) + 1);
  for (std::int64_t m = 1; m <= m_target; ++m) {
    const int top = top_row(m);
    auto& column = columns_[m];
    column.resize(top + 1);
    for (int n = top; n >= 0; --n) {
      const std::int64_t start = row_start(n);
      V sum{};
      for (std::int64_t k = start; k <= m - start; ++k)
        sum = sum + get(n, k) * get(n, m - k);
      const V upstream = n + 1 <= top ? column[n + 1] : V{};
      const V diff = upstream - sum - get(0, m - start);
      if constexpr (ValueTraits<V>::mode == Mode::exact)
        column[n] = diff.halve();
      else
        column[n] = 0.5 * diff;
    }
  }
}

template <class V>
V ReferenceTable<V>::get(int n, std::int64_t m) const {
  if (m == 0)
    return V{1};
  if (m < row_start(n))
    return V{};
  return columns_.at(m).at(n);
}

template <class V>
std::vector<V> ReferenceTable<V>::coefficients() const {
  std::vector<V> b;
  for (std::int64_t m = 1; m <= m_target(); ++m)
    b.push_back(columns_[m][0]);
  return b;
}

template class ReferenceTable<double>;
template class ReferenceTable<DyadicRational>;

}  // namespace msarea
