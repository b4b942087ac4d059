// Plain serial evaluation of the backward recursion
//
// One entry at a time, column by column, deepest row first. The convolution
// runs over its full index range without folding, and band entries go through
// the recursion like every other entry. Kept as the baseline that the
// batched engine is checked and benchmarked against.

#pragma once

#include "msarea/dyadic.h"

#include <cstdint>
#include <vector>

namespace msarea {

template <class V>
class ReferenceTable {
 public:
  // Computes every nontrivial beta(n,m) with m <= m_target.
  explicit ReferenceTable(std::int64_t m_target);

  std::int64_t m_target() const { return static_cast<std::int64_t>(columns_.size()) - 1; }
  // beta(n,m) including trivial entries; beta(0,j) = 0 for j < 0.
  V get(int n, std::int64_t m) const;
  // b_0 .. b_{m_target-1}
  std::vector<V> coefficients() const;

 private:
  // columns_[m][n] = beta(n,m) for n <= top_row(m)
  std::vector<std::vector<V>> columns_;
};

extern template class ReferenceTable<double>;
extern template class ReferenceTable<DyadicRational>;

}  // namespace msarea
