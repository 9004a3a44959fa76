#ifndef GINCALC_LINALG_HPP
#define GINCALC_LINALG_HPP

#include <vector>

namespace gincalc {

/// In-place reduced row echelon form over a field; returns the rank.
/// Pivoting is positional (first nonzero entry), so the result is
/// deterministic for exact arithmetic.
template <class F>
int row_reduce(std::vector<std::vector<F>>& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    F inv = m[r][c].one_like() / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Basis of {x : m x = 0}, one vector per free column, deterministic.
template <class F>
std::vector<std::vector<F>> null_space(std::vector<std::vector<F>> m, const F& sample) {
  const size_t cols = m.empty() ? 0 : m[0].size();
  row_reduce(m);
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c)
    if (!m[r][c].is_zero()) pivot_of_col[c] = static_cast<int>(r++);
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] != -1) continue;
    std::vector<F> v(cols, sample.zero_like());
    v[free] = sample.one_like();
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] != -1)
        v[c] = -m[static_cast<size_t>(pivot_of_col[c])][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant-nonzero test via elimination on a copy.
template <class F>
bool is_invertible(std::vector<std::vector<F>> m) {
  if (m.empty() || m.size() != m[0].size()) return false;
  return row_reduce(m) == static_cast<int>(m.size());
}

}  // namespace gincalc

#endif
