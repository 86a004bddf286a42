#pragma once

#include <optional>
#include <vector>

#include "grasscodim/gf.hpp"

namespace grasscodim {

// Dense matrix over a finite field, row-major.
struct Matrix {
  const Field* field = nullptr;
  std::size_t cols = 0;
  std::vector<std::vector<Fe>> rows;

  void add_row(std::vector<Fe> r) { rows.push_back(std::move(r)); }
};

// Row-echelon rank with deterministic pivoting: for each column, the first
// row (top to bottom) with a nonzero entry becomes the pivot.
inline std::size_t rank(Matrix m) {
  const Field& f = *m.field;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows.size() && f.is_zero(m.rows[pivot][c])) ++pivot;
    if (pivot == m.rows.size()) continue;
    std::swap(m.rows[r], m.rows[pivot]);
    Fe inv = f.inv(m.rows[r][c]);
    for (std::size_t j = c; j < m.cols; ++j) m.rows[r][j] = f.mul(m.rows[r][j], inv);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      if (i == r || f.is_zero(m.rows[i][c])) continue;
      Fe factor = m.rows[i][c];
      for (std::size_t j = c; j < m.cols; ++j)
        m.rows[i][j] = f.sub(m.rows[i][j], f.mul(factor, m.rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Solves A x = b if consistent; A given column-wise is awkward here, so the
// caller passes the augmented system row-wise.  Returns a solution (free
// variables set to zero) or nullopt.
inline std::optional<std::vector<Fe>> solve(Matrix a, const std::vector<Fe>& b) {
  const Field& f = *a.field;
  for (std::size_t i = 0; i < a.rows.size(); ++i) a.rows[i].push_back(b[i]);
  std::size_t aug = a.cols + 1;
  std::vector<std::optional<std::size_t>> pivot_col(a.rows.size());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows.size(); ++c) {
    std::size_t p = r;
    while (p < a.rows.size() && f.is_zero(a.rows[p][c])) ++p;
    if (p == a.rows.size()) continue;
    std::swap(a.rows[r], a.rows[p]);
    Fe inv = f.inv(a.rows[r][c]);
    for (std::size_t j = c; j < aug; ++j) a.rows[r][j] = f.mul(a.rows[r][j], inv);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (i == r || f.is_zero(a.rows[i][c])) continue;
      Fe factor = a.rows[i][c];
      for (std::size_t j = c; j < aug; ++j)
        a.rows[i][j] = f.sub(a.rows[i][j], f.mul(factor, a.rows[r][j]));
    }
    pivot_col[r] = c;
    ++r;
  }
  for (std::size_t i = r; i < a.rows.size(); ++i)
    if (!f.is_zero(a.rows[i][a.cols])) return std::nullopt;  // inconsistent
  std::vector<Fe> x(a.cols, f.zero());
  for (std::size_t i = 0; i < r; ++i) x[*pivot_col[i]] = a.rows[i][a.cols];
  return x;
}

}  // namespace grasscodim
