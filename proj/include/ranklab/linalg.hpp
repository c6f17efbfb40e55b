#pragma once

// Exact dense linear algebra, small sizes only.  Integer matrices go through
// fraction-free (Bareiss) elimination; field solves (Q or Q(i)) use plain
// Gaussian elimination with exact arithmetic.

#include <vector>

#include "ranklab/poly.hpp"
#include "ranklab/rational.hpp"

namespace ranklab {

using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

// Determinant of a square integer matrix by Bareiss one-step elimination.
Int bareiss_det(IntMat m);

// Basis of the right kernel of an integer matrix (rows x cols).  Vectors are
// primitive (content 1), first nonzero entry positive, ordered by the free
// column they correspond to.  Elimination itself is fraction-free.
std::vector<IntVec> int_kernel(const IntMat& m);

int int_rank(IntMat m);

// Divide by content and make the first nonzero entry positive.
// Zero vectors pass through unchanged.
void normalize_primitive(IntVec& v);

// Solve A x = b over the field K (A given column-major as vectors of length
// rows).  Returns nothing when inconsistent; when the solution space is
// positive-dimensional an arbitrary member is returned (free vars set to 0).
template <class K>
std::optional<std::vector<K>> field_solve(std::vector<std::vector<K>> cols,
                                          std::vector<K> b) {
  const size_t rows = b.size();
  const size_t n = cols.size();
  for (const auto& c : cols)
    if (c.size() != rows) throw std::invalid_argument("field_solve: ragged matrix");
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<int> pivot_row_of_col(n, -1);
  size_t prow = 0;
  for (size_t j = 0; j < n && prow < rows; ++j) {
    size_t sel = prow;
    while (sel < rows && scalar_is_zero(cols[j][sel])) ++sel;
    if (sel == rows) continue;
    if (sel != prow) {
      for (size_t jj = 0; jj < n; ++jj) std::swap(cols[jj][sel], cols[jj][prow]);
      std::swap(b[sel], b[prow]);
    }
    K inv = K(1) / cols[j][prow];
    for (size_t jj = j; jj < n; ++jj) cols[jj][prow] = inv * cols[jj][prow];
    b[prow] = inv * b[prow];
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || scalar_is_zero(cols[j][i])) continue;
      K f = cols[j][i];
      for (size_t jj = j; jj < n; ++jj) cols[jj][i] = cols[jj][i] - f * cols[jj][prow];
      b[i] = b[i] - f * b[prow];
    }
    pivot_col_of_row[prow] = static_cast<int>(j);
    pivot_row_of_col[j] = static_cast<int>(prow);
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (!scalar_is_zero(b[i])) return std::nullopt;
  std::vector<K> x(n, K(0));
  for (size_t j = 0; j < n; ++j)
    if (pivot_row_of_col[j] >= 0) x[j] = b[pivot_row_of_col[j]];
  return x;
}

// Rank of a column-major matrix over K.
template <class K>
int field_rank(std::vector<std::vector<K>> cols) {
  if (cols.empty()) return 0;
  const size_t rows = cols[0].size();
  size_t prow = 0;
  for (size_t j = 0; j < cols.size() && prow < rows; ++j) {
    size_t sel = prow;
    while (sel < rows && scalar_is_zero(cols[j][sel])) ++sel;
    if (sel == rows) continue;
    if (sel != prow)
      for (size_t jj = 0; jj < cols.size(); ++jj) std::swap(cols[jj][sel], cols[jj][prow]);
    K inv = K(1) / cols[j][prow];
    for (size_t jj = j; jj < cols.size(); ++jj) cols[jj][prow] = inv * cols[jj][prow];
    for (size_t i = prow + 1; i < rows; ++i) {
      if (scalar_is_zero(cols[j][i])) continue;
      K f = cols[j][i];
      for (size_t jj = j; jj < cols.size(); ++jj) cols[jj][i] = cols[jj][i] - f * cols[jj][prow];
    }
    ++prow;
  }
  return static_cast<int>(prow);
}

}  // namespace ranklab
