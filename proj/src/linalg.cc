#include "ranklab/linalg.hpp"

#include <algorithm>

namespace ranklab {

Int bareiss_det(IntMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("bareiss_det: not square");
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        // one-step fraction-free update; the division is exact
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

void normalize_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  int lead = 0;
  for (const auto& x : v) {
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& x : v) x /= g;
}

namespace {

// Fraction-free row echelon with column pivot tracking.  Returns the echelon
// matrix; pivot_cols[r] is the pivot column of row r.
IntMat echelon(IntMat m, std::vector<int>& pivot_cols) {
  pivot_cols.clear();
  if (m.empty()) return m;
  const size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  size_t prow = 0;
  for (size_t j = 0; j < cols && prow < rows; ++j) {
    size_t sel = prow;
    while (sel < rows && m[sel][j] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != prow) std::swap(m[sel], m[prow]);
    for (size_t i = prow + 1; i < rows; ++i) {
      for (size_t jj = j + 1; jj < cols; ++jj)
        m[i][jj] = (m[i][jj] * m[prow][j] - m[i][j] * m[prow][jj]) / prev;
      m[i][j] = 0;
    }
    prev = m[prow][j];
    pivot_cols.push_back(static_cast<int>(j));
    ++prow;
  }
  return m;
}

}  // namespace

int int_rank(IntMat m) {
  std::vector<int> pc;
  echelon(std::move(m), pc);
  return static_cast<int>(pc.size());
}

std::vector<IntVec> int_kernel(const IntMat& m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("int_kernel: ragged matrix");
  std::vector<int> pivot_cols;
  IntMat e = echelon(m, pivot_cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    // back-substitute over Q, then clear denominators
    std::vector<Rational> x(cols, Rational(0));
    x[fc] = 1;
    for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
      int pc = pivot_cols[r];
      Rational acc(0);
      for (size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) acc += Rational(e[r][j]) * x[j];
      x[pc] = -acc / Rational(e[r][pc]);
    }
    Int den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec v(cols);
    for (size_t j = 0; j < cols; ++j) {
      Rational scaled = x[j] * Rational(den);
      v[j] = scaled.get_num();
    }
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ranklab
