#include "ranklab/apolarity.hpp"

#include <stdexcept>

namespace ranklab {

namespace {

// falling factorial n (n-1) ... (n-k+1)
Int ff(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace

IntVec apolar_action(const BinaryForm& g, const BinaryForm& f) {
  const int s = g.degree(), d = f.degree();
  if (s > d) throw std::invalid_argument("apolar_action: deg g > deg f");
  // X^(s-j) Y^j sends x^(d-k) y^k to ff(d-k, s-j) ff(k, j) x^(d-k-s+j) y^(k-j);
  // collecting x^(d-s-m) y^m picks k = m + j.
  IntVec out(d - s + 1, Int(0));
  for (int m = 0; m <= d - s; ++m)
    for (int j = 0; j <= s; ++j)
      out[m] += g.coeffs()[j] * ff(d - m - j, s - j) * ff(m + j, j) * f.coeffs()[m + j];
  return out;
}

IntMat catalecticant_matrix(const BinaryForm& f, int s) {
  const int d = f.degree();
  if (s < 1 || s > d) throw std::invalid_argument("catalecticant_matrix: need 1 <= s <= d");
  IntMat a(d - s + 1, IntVec(s + 1, Int(0)));
  for (int m = 0; m <= d - s; ++m)
    for (int j = 0; j <= s; ++j)
      a[m][j] = ff(d - m - j, s - j) * ff(m + j, j) * f.coeffs()[m + j];
  return a;
}

std::vector<BinaryForm> catalecticant_kernel(const BinaryForm& f, int s) {
  const int d = f.degree();
  if (s < 1 || s > d + 1) throw std::invalid_argument("catalecticant_kernel: need 1 <= s <= d+1");
  std::vector<BinaryForm> out;
  if (s == d + 1) {
    // a degree-(d+1) operator kills every degree-d form
    for (int j = 0; j <= s; ++j) {
      IntVec v(s + 1, Int(0));
      v[j] = 1;
      out.push_back(BinaryForm::from_ints(s, std::move(v)));
    }
    return out;
  }
  for (auto& v : int_kernel(catalecticant_matrix(f, s)))
    out.push_back(BinaryForm::from_ints(s, std::move(v)));
  return out;
}

ApolarProfile::ApolarProfile(BinaryForm f) : f_(std::move(f)) {
  kernels_.reserve(f_.degree() + 1);
  for (int s = 1; s <= f_.degree() + 1; ++s)
    kernels_.push_back(catalecticant_kernel(f_, s));
}

const std::vector<BinaryForm>& ApolarProfile::kernel(int s) const {
  if (s < 1 || s > degree() + 1)
    throw std::out_of_range("kernel degree out of range");
  return kernels_[s - 1];
}

int ApolarProfile::min_kernel_degree() const {
  for (int s = 1; s <= degree() + 1; ++s)
    if (kernel_dim(s) > 0) return s;
  throw std::logic_error("unreachable: kernel at d+1 is the full space");
}

std::pair<BinaryForm, BinaryForm> apolar_generators(const ApolarProfile& p) {
  const int d = p.degree();
  const int r1 = p.min_kernel_degree();
  const int r2 = d + 2 - r1;
  const BinaryForm g1 = p.kernel(r1).front();
  // columns: X^i Y^(r2-r1-i) g1 for all i, then candidates from the kernel
  std::vector<std::vector<Rational>> span_cols;
  for (int i = 0; i <= r2 - r1; ++i) {
    IntVec shifted(r2 + 1, Int(0));
    for (int j = 0; j <= r1; ++j) shifted[j + (r2 - r1 - i)] += g1.coeffs()[j];
    // X^i Y^(r2-r1-i) * g1: multiplying by x^i y^(r2-r1-i) shifts the
    // exponent of y by r2-r1-i
    std::vector<Rational> col(r2 + 1);
    for (int j = 0; j <= r2; ++j) col[j] = Rational(shifted[j]);
    span_cols.push_back(std::move(col));
  }
  const int base_rank = field_rank(span_cols);
  for (const auto& cand : p.kernel(r2)) {
    auto cols = span_cols;
    std::vector<Rational> col(r2 + 1);
    for (int j = 0; j <= r2; ++j) col[j] = Rational(cand.coeffs()[j]);
    cols.push_back(std::move(col));
    if (field_rank(cols) > base_rank) return {g1, cand};
  }
  throw std::logic_error("apolar ideal has a second generator at degree d+2-r1");
}

namespace {

std::optional<BinaryForm> combination_if_squarefree(const std::vector<BinaryForm>& basis,
                                                    const std::vector<Int>& t) {
  const int s = basis.front().degree();
  IntVec v(s + 1, Int(0));
  bool nonzero = false;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (t[i] == 0) continue;
    for (int j = 0; j <= s; ++j) v[j] += t[i] * basis[i].coeffs()[j];
  }
  for (const auto& z : v)
    if (z != 0) nonzero = true;
  if (!nonzero) return std::nullopt;
  BinaryForm g = BinaryForm::from_ints(s, std::move(v));
  if (is_square_free(g)) return g;
  return std::nullopt;
}

}  // namespace

std::optional<BinaryForm> squarefree_member(const std::vector<BinaryForm>& basis) {
  if (basis.empty()) return std::nullopt;
  const int k = static_cast<int>(basis.size());
  const int s = basis.front().degree();
  // cheap passes first so reported witnesses stay small
  for (const auto& g : basis)
    if (is_square_free(g)) return g;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<Int> t(k, Int(0));
      t[i] = 1;
      t[j] = 1;
      if (auto g = combination_if_squarefree(basis, t)) return g;
      t[j] = -1;
      if (auto g = combination_if_squarefree(basis, t)) return g;
    }
  // decisive grid: {0..2s-2}^(k-1) on each patch t_m = 1
  const int g = 2 * s - 1;  // grid size per axis
  for (int m = 0; m < k; ++m) {
    std::vector<Int> t(k, Int(0));
    t[m] = 1;
    std::vector<int> idx(k, 0);
    while (true) {
      bool carry = true;
      if (auto w = combination_if_squarefree(basis, t)) return w;
      for (int j = 0; carry && j < k; ++j) {
        if (j == m) continue;
        carry = false;
        ++idx[j];
        if (idx[j] >= g) {
          idx[j] = 0;
          carry = true;
        }
        t[j] = idx[j];
      }
      if (carry) break;
    }
  }
  return std::nullopt;
}

ComplexRank complex_rank(const ApolarProfile& p) {
  for (int s = 1; s <= p.degree() + 1; ++s) {
    if (p.kernel_dim(s) == 0) continue;
    if (auto w = squarefree_member(p.kernel(s))) return {s, *w};
  }
  throw std::logic_error("unreachable: X^(d+1) - Y^(d+1) is square-free and apolar");
}

}  // namespace ranklab
