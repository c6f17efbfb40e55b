#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranklab::oracle {
namespace {

bool is_zero(const QVec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

// univariate p(t) = g(t, 1), highest power first trimmed to actual degree
std::vector<Rational> dehom(const QVec& g) {
  std::vector<Rational> p;
  bool leading = true;
  for (const auto& c : g) {
    if (leading && c == 0) continue;
    leading = false;
    p.push_back(c);
  }
  return p;  // empty for the zero vector
}

std::vector<Rational> deriv(const std::vector<Rational>& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<Rational> q;
  for (int i = 0; i < n; ++i) q.push_back(p[i] * (n - i));
  return q;
}

std::vector<Rational> trim(std::vector<Rational> p) {
  size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  return {p.begin() + lead, p.end()};
}

// remainder of a by b, naive long division
std::vector<Rational> rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size()) {
    Rational q = a[0] / b[0];
    for (size_t i = 0; i < b.size(); ++i) a[i] -= q * b[i];
    a = trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = b;
    b = r;
  }
  return a;
}

// exact quotient a / b (b must divide a)
std::vector<Rational> quot(const std::vector<Rational>& a0, const std::vector<Rational>& b) {
  auto a = a0;
  std::vector<Rational> q(a0.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a[0] / b[0];
    q[a0.size() - a.size()] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i] -= c * b[i];
    a = trim(a);
  }
  return q;
}

int sign_at_minus_inf(const std::vector<Rational>& p) {
  int s = sgn(p[0]);
  return (p.size() - 1) % 2 ? -s : s;
}

}  // namespace

QVec to_vec(const BinaryForm& f) {
  QVec v;
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return v;
}

QVec dx(const QVec& f) {
  const int n = static_cast<int>(f.size()) - 1;
  QVec out(n);
  for (int i = 0; i < n; ++i) out[i] = f[i] * (n - i);
  return out;
}

QVec dy(const QVec& f) {
  const int n = static_cast<int>(f.size()) - 1;
  QVec out(n);
  for (int i = 0; i < n; ++i) out[i] = f[i + 1] * (i + 1);
  return out;
}

QVec act(const QVec& g, const QVec& f) {
  const int s = static_cast<int>(g.size()) - 1;
  const int d = static_cast<int>(f.size()) - 1;
  if (s > d) throw std::invalid_argument("oracle act: operator degree exceeds form degree");
  QVec out(d - s + 1, Rational(0));
  for (int j = 0; j <= s; ++j) {
    if (g[j] == 0) continue;
    QVec w = f;
    for (int k = 0; k < s - j; ++k) w = dx(w);
    for (int k = 0; k < j; ++k) w = dy(w);
    for (size_t i = 0; i < out.size(); ++i) out[i] += g[j] * w[i];
  }
  return out;
}

std::vector<QVec> kernel(const BinaryForm& f, int s) {
  const int d = f.degree();
  if (s < 1 || s > d) throw std::invalid_argument("oracle kernel: need 1 <= s <= deg f");
  const int rows = d - s + 1, cols = s + 1;
  QVec fv = to_vec(f);

  // column j = action of the monomial operator X^(s-j) Y^j
  std::vector<QVec> M(rows, QVec(cols, Rational(0)));
  for (int j = 0; j <= s; ++j) {
    QVec e(s + 1, Rational(0));
    e[j] = 1;
    QVec col = act(e, fv);
    for (int i = 0; i < rows; ++i) M[i][j] = col[i];
  }

  // forward elimination with explicit pivot bookkeeping
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[r], M[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational q = M[i][c] / M[r][c];
      for (int j = c; j < cols; ++j) M[i][j] -= q * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<QVec> basis;
  for (int c = 0; c < cols; ++c) {
    bool is_pivot = false;
    for (int pc : pivot_col)
      if (pc == c) is_pivot = true;
    if (is_pivot) continue;
    QVec v(cols, Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -M[i][c] / M[i][pivot_col[i]];
    basis.push_back(v);
  }
  return basis;
}

bool square_free(const QVec& g) {
  if (is_zero(g)) return false;
  const int n = static_cast<int>(g.size()) - 1;
  auto p = dehom(g);
  const int inf_mult = n - (static_cast<int>(p.size()) - 1);
  if (inf_mult >= 2) return false;
  if (p.size() <= 2) return true;  // constant or linear in t
  return gcd(p, deriv(p)).size() == 1;
}

int real_root_count(const QVec& g) {
  if (is_zero(g)) throw std::invalid_argument("oracle real_root_count: zero form");
  const int n = static_cast<int>(g.size()) - 1;
  auto p = dehom(g);
  const int at_inf = n > static_cast<int>(p.size()) - 1 ? 1 : 0;
  if (p.size() <= 1) return at_inf;
  auto sq = gcd(p, deriv(p));
  // the roots of p / gcd(p, p') are exactly the distinct roots of p
  if (sq.size() > 1) p = quot(p, sq);
  if (p.size() <= 1) return at_inf;

  // Sturm chain with naive remainders; count = V(-inf) - V(+inf)
  std::vector<std::vector<Rational>> chain{p, deriv(p)};
  while (chain.back().size() > 1) {
    auto r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  auto variations = [&](bool at_minus) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
      int s = at_minus ? sign_at_minus_inf(q) : sgn(q[0]);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(true) - variations(false) + at_inf;
}

bool has_square_free(const std::vector<QVec>& basis) {
  if (basis.empty()) return false;
  const int k = static_cast<int>(basis.size());
  const int s = static_cast<int>(basis[0].size()) - 1;
  // grid {0..2s-2} per coordinate: the square-freeness obstruction has degree
  // <= 2s-2 in each combination parameter, so vanishing on the grid means
  // vanishing identically; floor of 2 so degree-1 members are still reached
  const long side = std::max(2L * s - 1, 2L);
  std::vector<long> t(k, 0);
  while (true) {
    QVec v(s + 1, Rational(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j <= s; ++j) v[j] += t[i] * basis[i][j];
    if (square_free(v)) return true;
    int i = 0;
    for (; i < k; ++i) {
      if (t[i] < side - 1) {
        ++t[i];
        break;
      }
      t[i] = 0;
    }
    if (i == k) return false;
  }
}

int complex_rank(const BinaryForm& f) {
  const int d = f.degree();
  for (int s = 1; s <= d; ++s)
    if (has_square_free(kernel(f, s))) return s;
  throw std::logic_error("oracle complex_rank: no square-free member through s = d");
}

int admissible_rank(const BinaryForm& f) { return complex_rank(f); }

}  // namespace ranklab::oracle
