#include "ranklab/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranklab {

namespace {

using ZPoly = std::vector<Int>;  // coefficient i multiplies t^i, no trailing zero

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// primitive part, sign preserved
void zprim(ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return;
  for (auto& c : p) c /= g;
}

ZPoly to_zpoly(const QPoly& f) {
  Int den = 1;
  for (const auto& c : f.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly p(f.coeffs().size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rational scaled = f.coeffs()[i] * Rational(den);
    p[i] = scaled.get_num();
  }
  zprim(p);
  return p;
}

ZPoly zderiv(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

// Pseudo-remainder of a by b rescaled to a positive multiple of the true
// remainder: the result is lb^m * (a mod b) with the sign corrected when
// lb^m < 0.  Sign-faithful, which is what the Sturm chain needs.
ZPoly pos_prem(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const Int& lb = b.back();
  long mults = 0;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    ++mults;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    ztrim(a);
  }
  if (sgn(lb) < 0 && mults % 2 != 0)
    for (auto& c : a) c = -c;
  return a;
}

std::vector<ZPoly> sturm_chain(const QPoly& f) {
  ZPoly p0 = to_zpoly(f);
  if (p0.empty()) throw std::domain_error("sturm: zero polynomial");
  std::vector<ZPoly> chain;
  chain.push_back(p0);
  ZPoly p1 = zderiv(p0);
  if (p1.empty()) return chain;
  zprim(p1);
  chain.push_back(p1);
  while (true) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain[chain.size() - 1];
    ZPoly r = pos_prem(a, b);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    zprim(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int zsign_at(const ZPoly& p, const Rational& t) {
  // p(n/d) * d^deg = sum p_i n^i d^(deg-i), exact integer
  const Int& n = t.get_num();
  const Int& d = t.get_den();
  Int acc = 0, npow = 1;
  std::vector<Int> dp(p.size());
  if (!p.empty()) {
    dp[p.size() - 1] = 1;
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) dp[i] = dp[i + 1] * d;
  }
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p[i] * npow * dp[i];
    npow *= n;
  }
  return sgn(acc);
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

struct Chain {
  std::vector<ZPoly> polys;
  int var_at(const Rational& t) const {
    std::vector<int> s;
    s.reserve(polys.size());
    for (const auto& p : polys) s.push_back(zsign_at(p, t));
    return variations(s);
  }
  int var_at_inf(int dir) const {  // dir = +1 or -1
    std::vector<int> s;
    s.reserve(polys.size());
    for (const auto& p : polys) {
      int lead = sgn(p.back());
      int deg = static_cast<int>(p.size()) - 1;
      s.push_back(dir > 0 ? lead : (deg % 2 == 0 ? lead : -lead));
    }
    return variations(s);
  }
};

}  // namespace

int sign_at(const QPoly& f, const Rational& t) {
  if (f.is_zero()) return 0;
  return zsign_at(to_zpoly(f), t);
}

Rational cauchy_root_bound(const QPoly& f) {
  if (f.is_zero() || f.degree() < 1) return 1;
  ZPoly p = to_zpoly(f);
  Int m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Int a = abs(p[i]);
    if (a > m) m = a;
  }
  Int lead = abs(p.back());
  Int q = m / lead + 2;  // > 1 + max|a_i|/|a_n|
  // round up to a power of two
  size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  Int b = 1;
  b <<= bits;
  return Rational(b);
}

int sturm_count(const QPoly& f) {
  Chain c{sturm_chain(f)};
  return c.var_at_inf(-1) - c.var_at_inf(+1);
}

int sturm_count(const QPoly& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("sturm_count: need a < b");
  Chain c{sturm_chain(f)};
  int n = c.var_at(a) - c.var_at(b);  // roots in (a, b]
  if (sign_at(f, b) == 0) --n;
  return n;
}

std::vector<RootInterval> isolate_real_roots(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (f.degree() == 0) return out;
  Chain chain{sturm_chain(f)};
  Rational B = cauchy_root_bound(f);
  struct Seg {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> stack;
  {
    Rational lo = -B, hi = B;
    stack.push_back({lo, hi, chain.var_at(lo), chain.var_at(hi)});
  }
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int count = s.vlo - s.vhi;  // roots in (lo, hi]; f(hi) != 0 by construction
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back({s.lo, s.hi, false});
      continue;
    }
    // split at a dyadic non-root; walk toward lo if the midpoint is a root
    Rational mid = (s.lo + s.hi) / 2;
    while (sign_at(f, mid) == 0) mid = (s.lo + mid) / 2;
    int vmid = chain.var_at(mid);
    stack.push_back({s.lo, mid, s.vlo, vmid});
    stack.push_back({mid, s.hi, vmid, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

void refine_root(const QPoly& f, RootInterval& iv, const Rational& width) {
  if (iv.is_point) return;
  int slo = sign_at(f, iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sign_at(f, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      iv.is_point = true;
      return;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

std::vector<Rational> gap_samples(const QPoly& f, std::vector<RootInterval>& roots) {
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back(0);
    return samples;
  }
  // refine until closures are pairwise disjoint
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
      if (!(roots[i].hi < roots[i + 1].lo)) {
        Rational w = (roots[i].hi - roots[i].lo) / 4;
        Rational w2 = (roots[i + 1].hi - roots[i + 1].lo) / 4;
        refine_root(f, roots[i], w > 0 ? w : Rational(1, 4));
        refine_root(f, roots[i + 1], w2 > 0 ? w2 : Rational(1, 4));
        again = true;
      }
    }
  }
  samples.push_back(roots.front().lo - 1);
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  samples.push_back(roots.back().hi + 1);
  return samples;
}

}  // namespace ranklab
