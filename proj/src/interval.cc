#include "ranklab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranklab {

RInterval::RInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
  if (lo > hi) throw std::invalid_argument("RInterval: lo > hi");
}

Rational RInterval::mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }

RInterval operator+(const RInterval& a, const RInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RInterval operator-(const RInterval& a, const RInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RInterval operator-(const RInterval& a) { return {-a.hi, -a.lo}; }

RInterval operator*(const RInterval& a, const RInterval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RInterval scale(const Rational& c, const RInterval& a) {
  if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

bool disjoint(const RInterval& a, const RInterval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool inside(const RInterval& inner, const RInterval& outer) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

Rational CInterval::width() const { return std::max(re.width(), im.width()); }

CInterval operator+(const CInterval& a, const CInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

CInterval operator-(const CInterval& a, const CInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval scale(const GaussianRational& c, const CInterval& a) {
  return {scale(c.re, a.re) - scale(c.im, a.im), scale(c.re, a.im) + scale(c.im, a.re)};
}

CInterval conj(const CInterval& a) { return {a.re, -a.im}; }

bool disjoint(const CInterval& a, const CInterval& b) {
  return disjoint(a.re, b.re) || disjoint(a.im, b.im);
}

bool inside(const CInterval& inner, const CInterval& outer) {
  return inside(inner.re, outer.re) && inside(inner.im, outer.im);
}

}  // namespace ranklab
