#pragma once

// Closed intervals with exact rational endpoints and complex rectangles
// built from them.  Every inclusion below is exact, so an enclosure proved
// here is a proof, not an estimate.

#include "ranklab/rational.hpp"

namespace ranklab {

struct RInterval {
  Rational lo, hi;

  RInterval() : lo(0), hi(0) {}
  RInterval(Rational a, Rational b);  // requires a <= b
  static RInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational mag() const;  // sup |x| over the interval
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

RInterval operator+(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a);
RInterval operator*(const RInterval& a, const RInterval& b);
RInterval scale(const Rational& c, const RInterval& a);

bool disjoint(const RInterval& a, const RInterval& b);
// strict containment in the interior
bool inside(const RInterval& inner, const RInterval& outer);

struct CInterval {
  RInterval re, im;

  CInterval() = default;
  CInterval(RInterval r, RInterval i) : re(std::move(r)), im(std::move(i)) {}
  static CInterval point(const GaussianRational& z) {
    return {RInterval::point(z.re), RInterval::point(z.im)};
  }

  GaussianRational mid() const { return {re.mid(), im.mid()}; }
  Rational width() const;            // max of the two widths
  Rational mag_upper() const { return re.mag() + im.mag(); }  // >= sup |z|
  bool contains(const GaussianRational& z) const {
    return re.contains(z.re) && im.contains(z.im);
  }
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
CInterval scale(const GaussianRational& c, const CInterval& a);
CInterval conj(const CInterval& a);

bool disjoint(const CInterval& a, const CInterval& b);
bool inside(const CInterval& inner, const CInterval& outer);

}  // namespace ranklab
