#pragma once

// Sturm sequences over Z (fraction-free pseudo-remainders, primitive-part
// reduction) and bisection root isolation with dyadic endpoints.

#include <vector>

#include "ranklab/poly.hpp"

namespace ranklab {

// One isolated real root of a square-free polynomial.  is_point means the
// root is exactly lo (== hi); otherwise the open interval (lo, hi) contains
// exactly one root and f is nonzero at both endpoints.  Endpoints are dyadic.
struct RootInterval {
  Rational lo, hi;
  bool is_point = false;
};

// Number of distinct real roots (whole line).  f must be nonzero and
// square-free.
int sturm_count(const QPoly& f);

// Number of roots in the open interval (a, b), a < b.
int sturm_count(const QPoly& f, const Rational& a, const Rational& b);

// Disjoint isolating intervals for all real roots, sorted increasingly.
std::vector<RootInterval> isolate_real_roots(const QPoly& f);

// Shrink an isolating interval until hi - lo <= width (or an exact root is
// hit).  No-op for point intervals.
void refine_root(const QPoly& f, RootInterval& iv, const Rational& width);

// Rational sample points interleaving the isolated roots: one left of all
// roots, one strictly between each consecutive pair, one right of all roots.
// Refines the intervals as needed; never returns a root of f.
std::vector<Rational> gap_samples(const QPoly& f, std::vector<RootInterval>& roots);

// sign of f at a rational point, and a power-of-two B with all real roots
// of f inside (-B, B)
int sign_at(const QPoly& f, const Rational& t);
Rational cauchy_root_bound(const QPoly& f);

}  // namespace ranklab
