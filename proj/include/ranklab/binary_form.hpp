#pragma once

// Homogeneous binary forms f = sum c_i x^(d-i) y^i over Q.  A form is stored
// by its canonical representative: integer coefficients with content 1 and
// the first nonzero coefficient positive.  Everything rank-related is
// invariant under nonzero scaling, so no information that matters is lost.

#include <string>
#include <utility>
#include <vector>

#include "ranklab/linalg.hpp"
#include "ranklab/poly.hpp"

namespace ranklab {

class BinaryForm {
 public:
  // coeffs has size d+1; the zero form is rejected.
  BinaryForm(int degree, const std::vector<Rational>& coeffs);
  static BinaryForm from_ints(int degree, IntVec coeffs);

  int degree() const { return d_; }
  const IntVec& coeffs() const { return c_; }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }
  friend bool operator<(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  // f(t, 1); the point (1:0) carries multiplicity d - deg f(t,1)
  QPoly dehomogenize() const;
  // f(1, u); the point (0:1) carries multiplicity d - deg f(1,u)
  QPoly dehomogenize_rev() const;

  BinaryForm dx() const;  // partial derivative in x (degree must stay >= 0)
  BinaryForm dy() const;

  GaussianRational eval(const GaussianRational& alpha, const GaussianRational& beta) const;

  std::string pretty() const;  // human-readable, e.g. "x^3 - 2*x*y^2"

 private:
  BinaryForm() = default;
  int d_ = 0;
  IntVec c_;
};

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b);

// (alpha x + beta y)^d for a rational parameter point
BinaryForm linear_power(const Rational& alpha, const Rational& beta, int d);

// Homogeneous resultant of two binary forms (Sylvester determinant on the
// full coefficient sequences); zero iff they share a projective root,
// including (1:0).
Int form_resultant(const BinaryForm& a, const BinaryForm& b);

// Projective discriminant up to a fixed positive normalization: the
// resultant of the two partials.  Zero iff the form has a repeated
// projective root.  Degree 1 forms are always square-free.
Int form_disc(const BinaryForm& f);

// Square-freeness as a projective binary form: no repeated root, including
// at (1:0).  x^2 y is not square-free.
bool is_square_free(const BinaryForm& f);

// (total distinct projective roots over C, distinct real projective roots).
// The difference is even: non-real roots come in conjugate pairs.
std::pair<int, int> projective_root_profile(const BinaryForm& f);

}  // namespace ranklab
