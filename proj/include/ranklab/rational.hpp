#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP) and the
// Gaussian rationals Q(i) with complex conjugation.  Everything downstream
// is built on these; no floating point enters any rank computation.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ranklab {

using Int = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, denominator > 0

// Parse "p" or "p/q" (q != 0).  Returns nothing on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

inline Rational rat_abs(const Rational& q) { return abs(q); }

// Complex conjugation sigma(a + bi) = a - bi is the only automorphism we
// ever need; is_real() means fixed by sigma.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }  // a^2 + b^2

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "a+bi" with both parts in p/q form; pure-real and pure-imaginary shortened.
std::string gauss_str(const GaussianRational& z);

// Parse "a", "a+bi", "a-bi", "bi", "i", "-i" with rational a, b.
std::optional<GaussianRational> parse_gaussian(const std::string& s);

}  // namespace ranklab
