#pragma once

// Dense univariate polynomials over an exact field (Rational or
// GaussianRational).  Coefficient i multiplies t^i; the coefficient vector
// never has a trailing zero, and the zero polynomial has an empty vector
// (degree -1).

#include <stdexcept>
#include <utility>
#include <vector>

#include "ranklab/rational.hpp"

namespace ranklab {

template <class K>
bool scalar_is_zero(const K& x) {
  return x == 0;
}
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
  // c * t^k
  static Poly monomial(K c, int k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  // Coefficient of t^i, zero beyond the degree.
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[i];
  }
  const K& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<int>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<K> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const K& s, const Poly& a) {
    std::vector<K> v(a.c_);
    for (auto& x : v) x = s * x;
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division: returns (quotient, remainder) with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      K coef = r.lc() / b.lc();
      q[k] = q[k] + coef;
      r = r - Poly::monomial(coef, k) * b;
    }
    return {Poly(std::move(q)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lc();
    return inv * *this;
  }

 private:
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using QPoly = Poly<Rational>;
using GPoly = Poly<GaussianRational>;

// Monic gcd via the Euclidean algorithm.  Rejects gcd(0, 0).
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  return a.monic();
}

inline GPoly to_gaussian(const QPoly& p) {
  std::vector<GaussianRational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return GPoly(std::move(v));
}

// Coefficient-wise complex conjugation.
inline GPoly conj(const GPoly& p) {
  std::vector<GaussianRational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return GPoly(std::move(v));
}

// Affine square-freeness: gcd(f, f') constant.  The projective notion for
// binary forms lives with BinaryForm.
template <class K>
bool poly_is_square_free(const Poly<K>& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

// Conventional discriminant via the Sylvester resultant:
// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f), n = deg f >= 1.
Rational poly_discriminant(const QPoly& f);

// Resultant of two nonzero rational polynomials (Sylvester determinant).
Rational poly_resultant(const QPoly& a, const QPoly& b);

}  // namespace ranklab
