#include "ranklab/poly.hpp"

#include "ranklab/linalg.hpp"

namespace ranklab {

namespace {

// clear denominators: returns (integer coefficients, multiplier m) with
// m * f integral
std::pair<IntVec, Int> clear_denoms(const QPoly& f) {
  Int den = 1;
  for (const auto& c : f.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  IntVec v(f.coeffs().size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational scaled = f.coeffs()[i] * Rational(den);
    v[i] = scaled.get_num();
  }
  return {std::move(v), den};
}

}  // namespace

Rational poly_resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("resultant of the zero polynomial");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  auto [za, da] = clear_denoms(a);
  auto [zb, db] = clear_denoms(b);
  // res(da*a, db*b) = da^n db^m res(a, b)
  IntMat s(m + n, IntVec(m + n, Int(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = za[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = zb[n - i];
  Int det = bareiss_det(std::move(s));
  Int scale = 1;
  for (int i = 0; i < n; ++i) scale *= da;
  for (int i = 0; i < m; ++i) scale *= db;
  Rational out{det, scale};
  out.canonicalize();
  return out;
}

Rational poly_discriminant(const QPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Rational r = poly_resultant(f, f.derivative());
  int sign = (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  Rational out = r / f.lc();
  return sign > 0 ? out : -out;
}

}  // namespace ranklab
