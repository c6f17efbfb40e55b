#include "ranklab/binary_form.hpp"

#include <sstream>
#include <stdexcept>

#include "ranklab/sturm.hpp"

namespace ranklab {

BinaryForm::BinaryForm(int degree, const std::vector<Rational>& coeffs) {
  if (degree < 1) throw std::invalid_argument("binary form degree must be >= 1");
  if (coeffs.size() != static_cast<size_t>(degree) + 1)
    throw std::invalid_argument("coefficient count must be degree + 1");
  Int den = 1;
  for (const auto& q : coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rational scaled = coeffs[i] * Rational(den);
    v[i] = scaled.get_num();
  }
  normalize_primitive(v);
  bool all_zero = true;
  for (const auto& z : v)
    if (z != 0) all_zero = false;
  if (all_zero) throw std::invalid_argument("the zero form has no rank");
  d_ = degree;
  c_ = std::move(v);
}

BinaryForm BinaryForm::from_ints(int degree, IntVec coeffs) {
  std::vector<Rational> q(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) q[i] = Rational(coeffs[i]);
  return BinaryForm(degree, q);
}

QPoly BinaryForm::dehomogenize() const {
  // f(t,1) = sum c_i t^(d-i): coefficient of t^j is c_(d-j)
  std::vector<Rational> p(d_ + 1);
  for (int j = 0; j <= d_; ++j) p[j] = Rational(c_[d_ - j]);
  return QPoly(std::move(p));
}

QPoly BinaryForm::dehomogenize_rev() const {
  // f(1,u) = sum c_i u^i
  std::vector<Rational> p(d_ + 1);
  for (int i = 0; i <= d_; ++i) p[i] = Rational(c_[i]);
  return QPoly(std::move(p));
}

BinaryForm BinaryForm::dx() const {
  if (d_ < 2) throw std::domain_error("derivative would leave degree 0");
  std::vector<Rational> v(d_);
  for (int i = 0; i <= d_ - 1; ++i) v[i] = Rational(c_[i] * (d_ - i));
  return BinaryForm(d_ - 1, v);
}

BinaryForm BinaryForm::dy() const {
  if (d_ < 2) throw std::domain_error("derivative would leave degree 0");
  std::vector<Rational> v(d_);
  for (int i = 0; i <= d_ - 1; ++i) v[i] = Rational(c_[i + 1] * (i + 1));
  return BinaryForm(d_ - 1, v);
}

GaussianRational BinaryForm::eval(const GaussianRational& alpha,
                                  const GaussianRational& beta) const {
  std::vector<GaussianRational> betas(d_ + 1);
  betas[0] = GaussianRational(Rational(1));
  for (int i = 1; i <= d_; ++i) betas[i] = betas[i - 1] * beta;
  GaussianRational acc(Rational(0)), apow(Rational(1));
  for (int i = d_; i >= 0; --i) {
    acc += GaussianRational(Rational(c_[i])) * apow * betas[i];
    apow *= alpha;
  }
  return acc;
}

std::string BinaryForm::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= d_; ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    first = false;
    Int mag = abs(a);
    int px = d_ - i, py = i;
    std::string vars;
    if (px > 0) vars += (px > 1) ? "x^" + std::to_string(px) : "x";
    if (px > 0 && py > 0) vars += "*";
    if (py > 0) vars += (py > 1) ? "y^" + std::to_string(py) : "y";
    if (mag != 1 || vars.empty()) {
      os << mag.get_str();
      if (!vars.empty()) os << "*";
    }
    os << vars;
  }
  return os.str();
}

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) {
  IntVec v(a.degree() + b.degree() + 1, Int(0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return BinaryForm::from_ints(a.degree() + b.degree(), std::move(v));
}

BinaryForm linear_power(const Rational& alpha, const Rational& beta, int d) {
  // (alpha x + beta y)^d: coefficient of x^(d-i) y^i is C(d,i) alpha^(d-i) beta^i
  std::vector<Rational> v(d + 1);
  Int binom = 1;
  std::vector<Rational> ap(d + 1), bp(d + 1);
  ap[0] = 1;
  bp[0] = 1;
  for (int i = 1; i <= d; ++i) {
    ap[i] = ap[i - 1] * alpha;
    bp[i] = bp[i - 1] * beta;
  }
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      binom *= (d - i + 1);
      binom /= i;
    }
    v[i] = Rational(binom) * ap[d - i] * bp[i];
  }
  return BinaryForm(d, v);
}

Int form_resultant(const BinaryForm& a, const BinaryForm& b) {
  const int m = a.degree(), n = b.degree();
  IntMat s(m + n, IntVec(m + n, Int(0)));
  // n rows of a's coefficients, m rows of b's
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a.coeffs()[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b.coeffs()[i];
  return bareiss_det(std::move(s));
}

Int form_disc(const BinaryForm& f) {
  if (f.degree() == 1) return 1;
  // pure powers of x or y have a repeated root and a vanishing partial
  bool only_last = true, only_first = true;
  for (int i = 0; i < f.degree(); ++i)
    if (f.coeffs()[i] != 0) only_last = false;
  for (int i = 1; i <= f.degree(); ++i)
    if (f.coeffs()[i] != 0) only_first = false;
  if (only_last || only_first) return 0;
  return form_resultant(f.dx(), f.dy());
}

bool is_square_free(const BinaryForm& f) { return form_disc(f) != 0; }

std::pair<int, int> projective_root_profile(const BinaryForm& f) {
  QPoly p = f.dehomogenize();  // never zero: the form is nonzero
  int mult_inf = f.degree() - p.degree();
  int total = 0, real = 0;
  if (p.degree() >= 1) {
    QPoly sf = p;
    QPoly g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) sf = divmod(p, g).first;
    total = sf.degree();
    real = sturm_count(sf);
  }
  if (mult_inf > 0) {
    ++total;
    ++real;  // (1:0) is a real point
  }
  return {total, real};
}

}  // namespace ranklab
