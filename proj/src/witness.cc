#include "ranklab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "ranklab/apolarity.hpp"
#include "ranklab/sturm.hpp"

namespace ranklab {

namespace {

Int binomial(int n, int k) {
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

// nearest multiple of 2^-bits (ties up)
Rational round_dyadic(const Rational& x, unsigned long bits) {
  Int num = x.get_num() << bits;
  Int twice = 2 * num + x.get_den();
  Int den2 = 2 * x.get_den();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  Rational r(q, Int(1) << bits);
  r.canonicalize();
  return r;
}

GaussianRational round_dyadic(const GaussianRational& z, unsigned long bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

Rational simplest_pos(const Rational& lo, const Rational& hi) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  if (Rational(c) <= hi) return Rational(c);
  Int fl = c - 1;  // lo is not an integer here
  return Rational(fl) + Rational(1) / simplest_pos(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

// unique minimal-denominator rational in [lo, hi]
Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_in: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(lo) > 0) return simplest_pos(lo, hi);
  return -simplest_pos(-hi, -lo);
}

CInterval interval_eval(const GPoly& p, const CInterval& z) {
  CInterval acc = CInterval::point(GaussianRational(Rational(0)));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + CInterval::point(*it);
  return acc;
}

CInterval box_around(const GaussianRational& z, const Rational& h) {
  return {RInterval(z.re - h, z.re + h), RInterval(z.im - h, z.im + h)};
}

// Krawczyk containment test: K(B) strictly inside B proves that B contains
// exactly one root of g.  All arithmetic is exact.
bool krawczyk_certifies(const GPoly& g, const GPoly& gd, const CInterval& box) {
  GaussianRational m = box.mid();
  GaussianRational dm = gd.eval(m);
  if (dm.is_zero()) return false;
  GaussianRational inv = GaussianRational(Rational(1)) / dm;
  CInterval newton = CInterval::point(m - g.eval(m) * inv);
  CInterval contraction =
      CInterval::point(GaussianRational(Rational(1))) - scale(inv, interval_eval(gd, box));
  CInterval K = newton + contraction * (box - CInterval::point(m));
  return inside(K, box);
}

std::vector<std::complex<double>> durand_kerner(const QPoly& p, int attempt) {
  const int n = p.degree();
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = Rational(p.coeff(i) / p.lc()).get_d();
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1.0 + radius;
  std::vector<std::complex<double>> z(n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * pi * k / n + 0.4 + 0.7 * attempt;
    z[k] = std::polar(0.5 * radius + 0.25 * attempt, ang);
  }
  for (int iter = 0; iter < 800; ++iter) {
    double worst = 0, scale_ref = 1;
    for (int k = 0; k < n; ++k) {
      std::complex<double> val = c[n];
      for (int i = n - 1; i >= 0; --i) val = val * z[k] + c[i];
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (std::abs(den) < 1e-280) den = 1e-12;
      std::complex<double> step = val / den;
      z[k] -= step;
      worst = std::max(worst, std::abs(step));
      scale_ref = std::max(scale_ref, std::abs(z[k]));
    }
    if (worst < 1e-13 * scale_ref) break;
  }
  return z;
}

GaussianRational newton_polish(const GPoly& g, const GPoly& gd, GaussianRational z,
                               unsigned long bits, int steps) {
  for (int k = 0; k < steps; ++k) {
    GaussianRational dv = gd.eval(z);
    if (dv.is_zero()) return z;
    z = round_dyadic(z - g.eval(z) / dv, bits);
  }
  return z;
}

struct PairBox {
  GaussianRational z;  // polished dyadic center, im > 0
  Rational h;          // certified half-width
  unsigned long bits;  // polish precision, grows on re-polish
};

// all distinct roots of ghat split into exact rationals, exact Q(i) pairs
// (upper representative), real isolating intervals, and certified complex
// boxes (upper representative)
struct RootSplit {
  std::vector<Rational> exact_real;
  std::vector<GaussianRational> exact_pair;
  std::vector<RootInterval> boxed_real;
  std::vector<PairBox> boxed_pair;
};

RootSplit split_roots(const QPoly& ghat) {
  RootSplit out;
  if (ghat.degree() < 1) return out;

  // leading coefficient of the primitive integer model bounds every
  // denominator that can occur in a rational root or a rational quadratic
  // factor, which makes the exactness detection below complete
  Int den_lcm = 1;
  for (const auto& c : ghat.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int lc_int = abs(Int(Rational(ghat.lc() * Rational(den_lcm)).get_num()));
  Rational rat_width = Rational(1) / Rational(lc_int * lc_int + 1);

  auto intervals = isolate_real_roots(ghat);
  for (auto& iv : intervals) {
    refine_root(ghat, iv, rat_width);
    if (iv.is_point) {
      out.exact_real.push_back(iv.lo);
      continue;
    }
    Rational cand = simplest_in(iv.lo, iv.hi);
    if (sign_at(ghat, cand) == 0) {
      out.exact_real.push_back(cand);
    } else {
      out.boxed_real.push_back(iv);
    }
  }

  const int n_pairs = (ghat.degree() - static_cast<int>(intervals.size())) / 2;
  if (n_pairs == 0) return out;

  GPoly g = to_gaussian(ghat);
  GPoly gd = g.derivative();
  // window for Q(i) detection: small enough that a rational part with
  // denominator <= 2*lc is the unique simplest rational inside
  Rational qi_window = Rational(1) / Rational(8 * lc_int * lc_int + 8);
  if (qi_window > Rational(1, Int(1) << 40)) qi_window = Rational(1, Int(1) << 40);
  unsigned long base_bits =
      std::max<unsigned long>(500, 2 * mpz_sizeinbase(lc_int.get_mpz_t(), 2) + 80);

  for (int attempt = 0; attempt < 3; ++attempt) {
    out.exact_pair.clear();
    out.boxed_pair.clear();
    auto roots = durand_kerner(ghat, attempt);
    std::vector<std::complex<double>> upper;
    for (const auto& r : roots)
      if (r.imag() > 1e-7 * (1.0 + std::abs(r))) upper.push_back(r);
    std::sort(upper.begin(), upper.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (static_cast<int>(upper.size()) != n_pairs) continue;

    bool ok = true;
    for (const auto& r : upper) {
      GaussianRational z(round_dyadic(Rational(r.real()), 60), round_dyadic(Rational(r.imag()), 60));
      z = newton_polish(g, gd, z, 150, 3);
      z = newton_polish(g, gd, z, base_bits, 2);
      if (sgn(z.im) < 0) z = z.conj();

      Rational cu = simplest_in(z.re - qi_window, z.re + qi_window);
      Rational cv = simplest_in(z.im - qi_window, z.im + qi_window);
      if (sgn(cv) > 0) {
        QPoly quad(std::vector<Rational>{cu * cu + cv * cv, -2 * cu, Rational(1)});
        if (divmod(ghat, quad).second.is_zero()) {
          out.exact_pair.push_back({cu, cv});
          continue;
        }
      }
      PairBox pb{z, Rational(0), base_bits};
      bool certified = false;
      for (unsigned long hb : {60ul, 40ul, 24ul}) {
        Rational h(1, Int(1) << hb);
        if (z.im <= h) continue;
        if (krawczyk_certifies(g, gd, box_around(z, h))) {
          pb.h = h;
          certified = true;
          break;
        }
      }
      if (!certified) {
        ok = false;
        break;
      }
      out.boxed_pair.push_back(pb);
    }
    if (!ok) continue;

    // distinctness across the upper half plane
    std::sort(out.exact_pair.begin(), out.exact_pair.end(),
              [](const GaussianRational& a, const GaussianRational& b) {
                return a.re != b.re ? a.re < b.re : a.im < b.im;
              });
    std::sort(out.boxed_pair.begin(), out.boxed_pair.end(),
              [](const PairBox& a, const PairBox& b) {
                return a.z.re != b.z.re ? a.z.re < b.z.re : a.z.im < b.z.im;
              });
    for (size_t i = 0; ok && i + 1 < out.exact_pair.size(); ++i)
      if (out.exact_pair[i] == out.exact_pair[i + 1]) ok = false;
    for (size_t i = 0; ok && i < out.boxed_pair.size(); ++i) {
      CInterval bi = box_around(out.boxed_pair[i].z, out.boxed_pair[i].h);
      for (size_t j = i + 1; ok && j < out.boxed_pair.size(); ++j)
        if (!disjoint(bi, box_around(out.boxed_pair[j].z, out.boxed_pair[j].h))) ok = false;
      for (const auto& e : out.exact_pair)
        if (bi.contains(e)) ok = false;
    }
    if (ok) return out;
  }
  throw CertificationFailure("decompose: could not certify the complex roots of the witness");
}

}  // namespace

CurvePoint CurvePoint::exact(const GaussianRational& a, const GaussianRational& b) {
  CurvePoint p;
  p.kind = Kind::Exact;
  if (!a.is_zero()) {
    p.alpha = GaussianRational(Rational(1));
    p.beta = b / a;
  } else {
    if (b.is_zero()) throw std::invalid_argument("CurvePoint: (0, 0) is not a point");
    p.alpha = GaussianRational(Rational(0));
    p.beta = GaussianRational(Rational(1));
  }
  return p;
}

CurvePoint CurvePoint::boxed(CInterval u) {
  CurvePoint p;
  p.kind = Kind::Boxed;
  p.box = std::move(u);
  return p;
}

bool CurvePoint::is_real() const {
  if (kind == Kind::Exact) return alpha.is_real() && beta.is_real();
  return box.im.is_point() && box.im.lo == 0;
}

CurvePoint CurvePoint::conjugate() const {
  if (kind == Kind::Exact) return exact(alpha.conj(), beta.conj());
  return boxed(conj(box));
}

bool operator==(const CurvePoint& p, const CurvePoint& q) {
  if (p.kind != q.kind) return false;
  if (p.kind == CurvePoint::Kind::Exact) return p.alpha == q.alpha && p.beta == q.beta;
  return p.box.re.lo == q.box.re.lo && p.box.re.hi == q.box.re.hi &&
         p.box.im.lo == q.box.im.lo && p.box.im.hi == q.box.im.hi;
}

std::optional<std::vector<int>> conjugation_pairing(const std::vector<CurvePoint>& pts) {
  const int n = static_cast<int>(pts.size());
  for (const auto& p : pts)
    if (p.kind != CurvePoint::Kind::Exact)
      throw std::invalid_argument("conjugation_pairing: points must be exact");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("conjugation_pairing: duplicate point");
  std::vector<int> pairing(n, -1);
  for (int i = 0; i < n; ++i) {
    CurvePoint c = pts[i].conjugate();
    for (int j = 0; j < n; ++j)
      if (pts[j] == c) {
        pairing[i] = j;
        break;
      }
    if (pairing[i] < 0) return std::nullopt;
  }
  return pairing;
}

Label label_of_set(const DecompositionSet& S) {
  const int n = static_cast<int>(S.points.size());
  if (static_cast<int>(S.pairing.size()) != n)
    throw std::invalid_argument("label_of_set: pairing size mismatch");
  int a = 0;
  for (int i = 0; i < n; ++i) {
    int j = S.pairing[i];
    if (j < 0 || j >= n || S.pairing[j] != i)
      throw std::invalid_argument("label_of_set: pairing is not an involution");
    if (j > i) ++a;
  }
  return {n, a};
}

std::vector<GaussianRational> embed_point(const CurvePoint& p, int d) {
  if (p.kind != CurvePoint::Kind::Exact)
    throw std::invalid_argument("embed_point: point must be exact");
  std::vector<GaussianRational> v(d + 1);
  std::vector<GaussianRational> apow(d + 1), bpow(d + 1);
  apow[0] = GaussianRational(Rational(1));
  bpow[0] = GaussianRational(Rational(1));
  for (int i = 1; i <= d; ++i) {
    apow[i] = apow[i - 1] * p.alpha;
    bpow[i] = bpow[i - 1] * p.beta;
  }
  for (int i = 0; i <= d; ++i)
    v[i] = GaussianRational(Rational(binomial(d, i))) * apow[d - i] * bpow[i];
  return v;
}

bool in_span(const std::vector<GaussianRational>& P, const std::vector<CurvePoint>& S, int d) {
  if (static_cast<int>(P.size()) != d + 1)
    throw std::invalid_argument("in_span: coefficient vector has wrong length");
  std::vector<std::vector<GaussianRational>> cols;
  cols.reserve(S.size() + 1);
  for (const auto& p : S) cols.push_back(embed_point(p, d));
  int r1 = field_rank(cols);
  cols.push_back(P);
  return field_rank(cols) == r1;
}

namespace {

// value of u for a (1:u) point, nothing for (0:1)
std::optional<GaussianRational> affine_value(const CurvePoint& p) {
  if (p.kind == CurvePoint::Kind::Boxed) return p.box.mid();
  if (p.alpha.is_zero()) return std::nullopt;
  return p.beta;
}

std::vector<GaussianRational> system_column(const std::optional<GaussianRational>& u, int d) {
  std::vector<GaussianRational> col(d + 1, GaussianRational(Rational(0)));
  if (!u) {
    col[d] = GaussianRational(Rational(1));
    return col;
  }
  GaussianRational pw(Rational(1));
  for (int i = 0; i <= d; ++i) {
    col[i] = GaussianRational(Rational(binomial(d, i))) * pw;
    pw = pw * *u;
  }
  return col;
}

// certified interval residual of the reported coefficients against the
// reported (possibly boxed) points, relative bound left to the caller
Rational residual_sup(const BinaryForm& f, const std::vector<CurvePoint>& pts,
                      const std::vector<GaussianRational>& lambda) {
  const int d = f.degree();
  const size_t n = pts.size();
  std::vector<std::vector<CInterval>> pow(n);
  std::vector<bool> at_infinity(n, false);
  for (size_t j = 0; j < n; ++j) {
    CInterval u;
    if (pts[j].kind == CurvePoint::Kind::Boxed) {
      u = pts[j].box;
    } else if (pts[j].alpha.is_zero()) {
      at_infinity[j] = true;
      continue;
    } else {
      u = CInterval::point(pts[j].beta);
    }
    pow[j].resize(d + 1);
    pow[j][0] = CInterval::point(GaussianRational(Rational(1)));
    for (int i = 1; i <= d; ++i) pow[j][i] = pow[j][i - 1] * u;
  }
  Rational worst(0);
  for (int i = 0; i <= d; ++i) {
    CInterval acc = CInterval::point(GaussianRational(Rational(0)));
    for (size_t j = 0; j < n; ++j) {
      if (at_infinity[j]) {
        if (i == d) acc = acc + CInterval::point(lambda[j]);
        continue;
      }
      acc = acc + scale(lambda[j] * GaussianRational(Rational(binomial(d, i))), pow[j][i]);
    }
    CInterval r = CInterval::point(GaussianRational(Rational(f.coeffs()[i]))) - acc;
    worst = std::max(worst, r.mag_upper());
  }
  return worst;
}

Rational sup_norm(const BinaryForm& f) {
  Rational m(0);
  for (const auto& c : f.coeffs()) m = std::max(m, rat_abs(Rational(c)));
  return m;
}

}  // namespace

DecompositionSet decompose(const BinaryForm& f, const BinaryForm& g, const Rational& tol) {
  const int d = f.degree();
  const int s = g.degree();
  if (s > d + 1) throw std::invalid_argument("decompose: witness degree exceeds d + 1");
  if (sgn(tol) <= 0) throw std::invalid_argument("decompose: tolerance must be positive");
  if (!is_square_free(g)) throw std::invalid_argument("decompose: witness is not square-free");
  if (s <= d)
    for (const auto& z : apolar_action(g, f))
      if (z != 0) throw std::invalid_argument("decompose: witness is not apolar to f");

  QPoly ghat = g.dehomogenize_rev();
  const bool has_infinity = ghat.degree() < s;  // simple since g is square-free
  RootSplit roots = split_roots(ghat);

  GPoly gg = to_gaussian(ghat);
  GPoly ggd = gg.derivative();
  const Rational target = tol * sup_norm(f);

  int halvings = 0;
  const int budget = 256;
  while (true) {
    // promote intervals that collapsed to exact dyadic roots
    for (size_t i = 0; i < roots.boxed_real.size();) {
      if (roots.boxed_real[i].is_point) {
        roots.exact_real.push_back(roots.boxed_real[i].lo);
        roots.boxed_real.erase(roots.boxed_real.begin() + i);
      } else {
        ++i;
      }
    }
    std::sort(roots.exact_real.begin(), roots.exact_real.end());

    DecompositionSet set;
    set.degree = d;
    auto push_fixed = [&set](CurvePoint p) {
      set.points.push_back(std::move(p));
      set.pairing.push_back(static_cast<int>(set.points.size()) - 1);
    };
    auto push_pair = [&set](CurvePoint upper) {
      CurvePoint lower = upper.conjugate();
      set.points.push_back(std::move(upper));
      set.points.push_back(std::move(lower));
      int n = static_cast<int>(set.points.size());
      set.pairing.push_back(n - 1);
      set.pairing.push_back(n - 2);
    };
    for (const auto& u : roots.exact_real)
      push_fixed(CurvePoint::exact(GaussianRational(Rational(1)), GaussianRational(u)));
    for (const auto& iv : roots.boxed_real)
      push_fixed(CurvePoint::boxed({RInterval(iv.lo, iv.hi), RInterval::point(Rational(0))}));
    if (has_infinity)
      push_fixed(CurvePoint::exact(GaussianRational(Rational(0)), GaussianRational(Rational(1))));
    for (const auto& z : roots.exact_pair)
      push_pair(CurvePoint::exact(GaussianRational(Rational(1)), z));
    for (const auto& pb : roots.boxed_pair)
      push_pair(CurvePoint::boxed(box_around(pb.z, pb.h)));
    set.all_exact = roots.boxed_real.empty() && roots.boxed_pair.empty();

    const auto& c = f.coeffs();
    std::vector<GaussianRational> rhs(d + 1);
    for (int i = 0; i <= d; ++i) rhs[i] = GaussianRational(Rational(c[i]));
    std::vector<std::vector<GaussianRational>> cols;
    cols.reserve(set.points.size());
    for (const auto& p : set.points) cols.push_back(system_column(affine_value(p), d));

    if (set.all_exact) {
      auto sol = field_solve(cols, rhs);
      if (!sol) throw std::logic_error("decompose: exact system inconsistent for a valid witness");
      set.lambda = *sol;
      set.residual_bound = Rational(0);
      return set;
    }

    // midpoint least squares via the normal equations, then a certified
    // interval bound for the residual of the reported coefficients
    const size_t k = cols.size();
    std::vector<std::vector<GaussianRational>> normal(k);
    std::vector<GaussianRational> nrhs(k);
    for (size_t a = 0; a < k; ++a) {
      normal[a].resize(k);
      for (size_t b = 0; b < k; ++b) {
        GaussianRational acc;
        for (int i = 0; i <= d; ++i) acc += cols[b][i].conj() * cols[a][i];
        normal[a][b] = acc;  // column a, row b of M^H M
      }
    }
    for (size_t b = 0; b < k; ++b) {
      GaussianRational acc;
      for (int i = 0; i <= d; ++i) acc += cols[b][i].conj() * rhs[i];
      nrhs[b] = acc;
    }
    auto sol = field_solve(normal, nrhs);
    if (!sol) throw std::logic_error("decompose: normal equations singular at distinct midpoints");
    set.lambda = *sol;
    // exact conjugate symmetry at mirrored points
    for (size_t i = 0; i < set.points.size(); ++i) {
      int j = set.pairing[i];
      if (j > static_cast<int>(i)) set.lambda[j] = set.lambda[i].conj();
      if (j == static_cast<int>(i)) set.lambda[i].im = 0;
    }

    Rational bound = residual_sup(f, set.points, set.lambda);
    if (bound <= target) {
      set.residual_bound = bound;
      return set;
    }
    if (halvings >= budget)
      throw CertificationFailure("decompose: residual not certified within the refinement budget");
    ++halvings;
    for (auto& iv : roots.boxed_real) refine_root(ghat, iv, (iv.hi - iv.lo) / 2);
    for (auto& pb : roots.boxed_pair) {
      pb.h /= 2;
      if (!krawczyk_certifies(gg, ggd, box_around(pb.z, pb.h))) {
        pb.bits *= 2;
        pb.z = newton_polish(gg, ggd, pb.z, pb.bits, 2);
        if (sgn(pb.z.im) < 0) pb.z = pb.z.conj();
        if (!krawczyk_certifies(gg, ggd, box_around(pb.z, pb.h)))
          throw CertificationFailure("decompose: complex box lost certification while refining");
      }
    }
  }
}

VerificationReport verify_decomposition(const BinaryForm& f, const DecompositionSet& S,
                                        const Rational& tol) {
  VerificationReport rep;
  const int n = static_cast<int>(S.points.size());
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };

  bool sizes = n > 0 && static_cast<int>(S.pairing.size()) == n &&
               (S.lambda.empty() || static_cast<int>(S.lambda.size()) == n);
  add("shape", sizes, sizes ? "" : "point/pairing/coefficient sizes inconsistent");
  if (!sizes) {
    rep.label = {n, 0};
    return rep;
  }

  bool involution = true;
  for (int i = 0; i < n; ++i) {
    int j = S.pairing[i];
    if (j < 0 || j >= n || S.pairing[j] != i) involution = false;
  }
  add("pairing-involution", involution);

  bool stable = involution;
  if (involution) {
    for (int i = 0; i < n && stable; ++i) {
      int j = S.pairing[i];
      if (j == i) {
        if (!S.points[i].is_real()) stable = false;
      } else {
        if (!(S.points[j] == S.points[i].conjugate())) stable = false;
      }
    }
  }
  add("conjugation-stable", stable);

  bool nonreal_pairs = true;
  for (int i = 0; i < n; ++i) {
    if (S.pairing[i] == i) continue;
    const CurvePoint& p = S.points[i];
    bool off_axis = p.kind == CurvePoint::Kind::Exact ? !p.is_real()
                                                      : !p.box.im.contains_zero();
    if (!off_axis) nonreal_pairs = false;
  }
  add("pairs-nonreal", nonreal_pairs);

  bool distinct = true;
  for (int i = 0; i < n && distinct; ++i)
    for (int j = i + 1; j < n && distinct; ++j) {
      const CurvePoint &p = S.points[i], &q = S.points[j];
      if (p.kind == CurvePoint::Kind::Exact && q.kind == CurvePoint::Kind::Exact) {
        if (p == q) distinct = false;
      } else if (p.kind == CurvePoint::Kind::Boxed && q.kind == CurvePoint::Kind::Boxed) {
        if (!disjoint(p.box, q.box)) distinct = false;
      } else {
        const CurvePoint& e = p.kind == CurvePoint::Kind::Exact ? p : q;
        const CurvePoint& b = p.kind == CurvePoint::Kind::Exact ? q : p;
        if (!e.alpha.is_zero() && b.box.contains(e.beta)) distinct = false;
      }
    }
  add("points-distinct", distinct);

  if (!S.lambda.empty()) {
    bool lam_sym = true;
    for (int i = 0; i < n; ++i)
      if (!(S.lambda[S.pairing[i]] == S.lambda[i].conj())) lam_sym = false;
    add("coefficients-conjugate", lam_sym);
  }

  bool all_exact = true;
  for (const auto& p : S.points)
    if (p.kind != CurvePoint::Kind::Exact) all_exact = false;

  if (all_exact) {
    std::vector<GaussianRational> P(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) P[i] = GaussianRational(Rational(f.coeffs()[i]));
    bool span = in_span(P, S.points, f.degree());
    add("span", span);
    if (!S.lambda.empty()) {
      Rational r = residual_sup(f, S.points, S.lambda);
      add("residual", r == 0, r == 0 ? "exactly zero" : "nonzero exact residual");
    }
  } else if (!S.lambda.empty()) {
    Rational r = residual_sup(f, S.points, S.lambda);
    Rational target = tol * sup_norm(f);
    add("residual", r <= target,
        "certified bound " + rat_str(r) + " vs " + rat_str(target));
  } else {
    add("residual", false, "boxed set without coefficients cannot be certified");
  }

  int a = 0;
  if (involution)
    for (int i = 0; i < n; ++i)
      if (S.pairing[i] > i) ++a;
  rep.label = {n, a};
  add("label-consistent", involution && n - 2 * a >= 0);
  return rep;
}

}  // namespace ranklab
