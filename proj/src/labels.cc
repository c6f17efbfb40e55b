#include "ranklab/labels.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ranklab/prng.hpp"
#include "ranklab/sturm.hpp"

namespace ranklab {

namespace {

// a-value of a square-free degree-s member: (s - #real roots) / 2
int a_of_member(const BinaryForm& g) {
  auto [total, real] = projective_root_profile(g);
  assert(total == g.degree());
  (void)total;
  return (g.degree() - real) / 2;
}

void add_label(LabelSet& set, int a, const BinaryForm& g) {
  for (const auto& w : set.found)
    if (w.label.a == a) return;
  set.found.push_back({{set.s, a}, g});
}

void sort_labels(LabelSet& set) {
  std::sort(set.found.begin(), set.found.end(),
            [](const LabelWitness& x, const LabelWitness& y) { return x.label < y.label; });
}

// discriminant of a raw (uncanonicalized) degree-s coefficient vector; the
// pencil interpolation needs values that are polynomial in the combination
// parameter, which rules out content normalization
Int raw_disc(const IntVec& c) {
  const int s = static_cast<int>(c.size()) - 1;
  if (s == 1) return 1;
  IntVec fx(s), fy(s);
  bool fx_zero = true, fy_zero = true;
  for (int i = 0; i < s; ++i) {
    fx[i] = c[i] * (s - i);
    fy[i] = c[i + 1] * (i + 1);
    if (fx[i] != 0) fx_zero = false;
    if (fy[i] != 0) fy_zero = false;
  }
  if (fx_zero || fy_zero) return 0;
  const int m = s - 1;
  IntMat mat(2 * m, IntVec(2 * m, Int(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= m; ++i) mat[r][r + i] = fx[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= m; ++i) mat[m + r][r + i] = fy[i];
  return bareiss_det(std::move(mat));
}

// disc(b1 + t b2) as a polynomial in t, by Lagrange interpolation at
// t = 0..2s-2 (the discriminant has degree <= 2s-2 in t)
QPoly pencil_disc(const BinaryForm& b1, const BinaryForm& b2) {
  const int s = b1.degree();
  const int npts = 2 * s - 1;
  std::vector<Rational> xs(npts), ys(npts);
  for (int t = 0; t < npts; ++t) {
    IntVec c(s + 1);
    for (int j = 0; j <= s; ++j) c[j] = b1.coeffs()[j] + Int(t) * b2.coeffs()[j];
    xs[t] = t;
    ys[t] = Rational(raw_disc(c));
  }
  QPoly acc;
  for (int i = 0; i < npts; ++i) {
    if (ys[i] == 0) continue;
    QPoly num = QPoly::constant(Rational(1));
    Rational den(1);
    for (int j = 0; j < npts; ++j) {
      if (j == i) continue;
      num = num * QPoly(std::vector<Rational>{-xs[j], Rational(1)});
      den *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / den) * num;
  }
  return acc;
}

// kernel dimension 2: the label count is locally constant on parameter
// cells where the pencil discriminant is nonzero, so one sample per cell
// plus the member at t = infinity sees every achievable label
LabelSet pencil_labels(const BinaryForm& b1, const BinaryForm& b2, int s) {
  LabelSet out;
  out.s = s;
  out.exactness = Exactness::Complete;

  // readable witnesses first: basis members and their simplest combinations
  // claim their labels before the cell samples fill in the rest
  auto try_nice = [&](const BinaryForm& g) {
    if (is_square_free(g)) add_label(out, a_of_member(g), g);
  };
  try_nice(b1);
  try_nice(b2);
  for (int sign : {1, -1}) {
    IntVec v(s + 1);
    for (int j = 0; j <= s; ++j) v[j] = b1.coeffs()[j] + Int(sign) * b2.coeffs()[j];
    bool nonzero = false;
    for (const auto& z : v)
      if (z != 0) nonzero = true;
    if (nonzero) try_nice(BinaryForm::from_ints(s, std::move(v)));
  }

  QPoly disc_t = pencil_disc(b1, b2);
  if (!disc_t.is_zero()) {
    // cell breakpoints: parameters with a repeated root, plus the leading
    // coefficient locus (harmless extra cell boundaries)
    QPoly breakpoints = disc_t;
    QPoly lead(std::vector<Rational>{Rational(b1.coeffs()[0]), Rational(b2.coeffs()[0])});
    if (!lead.is_zero()) breakpoints = breakpoints * lead;
    std::vector<Rational> samples;
    if (breakpoints.degree() == 0) {
      samples.push_back(0);
    } else {
      QPoly sf = breakpoints;
      QPoly g = poly_gcd(breakpoints, breakpoints.derivative());
      if (g.degree() > 0) sf = divmod(breakpoints, g).first;
      auto roots = isolate_real_roots(sf);
      samples = gap_samples(sf, roots);
    }
    for (const auto& t : samples) {
      std::vector<Rational> c(s + 1);
      for (int j = 0; j <= s; ++j)
        c[j] = Rational(b1.coeffs()[j]) + t * Rational(b2.coeffs()[j]);
      BinaryForm member(s, c);
      assert(is_square_free(member));
      add_label(out, a_of_member(member), member);
    }
  }
  // the member at t = infinity
  if (is_square_free(b2)) add_label(out, a_of_member(b2), b2);
  sort_labels(out);
  return out;
}

// s > deg f: any s distinct points span the whole space, so every split
// s = (s - 2a) + 2a is achievable; witnesses are explicit products of
// distinct linear and definite quadratic factors.
LabelSet spanning_labels(int s) {
  LabelSet out;
  out.s = s;
  out.exactness = Exactness::Complete;
  for (int a = 0; 2 * a <= s; ++a) {
    const int c = s - 2 * a;
    std::optional<BinaryForm> w;
    for (int j = 0; j < c; ++j) {
      BinaryForm lin(1, {Rational(1), Rational(-j)});
      w = w ? multiply(*w, lin) : lin;
    }
    for (int l = 1; l <= a; ++l) {
      BinaryForm quad(2, {Rational(1), Rational(0), Rational(l)});
      w = w ? multiply(*w, quad) : quad;
    }
    add_label(out, a, *w);
  }
  sort_labels(out);
  return out;
}

std::uint64_t form_hash(const BinaryForm& f, int salt) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(salt);
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(static_cast<std::uint64_t>(f.degree()));
  for (const auto& c : f.coeffs()) {
    for (char ch : c.get_str()) mix(static_cast<unsigned char>(ch));
    mix(0x7full);
  }
  return h;
}

// kernel dimension >= 3: deterministic nested grids over the combination
// coefficients, then a seeded random phase.  Every reported label is
// witnessed; absence is not certified unless every a in [0, s/2] was hit,
// in which case the set is complete outright.
LabelSet grid_labels(const ApolarProfile& p, const std::vector<BinaryForm>& basis, int s) {
  LabelSet out;
  out.s = s;
  out.exactness = Exactness::SoundPartial;
  const int k = static_cast<int>(basis.size());
  const int max_a = s / 2;
  const long kEvalCap = 30000;

  auto saturated = [&] { return static_cast<int>(out.found.size()) == max_a + 1; };
  auto try_combo = [&](const std::vector<long>& t) {
    IntVec v(s + 1, Int(0));
    for (int i = 0; i < k; ++i) {
      if (t[i] == 0) continue;
      for (int j = 0; j <= s; ++j) v[j] += Int(t[i]) * basis[i].coeffs()[j];
    }
    bool nonzero = false;
    for (const auto& z : v)
      if (z != 0) nonzero = true;
    if (!nonzero) return;
    BinaryForm g = BinaryForm::from_ints(s, std::move(v));
    if (!is_square_free(g)) return;
    add_label(out, a_of_member(g), g);
  };

  for (int level = 1; level <= 3 && !saturated(); ++level) {
    std::vector<long> t(k, -level);
    long evals = 0;
    while (true) {
      bool on_shell = false;
      for (int i = 0; i < k; ++i)
        if (t[i] == level || t[i] == -level) on_shell = true;
      if (on_shell) {  // interior points were covered by the previous level
        try_combo(t);
        if (saturated() || ++evals >= kEvalCap) break;
      }
      int i = 0;
      for (; i < k; ++i) {
        if (t[i] < level) {
          ++t[i];
          break;
        }
        t[i] = -level;
      }
      if (i == k) break;
    }
  }
  SplitMix64 rng(form_hash(p.form(), s));
  for (int r = 0; r < 256 && !saturated(); ++r) {
    std::vector<long> t(k);
    for (int i = 0; i < k; ++i) t[i] = rng.uniform(-31, 31);
    try_combo(t);
  }
  // every conceivable a witnessed: nothing is missing, so the set is complete
  if (saturated()) out.exactness = Exactness::Complete;
  sort_labels(out);
  return out;
}

}  // namespace

LabelSet labels_at(const ApolarProfile& p, int s) {
  const int d = p.degree();
  if (s < 1) throw std::invalid_argument("labels_at: s must be >= 1");
  if (s > d) return spanning_labels(s);
  const auto& basis = p.kernel(s);
  if (basis.empty())
    throw std::invalid_argument("labels_at: the degree-s apolar kernel is trivial");
  if (basis.size() == 1) {
    LabelSet out;
    out.s = s;
    out.exactness = Exactness::Complete;
    if (is_square_free(basis[0])) add_label(out, a_of_member(basis[0]), basis[0]);
    return out;
  }
  if (basis.size() == 2) return pencil_labels(basis[0], basis[1], s);
  return grid_labels(p, basis, s);
}

namespace {

AdmissibleRank admissible_from(const ApolarProfile& p, int start) {
  for (int s = start; s <= p.degree() + 1; ++s) {
    if (p.kernel_dim(s) == 0) continue;
    if (auto w = squarefree_member(p.kernel(s))) return {s, *w};
  }
  throw std::logic_error("unreachable: admissible rank is at most d + 1");
}

RealRankResult real_rank_from(const ApolarProfile& p, const AdmissibleRank& adm) {
  const int d = p.degree();
  int lo = adm.rank;
  for (int s = adm.rank; s <= d + 1; ++s) {
    if (s <= d && p.kernel_dim(s) == 0) {
      if (lo == s) lo = s + 1;  // no apolar form at all: certified negative
      continue;
    }
    LabelSet L = labels_at(p, s);
    for (const auto& w : L.found) {
      if (w.label.a == 0) {
        RealRankResult r;
        r.lo = lo;
        r.hi = s;
        r.exact = (lo == s);
        r.witness = w.g;
        return r;
      }
    }
    if (L.exactness == Exactness::Complete && lo == s) lo = s + 1;
  }
  throw std::logic_error("unreachable: label (d+1, 0) is always achievable");
}

}  // namespace

AdmissibleRank admissible_rank(const ApolarProfile& p) {
  return admissible_from(p, complex_rank(p).rank);
}

RealRankResult real_rank(const ApolarProfile& p) {
  return real_rank_from(p, admissible_rank(p));
}

ARankResult a_rank(const ApolarProfile& p, int a) {
  if (a < 0) throw std::invalid_argument("a_rank: a must be >= 0");
  const int d = p.degree();
  int lo = 0;
  for (int c = 0; c <= d + 1; ++c) {
    const int s = 2 * a + c;
    bool certified_negative = false;
    if (s == 0 || (s <= d && p.kernel_dim(s) == 0)) {
      certified_negative = true;
    } else {
      LabelSet L = labels_at(p, s);
      for (const auto& w : L.found) {
        if (w.label.a == a) {
          ARankResult r;
          r.a = a;
          r.lo = lo;
          r.hi = c;
          r.exact = (lo == c);
          r.witness = w.g;
          return r;
        }
      }
      certified_negative = (L.exactness == Exactness::Complete);
    }
    if (certified_negative && lo == c) lo = c + 1;
  }
  throw std::logic_error("unreachable: the spanning labels resolve every a by c = d + 1");
}

RankReport rank_report(const BinaryForm& f) {
  ApolarProfile p(f);
  ComplexRank cr = complex_rank(p);
  AdmissibleRank ar = admissible_from(p, cr.rank);
  RealRankResult rr = real_rank_from(p, ar);
  LabelSet ls = labels_at(p, ar.rank);
  return RankReport{f, cr, ar, rr, ls};
}

}  // namespace ranklab
