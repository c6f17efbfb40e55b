#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ranklab/interval.hpp"
#include "ranklab/linalg.hpp"
#include "ranklab/poly.hpp"
#include "ranklab/prng.hpp"
#include "ranklab/rational.hpp"
#include "ranklab/sturm.hpp"

using namespace ranklab;

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-6/8") == Rational(-3, 4));
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("a"));
  CHECK(!parse_rational(""));
  CHECK(rat_str(Rational(-3, 4)) == "-3/4");
  CHECK(rat_str(Rational(5)) == "5");
}

TEST_CASE("gaussian rationals") {
  GaussianRational z(Rational(1, 2), Rational(-3));
  CHECK(z.conj() == GaussianRational(Rational(1, 2), Rational(3)));
  CHECK(z.norm() == Rational(1, 4) + Rational(9));
  CHECK((z * z.conj()).is_real());
  GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(Rational(-1)));
  CHECK((GaussianRational(Rational(2)) / i) == GaussianRational(Rational(0), Rational(-2)));
  CHECK(gauss_str(i) == "i");
  CHECK(*parse_gaussian("1/2-3i") == z);
  CHECK(*parse_gaussian(gauss_str(z)) == z);
}

TEST_CASE("polynomial arithmetic and gcd") {
  // (t - 1)(t + 2) = t^2 + t - 2
  QPoly a(std::vector<Rational>{-2, 1, 1});
  QPoly b(std::vector<Rational>{-1, 1});  // t - 1
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == QPoly(std::vector<Rational>{2, 1}));
  CHECK(poly_gcd(a, b) == b.monic());
  CHECK(a.derivative() == QPoly(std::vector<Rational>{1, 2}));
  CHECK(a.eval(Rational(1)) == 0);
  CHECK(a.eval(Rational(2)) == 4);
  CHECK(poly_is_square_free(a));
  CHECK(!poly_is_square_free(b * b));
}

TEST_CASE("bareiss determinant and integer kernel") {
  IntMat m{{2, 0, 1}, {1, 1, 0}, {0, 3, 4}};
  CHECK(bareiss_det(m) == 11);
  IntMat sing{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(bareiss_det(sing) == 0);
  CHECK(int_rank(sing) == 2);
  auto k = int_kernel(sing);
  REQUIRE(k.size() == 1);
  // kernel vector is primitive with positive leading entry
  CHECK(k[0] == IntVec{1, 1, -1});
}

TEST_CASE("field solve over Q and Q(i)") {
  // columns of [[1,2],[3,4]]
  std::vector<std::vector<Rational>> cols{{1, 3}, {2, 4}};
  auto x = field_solve(cols, std::vector<Rational>{5, 11});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);
  CHECK(field_rank(cols) == 2);

  // inconsistent system
  std::vector<std::vector<Rational>> bad{{1, 2}, {2, 4}};
  CHECK(!field_solve(bad, std::vector<Rational>{1, 0}));

  GaussianRational i(Rational(0), Rational(1));
  std::vector<std::vector<GaussianRational>> gc{{GaussianRational(Rational(1)), i}};
  auto gx = field_solve(gc, std::vector<GaussianRational>{i, GaussianRational(Rational(-1))});
  REQUIRE(gx);
  CHECK((*gx)[0] == i);
}

TEST_CASE("sturm isolation") {
  // (t^2 - 2)(t - 3): roots -sqrt2, sqrt2, 3
  QPoly f(std::vector<Rational>{6, -2, -3, 1});
  CHECK(sturm_count(f) == 3);
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  // root 3 should be isolated; refine and bracket it
  refine_root(f, roots[2], Rational(1, 1024));
  CHECK(roots[2].lo <= 3);
  CHECK(3 <= roots[2].hi);
  auto samples = gap_samples(f, roots);
  REQUIRE(samples.size() == 4);
  for (const auto& t : samples) CHECK(sign_at(f, t) != 0);
  // samples interleave: signs alternate for a cubic with 3 simple roots
  CHECK(sign_at(f, samples[0]) == -1);
  CHECK(sign_at(f, samples[1]) == 1);
  CHECK(sign_at(f, samples[2]) == -1);
  CHECK(sign_at(f, samples[3]) == 1);
}

TEST_CASE("sturm count on intervals") {
  QPoly f(std::vector<Rational>{-2, 0, 1});  // t^2 - 2
  CHECK(sturm_count(f, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(f, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(f, Rational(2), Rational(3)) == 0);
}

TEST_CASE("interval arithmetic is containment-correct") {
  RInterval a(Rational(-1, 2), Rational(1, 3));
  RInterval b(Rational(2), Rational(3));
  SplitMix64 rng(42);
  auto sample = [&](const RInterval& iv) {
    // random rational inside [lo, hi]; the two-arg ctor does not reduce, so
    // canonicalize before arithmetic (mpq requires canonical operands)
    Rational t(rng.uniform(0, 1024), 1024);
    t.canonicalize();
    return Rational(iv.lo + (iv.hi - iv.lo) * t);
  };
  for (int k = 0; k < 200; ++k) {
    Rational x = sample(a), y = sample(b);
    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    CHECK(scale(Rational(-7, 3), a).contains(Rational(-7, 3) * x));
  }
  CHECK(a.mag() == Rational(1, 2));
  CHECK(b.mag() == Rational(3));
  CHECK(a.contains_zero());
  CHECK(!b.contains_zero());
  CHECK(disjoint(a, b));
  CHECK(inside(RInterval(Rational(21, 10), Rational(29, 10)), b));
  CHECK(!inside(b, b));
}

TEST_CASE("complex rectangle arithmetic") {
  CInterval a(RInterval(Rational(0), Rational(1)), RInterval(Rational(-1), Rational(0)));
  CInterval b = CInterval::point(GaussianRational(Rational(2), Rational(1)));
  GaussianRational x(Rational(1, 2), Rational(-1, 2));
  GaussianRational y(Rational(2), Rational(1));
  CHECK(a.contains(x));
  CHECK((a * b).contains(x * y));
  CHECK((a + b).contains(x + y));
  CHECK(conj(a).contains(x.conj()));
  CHECK(a.mag_upper() >= Rational(1));
  CHECK(scale(y, a).contains(y * x));
}

TEST_CASE("splitmix64 streams are reproducible and distinct") {
  CHECK(stream_seed(1, 0) == stream_seed(1, 0));
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 0) != stream_seed(2, 0));
  SplitMix64 g(stream_seed(9, 4));
  for (int k = 0; k < 100; ++k) {
    long v = g.uniform(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
  }
}
