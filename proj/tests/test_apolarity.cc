#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "ranklab/apolarity.hpp"
#include "ranklab/prng.hpp"

using namespace ranklab;

namespace {

BinaryForm form(std::initializer_list<long> cs) {
  IntVec v;
  for (long c : cs) v.push_back(Int(c));
  int d = static_cast<int>(v.size()) - 1;
  return BinaryForm::from_ints(d, std::move(v));
}

}  // namespace

TEST_CASE("binary form canonicalization and evaluation") {
  BinaryForm f(2, {Rational(2, 3), Rational(0), Rational(-4, 3)});
  CHECK(f.coeffs() == IntVec{1, 0, -2});  // content out, leading positive
  BinaryForm g(2, {Rational(-1), Rational(0), Rational(2)});
  CHECK(f == g);
  CHECK_THROWS(BinaryForm(1, {Rational(0), Rational(0)}));
  CHECK(f.eval(GaussianRational(Rational(1)), GaussianRational(Rational(2))) ==
        GaussianRational(Rational(-7)));
  CHECK(form({0, 1, 0, 0}).pretty() == "x^2*y");
}

TEST_CASE("dehomogenization conventions") {
  BinaryForm f = form({1, 0, -1});  // x^2 - y^2
  // f(t, 1) = t^2 - 1 (coefficient i multiplies t^i)
  CHECK(f.dehomogenize() == QPoly(std::vector<Rational>{-1, 0, 1}));
  // f(1, u) = 1 - u^2
  CHECK(f.dehomogenize_rev() == QPoly(std::vector<Rational>{1, 0, -1}));
  BinaryForm xy2 = form({0, 0, 1});  // y^2: drops degree when y = 1
  CHECK(xy2.dehomogenize().degree() == 0);
}

TEST_CASE("projective square-freeness") {
  CHECK(is_square_free(form({0, 1, 0})));      // xy
  CHECK(is_square_free(form({1, 0, -1})));     // x^2 - y^2
  CHECK(is_square_free(form({1, 0, 1})));      // x^2 + y^2
  CHECK(!is_square_free(form({1, 0, 0})));     // x^2
  CHECK(!is_square_free(form({0, 1, 0, 0})));  // x^2 y
  CHECK(is_square_free(form({1, 1})));         // degree 1 always
  auto [tot, re] = projective_root_profile(form({1, 0, -1}));
  CHECK(tot == 2);
  CHECK(re == 2);
  auto [tot2, re2] = projective_root_profile(form({1, 0, 1}));
  CHECK(tot2 == 2);
  CHECK(re2 == 0);
  // x^3 - x y^2 = x(x-y)(x+y)
  auto [tot3, re3] = projective_root_profile(form({1, 0, -1, 0}));
  CHECK(tot3 == 3);
  CHECK(re3 == 3);
}

TEST_CASE("apolar action matches literal differentiation") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng.uniform(1, 7));
    int s = 1 + static_cast<int>(rng.uniform(0, d - 1));
    IntVec fc(d + 1), gc(s + 1);
    bool fz = true, gz = true;
    for (auto& c : fc) {
      c = rng.uniform(-9, 9);
      if (c != 0) fz = false;
    }
    for (auto& c : gc) {
      c = rng.uniform(-9, 9);
      if (c != 0) gz = false;
    }
    if (fz) fc[0] = 1;
    if (gz) gc[0] = 1;
    BinaryForm f = BinaryForm::from_ints(d, fc);
    BinaryForm g = BinaryForm::from_ints(s, gc);
    IntVec lib = apolar_action(g, f);
    auto ora = oracle::act(oracle::to_vec(g), oracle::to_vec(f));
    REQUIRE(lib.size() == ora.size());
    // canonicalization scales f and g; the action scales by the product
    Rational ratio(0);
    for (size_t i = 0; i < lib.size(); ++i) {
      if (ora[i] == 0) {
        CHECK(lib[i] == 0);
        continue;
      }
      Rational r = Rational(lib[i]) / ora[i];
      if (ratio == 0)
        ratio = r;
      else
        CHECK(r == ratio);
    }
  }
}

TEST_CASE("catalecticant kernels, frozen values") {
  // x^2 + y^2 at s = 2: operators XY and X^2 - Y^2 annihilate
  auto k = catalecticant_kernel(form({1, 0, 1}), 2);
  REQUIRE(k.size() == 2);
  std::set<BinaryForm> got(k.begin(), k.end());
  CHECK(got.count(form({0, 1, 0})) == 1);
  CHECK(got.count(form({1, 0, -1})) == 1);

  // x^3 + y^3 at s = 2: only XY
  auto k2 = catalecticant_kernel(form({1, 0, 0, 1}), 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == form({0, 1, 0}));

  // at s = d + 1 the kernel is everything
  CHECK(catalecticant_kernel(form({1, 0, 1}), 3).size() == 4);
}

TEST_CASE("apolar profile caches all degrees consistently") {
  BinaryForm f = form({3, -1, 4, 1, -5});
  ApolarProfile p(f);
  for (int s = 1; s <= f.degree() + 1; ++s) {
    auto direct = catalecticant_kernel(f, s);
    CHECK(p.kernel(s).size() == direct.size());
    for (size_t i = 0; i < direct.size(); ++i) CHECK(p.kernel(s)[i] == direct[i]);
  }
  CHECK(p.min_kernel_degree() == 3);  // generic quartic
  CHECK_THROWS(p.kernel(0));
  CHECK_THROWS(p.kernel(f.degree() + 2));
}

TEST_CASE("apolar generators, frozen values") {
  // x^2 y: ideal is (Y^2, X^3)
  ApolarProfile p(form({0, 1, 0, 0}));
  auto [g1, g2] = apolar_generators(p);
  CHECK(g1 == form({0, 0, 1}));
  CHECK(g2 == form({1, 0, 0, 0}));

  // generic cubic x^3 + y^3: degrees 2 and 3 (sum d + 2 = 5)
  ApolarProfile q(form({1, 0, 0, 1}));
  auto [h1, h2] = apolar_generators(q);
  CHECK(h1.degree() + h2.degree() == 5);
  CHECK(h1 == form({0, 1, 0}));
  // g2 independent of the multiples of g1
  CHECK(apolar_action(h2, q.form()) == IntVec{0});
}

TEST_CASE("squarefree member search") {
  // {X^2, Y^2}: X^2 + Y^2 works
  std::vector<BinaryForm> basis{form({1, 0, 0}), form({0, 0, 1})};
  auto m = squarefree_member(basis);
  REQUIRE(m);
  CHECK(is_square_free(*m));
  // {Y^2, XY^2 ...}: multiples of y^2 never square-free
  std::vector<BinaryForm> hopeless{form({0, 0, 1, 0}), form({0, 0, 0, 1})};
  CHECK(!squarefree_member(hopeless));
}

TEST_CASE("complex rank, frozen values") {
  for (int d = 2; d <= 6; ++d) {
    IntVec v(d + 1, Int(0));
    v[0] = 1;
    ApolarProfile p(BinaryForm::from_ints(d, v));
    CHECK(complex_rank(p).rank == 1);  // x^d
  }
  CHECK(complex_rank(ApolarProfile(form({1, 0, 0, 1}))).rank == 2);  // x^3 + y^3
  CHECK(complex_rank(ApolarProfile(form({0, 1, 0, 0}))).rank == 3);  // x^2 y
  CHECK(complex_rank(ApolarProfile(form({1, 0, 6, 0, 1}))).rank == 2);
  auto cr = complex_rank(ApolarProfile(form({1, -2, -1, 2, 0})));
  CHECK(cr.rank == 3);
  CHECK(is_square_free(cr.witness));
  CHECK(cr.witness.degree() == 3);
}

TEST_CASE("complex rank witness is always a square-free annihilator") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + static_cast<int>(rng.uniform(0, 5));
    IntVec v(d + 1);
    bool z = true;
    for (auto& c : v) {
      c = rng.uniform(-20, 20);
      if (c != 0) z = false;
    }
    if (z) v[0] = 1;
    BinaryForm f = BinaryForm::from_ints(d, v);
    ApolarProfile p(f);
    auto cr = complex_rank(p);
    CHECK(is_square_free(cr.witness));
    CHECK(cr.witness.degree() == cr.rank);
    if (cr.rank <= d) {
      IntVec zero(d - cr.rank + 1, Int(0));
      CHECK(apolar_action(cr.witness, f) == zero);
    }
  }
}
