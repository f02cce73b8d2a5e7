#include <doctest.h>

#include <random>

#include "quea/multiparam.hpp"

using namespace quea;

namespace {

TwistMatrix rand_antisym(std::mt19937_64& rng, int n) {
  RatMat m(n, n);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 12);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return TwistMatrix::make(m);
}

TwistMatrix a2_psi() {
  RatMat p(2, 2);
  p.at(0, 1) = Rational(1, 6);
  p.at(1, 0) = Rational(-1, 6);
  return TwistMatrix::make(p);
}

RatMat mat2(long a, long b, long c, long d) {
  RatMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("theta") {
  auto a2 = build_cartan(*named_cartan("A2"));
  CHECK(theta(a2, TwistMatrix::zero(2)).R == a2.DA);
  // worked example, cross-checked by the direct matrix product
  RatMat expect = a2.DA + a2.A.transpose() * (a2_psi().psi.transpose() - a2_psi().psi) * a2.A;
  CHECK(theta(a2, a2_psi()).R == expect);
  CHECK(theta(a2, a2_psi()).R == mat2(2, -2, 0, 2));
  // image characterization R + R^T = 2DA, and theta only sees the
  // antisymmetric part
  std::mt19937_64 rng(3);
  for (auto name : {"A2", "B2", "G2"}) {
    auto c = build_cartan(*named_cartan(name));
    for (int t = 0; t < 20; ++t) {
      RatMat any(c.rank, c.rank);
      std::uniform_int_distribution<int> num(-3, 3), den(1, 12);
      for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) {
          Rational v(num(rng), den(rng));
          v.canonicalize();
          any.at(i, j) = v;
        }
      TwistMatrix full = TwistMatrix::make(any);
      MultiparamExponent r = theta(c, full);
      CHECK(r.R + r.R.transpose() == c.DA.scale(Rational(2)));
      TwistMatrix anti = TwistMatrix::make((any - any.transpose()).scale(Rational(1, 2)));
      CHECK(theta(c, anti).R == r.R);
      // P - DA is antisymmetric
      RatMat p = r.R - c.DA;
      CHECK((p + p.transpose()).is_zero());
    }
  }
}

TEST_CASE("xi and the bijection") {
  auto a2 = build_cartan(*named_cartan("A2"));
  CHECK(xi(a2, MultiparamExponent{a2.DA}).psi.is_zero());
  CHECK(xi(a2, MultiparamExponent{mat2(2, -2, 0, 2)}).psi == a2_psi().psi);
  CHECK_THROWS_AS(xi(a2, MultiparamExponent{mat2(2, -3, 0, 2)}), NotInImageDomain);
  auto aff = build_cartan(mat2(2, -2, -2, 2));
  CHECK_THROWS_AS(xi(aff, MultiparamExponent{aff.DA}), NotFiniteType);

  std::mt19937_64 rng(5);
  for (auto name : {"A2", "A3", "B2", "G2"}) {
    auto c = build_cartan(*named_cartan(name));
    for (int t = 0; t < 25; ++t) {
      TwistMatrix psi = rand_antisym(rng, c.rank);
      CHECK(xi(c, theta(c, psi)).psi == psi.psi);
      MultiparamExponent r{c.DA + rand_antisym(rng, c.rank).psi};
      CHECK(theta(c, xi(c, r)).R == r.R);
    }
  }
}

TEST_CASE("sigma from psi and back") {
  auto a2 = build_cartan(*named_cartan("A2"));
  CHECK(sigma_from_psi(a2, TwistMatrix::zero(2)).S.is_zero());
  RatMat s = sigma_from_psi(a2, a2_psi()).S;
  CHECK(s.at(0, 0) == 0);
  CHECK(s.at(0, 1) == Rational(-1, 2));
  CHECK(s.at(1, 0) == Rational(1, 2));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    TwistMatrix psi = rand_antisym(rng, 2);
    CHECK(psi_from_sigma(a2, sigma_from_psi(a2, psi)).psi == psi.psi);
  }
}

TEST_CASE("cartan type and canonical") {
  auto a2 = build_cartan(*named_cartan("A2"));
  CHECK(is_cartan_type(a2, MultiparamExponent{a2.DA}));
  CHECK(canonical_of(a2, MultiparamExponent{a2.DA}).R == a2.DA);
  MultiparamExponent r{mat2(2, -2, 0, 2)};
  CHECK(is_cartan_type(a2, r));
  CHECK(canonical_of(a2, r).R == a2.DA);
  CHECK(!is_cartan_type(a2, MultiparamExponent{mat2(2, -3, 0, 2)}));
  CHECK_THROWS_AS(canonical_of(a2, MultiparamExponent{mat2(2, -3, 0, 2)}), NotCartanType);
  // every Cartan-type R is twist-equivalent to its canonical form
  CHECK(twist_equivalent(r, canonical_of(a2, r)));
}

TEST_CASE("dynkin diagram") {
  auto a2 = build_cartan(*named_cartan("A2"));
  DynkinDiagram d = dynkin_diagram(MultiparamExponent{a2.DA});
  CHECK(d.vertex_labels == VecQ{Rational(2), Rational(2)});
  REQUIRE(d.edges.size() == 1);
  CHECK(std::get<2>(d.edges[0]) == -2);
  CHECK(!d.text().empty());
}

TEST_CASE("twist equivalence and the nu action") {
  auto a2 = build_cartan(*named_cartan("A2"));
  MultiparamExponent da{a2.DA};
  MultiparamExponent r{mat2(2, -2, 0, 2)};
  CHECK(twist_equivalent(da, da));
  CHECK(equivalence_witness(da, da).N.is_zero());
  CHECK(twist_equivalent(da, r));
  ActionExponent w = equivalence_witness(da, r);
  CHECK(w.N == mat2(0, -1, 0, 0));
  CHECK(act_nu(w, da).R == r.R);
  CHECK_THROWS_AS(equivalence_witness(da, MultiparamExponent{mat2(4, -2, -2, 4)}), NotEquivalent);
  // additive action
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(-4, 4);
  for (int t = 0; t < 30; ++t) {
    RatMat n1(2, 2), n2(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        n1.at(i, j) = num(rng);
        n2.at(i, j) = Rational(num(rng), 3);
        n2.at(i, j).canonicalize();
      }
    ActionExponent a{n1}, b{n2};
    CHECK(act_nu(a, act_nu(b, da)).R == act_nu(ActionExponent{n1 + n2}, da).R);
  }
}

TEST_CASE("approx equivalence") {
  auto a2 = build_cartan(*named_cartan("A2"));
  MultiparamExponent r{mat2(2, -2, 0, 2)};
  auto self = approx_equivalent(r, r);
  REQUIRE(self.has_value());
  CHECK(self->gamma == std::vector<int>{0, 1});
  CHECK(!self->chevalley);

  MultiparamExponent swapped{mat2(2, 0, -2, 2)};
  auto sw = approx_equivalent(r, swapped);
  REQUIRE(sw.has_value());
  CHECK(sw->gamma == std::vector<int>{1, 0});
  CHECK(!sw->chevalley);

  MultiparamExponent neg{r.R.transpose().scale(Rational(-1))};
  auto ch = approx_equivalent(r, neg);
  REQUIRE(ch.has_value());
  CHECK(ch->chevalley);

  CHECK(!approx_equivalent(r, MultiparamExponent{mat2(4, -4, 0, 4)}).has_value());

  RatMat big(7, 7);
  for (int i = 0; i < 7; ++i) big.at(i, i) = 2;
  CHECK_THROWS_AS(approx_equivalent(MultiparamExponent{big}, MultiparamExponent{big}),
                  RankTooLarge);
}
