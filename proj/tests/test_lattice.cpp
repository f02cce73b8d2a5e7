#include <doctest.h>

#include <random>

#include "quea/lattice.hpp"

using namespace quea;

namespace {

// independent oracle: the double-sum definition of psi_pm
VecQ psi_double_sum(const CartanDatum& c, const RatMat& psi, int sign, const VecQ& v) {
  int n = c.rank;
  VecQ out = vq_zero(n);
  for (int l = 0; l < n; ++l) {
    if (v[l] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational pij = sign >= 0 ? psi.at(i, j) : psi.at(j, i);
        out[i] += v[l] * pij * c.a(j, l) / c.d[i];
      }
  }
  return out;
}

TwistMatrix rand_psi(std::mt19937_64& rng, int n) {
  RatMat m(n, n);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 12);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      m.at(i, j) = v;
    }
  return TwistMatrix::make(m);
}

VecQ alpha(int i, int n) {
  VecQ v = vq_zero(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("psi_apply against the double-sum oracle") {
  auto a2 = build_cartan(*named_cartan("A2"));
  SUBCASE("zero twist") {
    TwistMatrix z = TwistMatrix::zero(2);
    LatticeVector v{alpha(0, 2), Side::plain};
    CHECK(vq_is_zero(psi_apply(a2, z, +1, v).coords));
    CHECK(vq_is_zero(psi_apply(a2, z, -1, v).coords));
  }
  SUBCASE("rank 1") {
    auto a1 = build_cartan(*named_cartan("A1"));
    RatMat p(1, 1);
    p.at(0, 0) = Rational(5, 7);
    TwistMatrix t = TwistMatrix::make(p);
    // psi_+(alpha_1) = 2 psi_11 alpha_1
    auto r = psi_apply(a1, t, +1, {alpha(0, 1), Side::plain});
    CHECK(r.coords[0] == Rational(10, 7));
  }
  SUBCASE("worked A2 example") {
    RatMat p(2, 2);
    p.at(0, 1) = Rational(1, 6);
    p.at(1, 0) = Rational(-1, 6);
    TwistMatrix t = TwistMatrix::make(p);
    auto r = psi_apply(a2, t, +1, {alpha(0, 2), Side::plain});
    CHECK(r.coords[0] == Rational(-1, 6));
    CHECK(r.coords[1] == Rational(-1, 3));
  }
  SUBCASE("random matrices, both signs, all types") {
    std::mt19937_64 rng(7);
    for (auto name : {"A2", "B2", "G2", "A3"}) {
      auto c = build_cartan(*named_cartan(name));
      for (int t = 0; t < 20; ++t) {
        TwistMatrix psi = rand_psi(rng, c.rank);
        for (int i = 0; i < c.rank; ++i)
          for (int sign : {+1, -1}) {
            auto fast = psi_apply(c, psi, sign, {alpha(i, c.rank), Side::plain});
            auto slow = psi_double_sum(c, psi.psi, sign, alpha(i, c.rank));
            CHECK(fast.coords == slow);
          }
      }
    }
  }
}

TEST_CASE("lattice membership and witnesses") {
  Lattice q = Lattice::root_lattice(2);
  CHECK(q.contains(VecQ{Rational(1), Rational(1)}).has_value());
  CHECK(!q.contains(VecQ{Rational(1, 2), Rational(0)}).has_value());

  Lattice g({VecQ{Rational(1, 2), Rational(0)}, VecQ{Rational(0), Rational(1)}});
  auto w = g.contains(VecQ{Rational(3, 2), Rational(1)});
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 3);
  CHECK((*w)[1] == 1);
  // reconstructing from the witness reproduces the vector
  VecQ rec = vq_zero(2);
  for (size_t i = 0; i < w->size(); ++i)
    rec = vq_add(rec, vq_scale(Rational((*w)[i]), g.basis()[i]));
  CHECK(rec == VecQ{Rational(3, 2), Rational(1)});
}

TEST_CASE("lattice sums and images") {
  Lattice q = Lattice::root_lattice(2);
  CHECK(lattice_sum(q, q).spans_same(q));
  RankDeficient rd;
  Lattice img = image_lattice(RatMat::identity(2), q, &rd);
  CHECK(!rd.flag);
  CHECK(img.spans_same(q));

  // commutative/associative/idempotent up to span equality
  Lattice a({VecQ{Rational(1, 2), Rational(0)}, VecQ{Rational(0), Rational(1)}});
  Lattice b({VecQ{Rational(1), Rational(1, 3)}, VecQ{Rational(1), Rational(0)}});
  CHECK(lattice_sum(a, b).spans_same(lattice_sum(b, a)));
  CHECK(lattice_sum(lattice_sum(a, b), q).spans_same(lattice_sum(a, lattice_sum(b, q))));
  CHECK(lattice_sum(a, a).spans_same(a));

  // rank-deficient image is reported
  RatMat proj(2, 2);
  proj.at(0, 0) = 1;
  image_lattice(proj, q, &rd);
  CHECK(rd.flag);
}

TEST_CASE("Q^Psi index computed by two routes") {
  auto a2 = build_cartan(*named_cartan("A2"));
  RatMat p(2, 2);
  p.at(0, 1) = Rational(1, 6);
  p.at(1, 0) = Rational(-1, 6);
  TwistMatrix t = TwistMatrix::make(p);
  Lattice qpsi = q_psi_lattice(a2, t);
  Lattice q = Lattice::root_lattice(2);
  CHECK(qpsi.contains_lattice(q));
  Integer idx = qpsi.index_over(q);
  // oracle: 1/|det(basis)| of the canonical rows
  RatMat bm = RatMat::from_rows(qpsi.canonical_rows());
  Rational det = bm.det();
  if (det < 0) det = -det;
  CHECK(Rational(idx) * det == 1);
  CHECK(idx == 12);
}

TEST_CASE("twisted basis") {
  auto a2 = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  SUBCASE("zero twist gives the embedded bases") {
    TwistMatrix z = TwistMatrix::zero(2);
    TwistedBasis tb = twisted_basis(a2, z, q, q);
    CHECK(tb.varpi_plus[0] == vq_concat(alpha(0, 2), vq_zero(2)));
    CHECK(tb.varpi_minus[1] == vq_concat(vq_zero(2), alpha(1, 2)));
    CHECK(tb.tau_plus[0] == vq_concat(alpha(0, 2), vq_zero(2)));
  }
  SUBCASE("tau vectors from the psi oracle") {
    RatMat p(2, 2);
    p.at(0, 1) = Rational(1, 6);
    p.at(1, 0) = Rational(-1, 6);
    TwistMatrix t = TwistMatrix::make(p);
    TwistedBasis tb = twisted_basis(a2, t, q, q);
    VecQ pp = psi_apply(a2, t, +1, {alpha(0, 2), Side::plain}).coords;
    VecQ pm = psi_apply(a2, t, -1, {alpha(0, 2), Side::plain}).coords;
    CHECK(tb.tau_plus[0] == vq_concat(vq_add(alpha(0, 2), pp), vq_neg(pm)));
    CHECK(tb.tau_minus[0] == vq_concat(vq_neg(pp), vq_add(alpha(0, 2), pm)));
  }
  SUBCASE("varpi coordinate matrix is nonsingular for random antisymmetric Psi") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 12);
    for (int tcase = 0; tcase < 100; ++tcase) {
      RatMat m(2, 2);
      Rational v(num(rng), den(rng));
      v.canonicalize();
      m.at(0, 1) = v;
      m.at(1, 0) = -v;
      TwistedBasis tb = twisted_basis(a2, TwistMatrix::make(m), q, q);
      RatMat big(4, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
          big.at(i, j) = tb.varpi_plus[i][j];
          big.at(2 + i, j) = tb.varpi_minus[i][j];
        }
      CHECK(big.det() != 0);
    }
  }
}

TEST_CASE("root twisting lemmas on random rational Psi") {
  std::mt19937_64 rng(23);
  for (auto name : {"A2", "A3", "B2", "G2"}) {
    auto c = build_cartan(*named_cartan(name));
    int n = c.rank;
    for (int t = 0; t < 25; ++t) {
      TwistMatrix psi = rand_psi(rng, n);
      RatMat diff = psi_plus_matrix(c, psi) - psi_minus_matrix(c, psi);
      // antisymmetry w.r.t. the root form
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational lhs = root_pairing(c, diff.col(i), alpha(j, n)) +
                         root_pairing(c, alpha(i, n), diff.col(j));
          CHECK(lhs == 0);
        }
      // id +- (psi_+ - psi_-) is bijective
      CHECK((RatMat::identity(n) + diff).det() != 0);
      CHECK((RatMat::identity(n) - diff).det() != 0);
    }
  }
}

TEST_CASE("side tags propagate") {
  auto a2 = build_cartan(*named_cartan("A2"));
  TwistMatrix z = TwistMatrix::zero(2);
  LatticeVector v{alpha(0, 2), Side::plus};
  CHECK(psi_apply(a2, z, +1, v).side == Side::plus);
}
