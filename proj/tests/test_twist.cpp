#include <doctest.h>

#include <random>

#include "quea/expr.hpp"
#include "quea/twist.hpp"

using namespace quea;

namespace {

TwistMatrix a2_psi() {
  RatMat p(2, 2);
  p.at(0, 1) = Rational(1, 6);
  p.at(1, 0) = Rational(-1, 6);
  return TwistMatrix::make(p);
}

VecQ alpha(int i, int n) {
  VecQ v = vq_zero(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("zero twist gives untwisted tables") {
  auto a2 = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  TwistedHopfSpec t = build_twquea(a2, TwistMatrix::zero(2), q, false);
  for (int i = 0; i < 2; ++i) {
    CHECK(tensor_normal_form(*t.base.spec, t.twisted.delta_E[i]) ==
          tensor_normal_form(*t.base.spec, t.base.hopf.delta_E[i]));
    CHECK(tensor_normal_form(*t.base.spec, t.twisted.delta_F[i]) ==
          tensor_normal_form(*t.base.spec, t.base.hopf.delta_F[i]));
    CHECK(normal_form(*t.base.spec, t.twisted.s_E[i]) ==
          normal_form(*t.base.spec, t.base.hopf.s_E[i]));
    CHECK(normal_form(*t.base.spec, t.twisted.s_F[i]) ==
          normal_form(*t.base.spec, t.base.hopf.s_F[i]));
  }
}

TEST_CASE("lattice requirements") {
  auto a2 = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  CHECK_THROWS_AS(build_twquea(a2, a2_psi(), q, false), LatticeTooSmall);
  Lattice qpsi = q_psi_lattice(a2, a2_psi());
  CHECK_NOTHROW(build_twquea(a2, a2_psi(), qpsi, false));
  // the witness names a missing vector
  try {
    build_twquea(a2, a2_psi(), q, false);
    CHECK(false);
  } catch (const LatticeTooSmall& e) {
    CHECK(!e.witness.empty());
    CHECK(!q.contains(e.witness).has_value());
  }
}

TEST_CASE("subalgebra condition") {
  auto a2 = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  CHECK(!hopf_subalgebra_condition(a2, a2_psi(), q).holds);
  CHECK(hopf_subalgebra_condition(a2, a2_psi(), q_psi_lattice(a2, a2_psi())).holds);
  // integer Psi with D = I keeps Q stable
  RatMat p(2, 2);
  p.at(0, 1) = 2;
  p.at(1, 0) = -1;
  CHECK(hopf_subalgebra_condition(a2, TwistMatrix::make(p), q).holds);
}

TEST_CASE("twisted tables on the single copy") {
  auto a2 = build_cartan(*named_cartan("A2"));
  TwistMatrix psi = a2_psi();
  Lattice qpsi = q_psi_lattice(a2, psi);
  TwistedHopfSpec t = build_twquea(a2, psi, qpsi, false);
  const AlgebraSpec& s = *t.base.spec;
  RatMat pp = psi_plus_matrix(a2, psi);
  RatMat pm = psi_minus_matrix(a2, psi);
  // Delta^Psi(E_l) = E_l (x) K_{psi_-(a_l)} + K_{a_l + psi_+(a_l)} (x) E_l
  for (int i = 0; i < 2; ++i) {
    TensorElement expect(2, 2);
    expect.add_term({Word{letter_E(i)}, Word{letter_K(pm.apply(alpha(i, 2)))}},
                    FieldScalar::one());
    expect.add_term({Word{letter_K(vq_add(alpha(i, 2), pp.apply(alpha(i, 2))))},
                     Word{letter_E(i)}},
                    FieldScalar::one());
    CHECK(tensor_normal_form(s, t.twisted.delta_E[i]) == tensor_normal_form(s, expect));
  }
  // group-likes stay group-like, counit unchanged
  AlgebraElement kg = parse_expression(s, "K[1/6,1/3]");
  TensorElement dk = twisted_coproduct(t, kg);
  TensorElement ek(2, 2);
  ek.add_term({kg.terms().begin()->first, kg.terms().begin()->first}, FieldScalar::one());
  CHECK(dk == ek);
  CHECK(counit(t.twisted, parse_expression(s, "E1")).is_zero());
}

TEST_CASE("twisted generators have primitive-shaped coproducts") {
  auto a2 = build_cartan(*named_cartan("A2"));
  TwistMatrix psi = a2_psi();
  Lattice gamma = lattice_sum(q_psi_doubled_plus(a2, psi), q_psi_doubled_minus(a2, psi));
  TwistedHopfSpec t = build_twquea(a2, psi, gamma, true);
  const AlgebraSpec& s = *t.base.spec;
  for (int i = 0; i < 2; ++i) {
    // Delta^Psi(E^Psi_l) = E^Psi_l (x) 1 + K_{tau^+_l} (x) E^Psi_l
    TensorElement got = twisted_coproduct(t, t.e_psi[i]);
    TensorElement expect(2, 2);
    for (auto& [w, c] : t.e_psi[i].terms()) expect.add_term({w, Word{}}, c);
    Word tor;
    auto& pr = t.k_psi_plus[i];
    if (!vq_is_zero(pr.second)) tor.push_back(letter_L(pr.second));
    if (!vq_is_zero(pr.first)) tor.push_back(letter_K(pr.first));
    for (auto& [w, c] : t.e_psi[i].terms()) {
      Word w2 = tor;
      // tensor term K_{tau+} (x) E^Psi
      expect.add_term({w2, w}, c);
    }
    CHECK(tensor_normal_form(s, got) == tensor_normal_form(s, expect));

    // Delta^Psi(F^Psi_l) = F^Psi_l (x) K_{-tau^-_l} + 1 (x) F^Psi_l
    TensorElement gotf = twisted_coproduct(t, t.f_psi[i]);
    TensorElement expf(2, 2);
    Word torm;
    auto& prm = t.k_psi_minus[i];
    if (!vq_is_zero(prm.second)) torm.push_back(letter_L(prm.second));
    if (!vq_is_zero(prm.first)) torm.push_back(letter_K(prm.first));
    for (auto& [w, c] : t.f_psi[i].terms()) {
      expf.add_term({w, torm}, c);
      expf.add_term({Word{}, w}, c);
    }
    CHECK(tensor_normal_form(s, gotf) == tensor_normal_form(s, expf));
  }
}

TEST_CASE("twisted Hopf axioms and algebra preservation") {
  auto a2 = build_cartan(*named_cartan("A2"));
  TwistMatrix psi = a2_psi();
  Lattice qpsi = q_psi_lattice(a2, psi);
  TwistedHopfSpec t = build_twquea(a2, psi, qpsi, false);
  // the twist reuses the untwisted rewrite system
  CHECK(t.twisted.spec == t.base.hopf.spec);
  auto rep = check_hopf_axioms(t.twisted, 3);
  CHECK(rep.clean());
}

TEST_CASE("doubled twisted Hopf axioms") {
  auto a2 = build_cartan(*named_cartan("A2"));
  TwistMatrix psi = a2_psi();
  Lattice gamma = lattice_sum(q_psi_doubled_plus(a2, psi), q_psi_doubled_minus(a2, psi));
  TwistedHopfSpec t = build_twquea(a2, psi, gamma, true);
  auto rep = check_hopf_axioms(t.twisted, 2);
  CHECK(rep.clean());
  CHECK(rep.checks > 0);
}

TEST_CASE("twist iteration") {
  auto a2 = build_cartan(*named_cartan("A2"));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int tcase = 0; tcase < 4; ++tcase) {
    RatMat p1(2, 2), p2(2, 2);
    Rational v1(num(rng), 6), v2(num(rng), 6);
    v1.canonicalize();
    v2.canonicalize();
    p1.at(0, 1) = v1;
    p1.at(1, 0) = -v1;
    p2.at(0, 1) = v2;
    p2.at(1, 0) = -v2;
    TwistMatrix psi = TwistMatrix::make(p1), psi2 = TwistMatrix::make(p2);
    Lattice gamma = lattice_sum(lattice_sum(q_psi_lattice(a2, psi), q_psi_lattice(a2, psi2)),
                                q_psi_lattice(a2, psi + psi2));
    auto rep = iterate_twist_check(a2, psi, psi2, gamma, false);
    CHECK(rep.clean());
    // psi' = 0 fixes the tables, psi' = -psi recovers the untwisted ones
    CHECK(iterate_twist_check(a2, psi, TwistMatrix::zero(2), gamma, false).clean());
    CHECK(iterate_twist_check(a2, psi, psi.negated(), gamma, false).clean());
  }
}
