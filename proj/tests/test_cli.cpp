#include <doctest.h>

#include "quea/config.hpp"
#include "quea/expr.hpp"
#include "quea/quantum.hpp"

using namespace quea;

TEST_CASE("config parsing") {
  SUBCASE("named type with psi, N derived") {
    RunConfig cfg = parse_config(R"({"cartan":"A2","psi":[[0,"1/6"],["-1/6",0]]})");
    CHECK(cfg.cartan.rank == 2);
    REQUIRE(cfg.psi.has_value());
    CHECK(cfg.psi->psi.at(0, 1) == Rational(1, 6));
    CHECK(cfg.scalar_ctx.root_order == 6);
  }
  SUBCASE("explicit matrix equals the named type") {
    RunConfig a = parse_config(R"({"cartan":[[2,-1],[-1,2]]})");
    RunConfig b = parse_config(R"({"cartan":"A2"})");
    CHECK(a.cartan.A == b.cartan.A);
    CHECK(a.cartan.d == b.cartan.d);
  }
  SUBCASE("non-Cartan R is rejected") {
    CHECK_THROWS_AS(parse_config(R"({"cartan":"A2","R":[[2,-3],[0,2]]})"), InconsistentData);
  }
  SUBCASE("schema errors carry a path") {
    CHECK_THROWS_AS(parse_config(R"({"psi":[[0]]})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"cartan":"Z9"})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"cartan":"A2","degree_bound":9})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"cartan":"A2","psi":[[0,"1/0"],[0,0]]})"), SchemaError);
  }
  SUBCASE("lattices by name") {
    RunConfig cfg = parse_config(
        R"({"cartan":"A2","psi":[[0,"1/6"],["-1/6",0]],"lattices":{"plus":"Q_psi","minus":"Q"}})");
    REQUIRE(cfg.lattice_plus.has_value());
    CHECK(cfg.lattice_plus->contains(VecQ{Rational(1, 6), Rational(1, 3)}).has_value());
    // root order picks up the lattice index contribution
    CHECK(cfg.scalar_ctx.root_order % 6 == 0);
  }
  SUBCASE("weight lattice by name") {
    RunConfig cfg = parse_config(R"({"cartan":"A2","lattices":{"plus":"P","minus":"Q"}})");
    REQUIRE(cfg.lattice_plus.has_value());
    CHECK(cfg.lattice_plus->contains(VecQ{Rational(2, 3), Rational(1, 3)}).has_value());
  }
}

TEST_CASE("expression grammar") {
  auto c = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  HopfAlgebra h = build_mpquea(c, MultiparamExponent{c.DA}, q, q, Flavor::full);
  const AlgebraSpec& s = *h.spec;
  CHECK(parse_expression(s, "E1*F1") ==
        multiply(s, parse_expression(s, "E1"), parse_expression(s, "F1")));
  AlgebraElement scaled = parse_expression(s, "q^(1/2)*K[1,0]*E2");
  CHECK(scaled.terms().begin()->second == FieldScalar::q_pow(Rational(1, 2)));
  CHECK_THROWS_AS(parse_expression(s, "K[1/2,0]"), ExponentNotInLattice);
  CHECK_THROWS_AS(parse_expression(s, "Q1"), ParseError);
}
