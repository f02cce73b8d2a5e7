#include <benchmark/benchmark.h>

#include <random>

#include "quea/expr.hpp"
#include "quea/quantum.hpp"
#include "quea/verify.hpp"

using namespace quea;

namespace {

HopfAlgebra canonical(const char* name) {
  auto c = build_cartan(*named_cartan(name));
  Lattice q = Lattice::root_lattice(c.rank);
  return build_mpquea(c, MultiparamExponent{c.DA}, q, q, Flavor::full);
}

void BM_normal_form_serre(benchmark::State& state) {
  HopfAlgebra h = canonical("A2");
  AlgebraElement x(2);
  Word w;
  for (int i = 0; i < 3; ++i) w.push_back(letter_E(1));
  for (int i = 0; i < 3; ++i) w.push_back(letter_E(0));
  x.add_term(w, FieldScalar::one());
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(*h.spec, x));
}
BENCHMARK(BM_normal_form_serre);

void BM_ef_straightening(benchmark::State& state) {
  HopfAlgebra h = canonical("B2");
  AlgebraElement x = parse_expression(*h.spec, "E1*E2*F1*F2");
  AlgebraElement y = parse_expression(*h.spec, "E2*F1");
  for (auto _ : state) benchmark::DoNotOptimize(multiply(*h.spec, x, y));
}
BENCHMARK(BM_ef_straightening);

void BM_theta_xi_roundtrip(benchmark::State& state) {
  auto c = build_cartan(*named_cartan("G2"));
  std::mt19937_64 rng(11);
  TwistMatrix psi = random_antisymmetric_psi(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(xi(c, theta(c, psi)));
}
BENCHMARK(BM_theta_xi_roundtrip);

void BM_coproduct_degree4(benchmark::State& state) {
  HopfAlgebra h = canonical("A2");
  AlgebraElement x = parse_expression(*h.spec, "F2*F1*K[1,0]*E1*E2");
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(h.hopf, x));
}
BENCHMARK(BM_coproduct_degree4);

void BM_pairing(benchmark::State& state) {
  auto c = build_cartan(*named_cartan("A2"));
  Lattice q = Lattice::root_lattice(2);
  HopfAlgebra plus = build_mpquea(c, MultiparamExponent{c.DA}, q, q, Flavor::borel_plus);
  HopfAlgebra minus = build_mpquea(c, MultiparamExponent{c.DA}, q, q, Flavor::borel_minus);
  AlgebraElement x = parse_expression(*plus.spec, "E1*E2*E1");
  AlgebraElement y = parse_expression(*minus.spec, "F1*F1*F2");
  for (auto _ : state) {
    // fresh context so the memo does not trivialize the loop
    PairingContext ctx(plus, minus, PairingConvention::mp);
    benchmark::DoNotOptimize(pairing_eval(ctx, x, y));
  }
}
BENCHMARK(BM_pairing);

void BM_build_g2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical("G2"));
}
BENCHMARK(BM_build_g2);

}  // namespace

BENCHMARK_MAIN();
