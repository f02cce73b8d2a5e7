#pragma once

#include "quea/quantum.hpp"

namespace quea {

struct LatticeTooSmall : AlgebraError {
  LatticeTooSmall(const std::string& m) : AlgebraError(m) {}
  VecQ witness;
};

// Toral twist deformation of a canonical polynomial QUEA: the carrier
// algebra (rewrite system) is untouched, only the coproduct/antipode
// tables change.
struct TwistedHopfSpec {
  HopfAlgebra base;     // untwisted tables
  HopfSpec twisted;     // twisted tables over the same spec
  TwistMatrix psi;
  bool doubled = false;

  // twisted generators
  std::vector<AlgebraElement> e_psi, f_psi;
  // toral pairs (kexp, lexp) of K^Psi_{i,+} = K_{tau_i^+} and K^Psi_{i,-} = K_{-tau_i^-}
  std::vector<std::pair<VecQ, VecQ>> k_psi_plus, k_psi_minus;
};

// Single copy: gamma is an n-dim lattice containing Q^Psi = Q + psi_+(Q) + psi_-(Q).
// Doubled: gamma is a 2n-dim lattice (plus/minus doubled coordinates)
// containing Q^Psi_* = Q^Psi_{(+)} + Q^Psi_{(-)}.
TwistedHopfSpec build_twquea(const CartanDatum& c, const TwistMatrix& psi, const Lattice& gamma,
                             bool doubled, Flavor flavor = Flavor::full);

TensorElement twisted_coproduct(const TwistedHopfSpec& t, const AlgebraElement& x);
AlgebraElement twisted_antipode(const TwistedHopfSpec& t, const AlgebraElement& x);

// psi_{+-}(alpha_i) in the given lattice for all i; witness on failure.
struct SubalgebraCondition {
  bool holds = true;
  std::string witness;
};
SubalgebraCondition hopf_subalgebra_condition(const CartanDatum& c, const TwistMatrix& psi,
                                              const Lattice& gamma);

// Table-level check that twisting by Psi then Psi' equals twisting by Psi+Psi'.
struct IterateReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool clean() const { return failures.empty(); }
};
IterateReport iterate_twist_check(const CartanDatum& c, const TwistMatrix& psi,
                                  const TwistMatrix& psi2, const Lattice& gamma, bool doubled);

}  // namespace quea
