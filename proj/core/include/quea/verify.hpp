#pragma once

#include <random>

#include "quea/twist.hpp"

namespace quea {

struct NotAntisymmetric : AlgebraError {
  NotAntisymmetric() : AlgebraError("twist matrix must be antisymmetric") {}
};
struct NotApproxEquivalent : AlgebraError {
  NotApproxEquivalent() : AlgebraError("permutation does not realize the ~~ relation") {}
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // reduced element or detail on failure
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  double timing_ms = 0;

  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  void add(const std::string& name, bool pass, const std::string& witness = "");
};

// Homomorphism data: generator images from a presented source into a
// target carrier, with optional twisted coalgebra or cocycle-deformed
// product on the target.
struct GeneratorMap {
  const HopfAlgebra* src = nullptr;
  const HopfAlgebra* dst = nullptr;
  const HopfSpec* src_hopf = nullptr;        // defaults to src->hopf
  const HopfSpec* dst_hopf = nullptr;        // defaults to dst->hopf
  const ToralCocycle* dst_cocycle = nullptr; // when set, target products are m_sigma
  std::vector<AlgebraElement> img_E, img_F;
  // image per src->tor basis row (must be invertible toral monomials)
  std::vector<AlgebraElement> img_tor;

  AlgebraElement apply_word(const Word& w) const;
  AlgebraElement apply(const AlgebraElement& x) const;
  TensorElement apply_tensor(const TensorElement& t) const;

  // every defining relation of src maps to zero
  void check_relations(VerificationReport& rep, const std::string& prefix) const;
  // Delta_dst(Phi g) = (Phi (x) Phi) Delta_src(g), counit, antipode compat
  void check_hopf_compat(VerificationReport& rep, const std::string& prefix) const;
};

// Theorem: duality of the twisted coproduct and the cocycle-deformed
// product across the Borel pairing; passes iff S = -A^T Psi A.
VerificationReport verify_duality(const CartanDatum& c, const TwistMatrix& psi,
                                  const CocycleMatrix& S, const Lattice& gamma_plus,
                                  const Lattice& gamma_minus);

VerificationReport verify_iso_double(const CartanDatum& c, const TwistMatrix& psi,
                                     const Lattice& m_plus, const Lattice& m_minus);

VerificationReport verify_iso_borel(const CartanDatum& c, const TwistMatrix& psi,
                                    const Lattice& m, Flavor which);

VerificationReport verify_iso_g(const CartanDatum& c, const TwistMatrix& psi, const Lattice& m);

VerificationReport verify_cocycle_equiv(const CartanDatum& c, const MultiparamExponent& r1,
                                        const MultiparamExponent& r2, const Lattice& gamma_plus,
                                        const Lattice& gamma_minus);

VerificationReport verify_approx_iso(const CartanDatum& c, const MultiparamExponent& R,
                                     const std::vector<int>& gamma, bool chevalley);

// Seeded random twist data: antisymmetric, entries a/b with |a| <= 3,
// b in 1..12; integer_only forces b = 1.
TwistMatrix random_antisymmetric_psi(std::mt19937_64& rng, int n, bool integer_only = false);
// Random R with R + R^T = 2DA.
MultiparamExponent random_domain_R(std::mt19937_64& rng, const CartanDatum& c);
// Random Cartan-type multiparameter twist-equivalent to the canonical one.
MultiparamExponent random_cartan_R(std::mt19937_64& rng, const CartanDatum& c);

}  // namespace quea
