#pragma once

#include <memory>

#include "quea/hopf.hpp"

namespace quea {

struct LatticeMissing : AlgebraError {
  LatticeMissing(const std::string& m) : AlgebraError(m) {}
};
struct FlavorMismatch : AlgebraError {
  FlavorMismatch() : AlgebraError("pairing requires opposite Borel flavors") {}
};
struct PsiNotStable : AlgebraError {
  PsiNotStable(const std::string& m) : AlgebraError(m) {}
};

// An algebra together with its generator-level Hopf data.
struct HopfAlgebra {
  std::shared_ptr<AlgebraSpec> spec;
  HopfSpec hopf;
};

// Multiparameter QUEA over lattices Gamma_+/Gamma_- (both containing Q),
// with relations (a)-(g) ((c'),(d') for larger tori).  R must be of
// Cartan type over the Cartan datum.
HopfAlgebra build_mpquea(const CartanDatum& c, const MultiparamExponent& R,
                         const Lattice& gamma_plus, const Lattice& gamma_minus, Flavor flavor);

// Canonical polynomial QUEA in the section-3 conventions (R = DA, relation
// (e) over q_i - q_i^{-1}).  `doubled` selects U_q(g_D)-style (K and L
// families) versus the single-torus U_q(g) presentation; `tor2n` is the
// lattice of allowed toral pairs for doubled, or Gamma x {0} for single.
HopfAlgebra build_canonical(const CartanDatum& c, const Lattice& tor2n, bool doubled,
                            Flavor flavor);

// The defining relations as free elements (used by Hopf compatibility
// checks and by homomorphism verification).
std::vector<std::pair<std::string, AlgebraElement>> defining_relations(const AlgebraSpec& s);

// --- projection p onto the group algebra of G_1..G_n -----------------

// Element of the free abelian group algebra on G-exponents in QQ^n.
using GroupAlgebraElement = std::map<VecQ, FieldScalar>;
GroupAlgebraElement project_p(const AlgebraSpec& s, const AlgebraElement& x);

// --- toral 2-cocycles -------------------------------------------------

struct ToralCocycle {
  CocycleMatrix S;
  const AlgebraSpec* context = nullptr;
  // test hook: replaces the bicharacter value chi(G_u, G_v) when set
  std::function<FieldScalar(const VecQ&, const VecQ&)> chi_override;

  FieldScalar chi(const VecQ& u, const VecQ& v, bool inverse) const;
};

FieldScalar cocycle_eval(const ToralCocycle& sig, const AlgebraElement& x,
                         const AlgebraElement& y);
FieldScalar cocycle_inverse_eval(const ToralCocycle& sig, const AlgebraElement& x,
                                 const AlgebraElement& y);

AlgebraElement deformed_product(const HopfAlgebra& h, const ToralCocycle& sig,
                                const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement deformed_antipode(const HopfAlgebra& h, const ToralCocycle& sig,
                                 const AlgebraElement& a);

struct CocycleIdentityReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool clean() const { return failures.empty(); }
};
CocycleIdentityReport cocycle_identity_check(const HopfAlgebra& h, const ToralCocycle& sig,
                                             int degree_bound);

// --- skew-Hopf pairings ----------------------------------------------

enum class PairingConvention {
  mp,        // eta(K_i, L_j) = q^{r_ij},  eta(E_i,F_j) = -q_ii/(q_ii - 1)
  canonical  // eta(K_g, K_d) = q^{-(g,d)}, eta(E_i,F_j) = 1/(q_i^{-1} - q_i)
};

struct PairingContext {
  const HopfAlgebra* plus = nullptr;   // flavor borel_plus
  const HopfAlgebra* minus = nullptr;  // flavor borel_minus
  PairingConvention convention = PairingConvention::mp;
  mutable std::map<std::pair<Word, Word>, FieldScalar> memo;

  PairingContext(const HopfAlgebra& p, const HopfAlgebra& m, PairingConvention conv);
};

FieldScalar pairing_eval(const PairingContext& ctx, const AlgebraElement& x,
                         const AlgebraElement& y);

struct CrossCheckReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool clean() const { return failures.empty(); }
};
// Drinfeld-double cross relation inside a full-flavor algebra, with the
// pairing taken in the given convention.
CrossCheckReport double_cross_check(const HopfAlgebra& full, PairingConvention conv,
                                    int degree_bound);

// --- quotient to the single-torus algebra -----------------------------

// Quotient of a full doubled algebra by the Hopf ideal generated by
// K_{mu_i^+} L_{mu_i^-} - K_{2 psi_+(mu_i^+)} L_{2 psi_-(mu_i^-)}.
// Requires psi_+(M) <= M for the basis lattice M of both sides.
HopfAlgebra quotient_to_g(const HopfAlgebra& src, const CartanDatum& c, const TwistMatrix& psi,
                          const Lattice& m);

}  // namespace quea
