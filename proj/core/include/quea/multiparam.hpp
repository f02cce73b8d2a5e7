#pragma once

#include "quea/lattice.hpp"

namespace quea {

struct MultiparamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCartanType : MultiparamError {
  NotCartanType() : MultiparamError("multiparameter is not of Cartan type") {}
};
struct NotInImageDomain : MultiparamError {
  NotInImageDomain() : MultiparamError("R + R^T != 2DA") {}
};
struct NotEquivalent : MultiparamError {
  NotEquivalent() : MultiparamError("multiparameters are not twist-equivalent") {}
};
struct RankTooLarge : MultiparamError {
  RankTooLarge() : MultiparamError("permutation search limited to rank <= 6") {}
};

// Exponent matrix R, meaning q_ij = q^{r_ij}.
struct MultiparamExponent {
  RatMat R;
  Rational r(int i, int j) const { return R.at(i, j); }
};

// Exponent matrix S, meaning sigma(K_i, K_j) = q^{s_ij}.
struct CocycleMatrix {
  RatMat S;
};

// Exponent matrix N, meaning nu_ij = q^{n_ij}.
struct ActionExponent {
  RatMat N;
};

// theta(Psi) = DA + A^T (Psi^T - Psi) A  (factor-free normalization).
MultiparamExponent theta(const CartanDatum& c, const TwistMatrix& psi);

// xi(R) = 1/2 A^{-T} (DA - R) A^{-1}; requires finite type and R + R^T = 2DA.
TwistMatrix xi(const CartanDatum& c, const MultiparamExponent& R);

// S = -A^T Psi A and its inverse Psi = -A^{-T} S A^{-1}.
CocycleMatrix sigma_from_psi(const CartanDatum& c, const TwistMatrix& psi);
TwistMatrix psi_from_sigma(const CartanDatum& c, const CocycleMatrix& s);

// Cartan type: r_ij + r_ji = a_ij r_ii and r_ii = 2c d_i for one rational c > 0.
bool is_cartan_type(const CartanDatum& c, const MultiparamExponent& R);
MultiparamExponent canonical_of(const CartanDatum& c, const MultiparamExponent& R);

struct DynkinDiagram {
  VecQ vertex_labels;                                 // r_ii
  std::vector<std::tuple<int, int, Rational>> edges;  // (i, j, r_ij + r_ji), i < j
  std::string text() const;
};
DynkinDiagram dynkin_diagram(const MultiparamExponent& R);

// Twist equivalence in exponent form.
bool twist_equivalent(const MultiparamExponent& a, const MultiparamExponent& b);
MultiparamExponent act_nu(const ActionExponent& nu, const MultiparamExponent& R);
ActionExponent equivalence_witness(const MultiparamExponent& from, const MultiparamExponent& to);

struct ApproxResult {
  std::vector<int> gamma;  // permutation, gamma[i] = image of i
  bool chevalley = false;
};
std::optional<ApproxResult> approx_equivalent(const MultiparamExponent& a,
                                              const MultiparamExponent& b);

}  // namespace quea
