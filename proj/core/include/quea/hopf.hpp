#pragma once

#include "quea/algebra.hpp"

namespace quea {

// Generator-level coalgebra/antipode data; group-like letters are handled
// in closed form (Delta T = T (x) T, S(T) = T^{-1}, eps(T) = 1).
struct HopfSpec {
  const AlgebraSpec* spec = nullptr;
  std::vector<TensorElement> delta_E, delta_F;  // degree-2 images
  std::vector<AlgebraElement> s_E, s_F;

  TensorElement delta_letter(const Letter& l) const;
  AlgebraElement antipode_letter(const Letter& l) const;
};

TensorElement coproduct(const HopfSpec& h, const AlgebraElement& x);
FieldScalar counit(const HopfSpec& h, const AlgebraElement& x);
AlgebraElement antipode(const HopfSpec& h, const AlgebraElement& x);
// Inverse antipode (the antipodes here are bijective on generators):
// S^{-1}(E_i) = -E_i K_i^{-1}, S^{-1}(F_i) = -L_i^{-1} F_i (or the
// single-torus analogue), group-likes invert.
AlgebraElement antipode_inverse(const HopfSpec& h, const AlgebraElement& x);

// Apply Delta to one slot of a tensor (degree grows by 1).
TensorElement coproduct_at_slot(const HopfSpec& h, const TensorElement& t, int slot);
// Delta^k applied to the leftmost slot repeatedly: degree k+1.
TensorElement iterated_coproduct(const HopfSpec& h, const AlgebraElement& x, int k);

// Multiply all slots together (m^{k-1}).
AlgebraElement tensor_contract(const AlgebraSpec& s, const TensorElement& t);

struct HopfCheckFailure {
  std::string check;
  Word word;  // offending basis word or relation tag carrier
  std::string detail;
};
struct HopfReport {
  long checks = 0;
  std::vector<HopfCheckFailure> failures;
  bool clean() const { return failures.empty(); }
};

// Coassociativity, counit laws, antipode identity on basis words of
// E/F-degree <= bound, plus relation compatibility of Delta, eps, S.
HopfReport check_hopf_axioms(const HopfSpec& h, int degree_bound);
HopfReport check_hopf_axioms(const HopfSpec& h, int degree_bound,
                             const std::vector<Word>& toral_samples);

}  // namespace quea
