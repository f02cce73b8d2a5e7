#pragma once

#include <string>

#include "quea/matrix.hpp"

namespace quea {

struct CartanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGCM : CartanError {
  NotGCM(const std::string& m) : CartanError("not a generalized Cartan matrix: " + m) {}
};
struct NotSymmetrizable : CartanError {
  NotSymmetrizable() : CartanError("no positive symmetrizer exists") {}
};
struct Decomposable : CartanError {
  Decomposable() : CartanError("Cartan matrix is decomposable") {}
};
struct NotFiniteType : CartanError {
  NotFiniteType() : CartanError("operation requires a finite-type Cartan matrix") {}
};

// Indecomposable symmetrizable Cartan matrix with its coprime positive
// symmetrizer D; DA is the matrix of the root-lattice form (alpha_i, alpha_j).
struct CartanDatum {
  int rank = 0;
  RatMat A;        // integer entries
  VecQ d;          // symmetrizer diagonal, positive coprime integers
  bool finite_type = false;

  RatMat DA;       // d_i * a_ij, symmetric

  Rational a(int i, int j) const { return A.at(i, j); }
  Rational di(int i) const { return d[i]; }
  // (alpha_i, alpha_j) = d_i a_ij
  Rational form(int i, int j) const { return DA.at(i, j); }
};

CartanDatum build_cartan(const RatMat& A);

// lambda^T (DA) mu for coordinate vectors in the simple-root basis.
Rational root_pairing(const CartanDatum& c, const VecQ& lambda, const VecQ& mu);

// Rows are the fundamental weights in alpha-coordinates; (omega_i, alpha_j) = d_i delta_ij.
RatMat fundamental_weights(const CartanDatum& c);

// Named-type shortcut table ("A1","A2","A3","B2","C3","D4","G2"), or empty optional.
std::optional<RatMat> named_cartan(const std::string& name);

}  // namespace quea
