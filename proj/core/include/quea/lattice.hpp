#pragma once

#include "quea/cartan.hpp"

namespace quea {

enum class Side { plain, plus, minus };

// Vector in alpha-coordinates, tagged with which copy of QQ it lives in.
// Doubled (2n) vectors are built with embed_* and carry side == plain.
struct LatticeVector {
  VecQ coords;
  Side side = Side::plain;
};

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SideMismatch : LatticeError {
  SideMismatch() : LatticeError("mixing vectors from different copies of QQ") {}
};

// Rational lattice of rank <= dim inside QQ^dim given by basis rows.
// The canonical HNF form (over a common denominator) makes span equality
// and membership decidable.
class Lattice {
 public:
  Lattice() = default;
  // basis rows in alpha-coordinates; rows may be dependent (they are
  // HNF-reduced internally; original rows kept for witnesses).
  explicit Lattice(std::vector<VecQ> basis_rows);

  static Lattice root_lattice(int n);  // Q: identity basis

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(hnf_.size()); }
  const std::vector<VecQ>& basis() const { return basis_; }

  // v = sum z_i * basis_i with z integer?  Returns the witness z.
  std::optional<std::vector<Integer>> contains(const VecQ& v) const;
  bool contains_lattice(const Lattice& other) const;

  bool spans_same(const Lattice& other) const;

  // Index [this : sub] for sub a finite-index sublattice of this.
  Integer index_over(const Lattice& sub) const;

  // lcm of denominators appearing in the canonical basis.
  long denominator() const;

  // Canonical (HNF) basis rows as rationals.
  std::vector<VecQ> canonical_rows() const;

 private:
  int dim_ = 0;
  std::vector<VecQ> basis_;   // as given (independent rows only)
  IntMat hnf_;                // HNF of den_ * span
  Integer den_ = 1;           // common denominator for hnf_
  friend Lattice lattice_sum(const Lattice&, const Lattice&);
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);

struct RankDeficient {
  bool flag = false;
};
// Image of L under a linear map (matrix acting on column coordinates).
Lattice image_lattice(const RatMat& map, const Lattice& L, RankDeficient* rd = nullptr);

// Rational twist matrix Psi with its derived data.
struct TwistMatrix {
  RatMat psi;
  bool antisymmetric = false;
  long root_denominator = 1;  // d_Psi

  static TwistMatrix make(const RatMat& psi);
  static TwistMatrix zero(int n);
  TwistMatrix operator+(const TwistMatrix& o) const { return make(psi + o.psi); }
  TwistMatrix negated() const { return make(psi.scale(Rational(-1))); }
};

// Coordinate matrices of psi_+/psi_- acting on alpha-coordinates:
// psi_+ ~ D^{-1} Psi A, psi_- ~ D^{-1} Psi^T A.
RatMat psi_plus_matrix(const CartanDatum& c, const TwistMatrix& psi);
RatMat psi_minus_matrix(const CartanDatum& c, const TwistMatrix& psi);

LatticeVector psi_apply(const CartanDatum& c, const TwistMatrix& psi, int sign,
                        const LatticeVector& v);

// Doubled-space helpers: QQ x QQ with plus copy first.
VecQ embed_plus(const VecQ& v, int n);
VecQ embed_minus(const VecQ& v, int n);

// tau_i^{+} = (alpha_i + psi_+(alpha_i), -psi_-(alpha_i)) and
// tau_i^{-} = (-psi_+(alpha_i), alpha_i + psi_-(alpha_i)) in the doubled space;
// omega-style basis vectors do the same for an arbitrary lattice basis.
struct TwistedBasis {
  std::vector<VecQ> varpi_plus;   // 2n-vectors, basis of M^Psi_+
  std::vector<VecQ> varpi_minus;  // 2n-vectors, basis of M^Psi_-
  Lattice m_psi_plus;
  Lattice m_psi_minus;
  std::vector<VecQ> tau_plus;     // special case M = Q
  std::vector<VecQ> tau_minus;
};
TwistedBasis twisted_basis(const CartanDatum& c, const TwistMatrix& psi, const Lattice& m_plus,
                           const Lattice& m_minus);

// Q^Psi = Q + psi_+(Q) + psi_-(Q) inside QQ.
Lattice q_psi_lattice(const CartanDatum& c, const TwistMatrix& psi);

// Q^Psi_{(+)} = (id+psi_+)(Q_+) + psi_-(Q_-) and its minus mirror, doubled.
Lattice q_psi_doubled_plus(const CartanDatum& c, const TwistMatrix& psi);
Lattice q_psi_doubled_minus(const CartanDatum& c, const TwistMatrix& psi);

}  // namespace quea
