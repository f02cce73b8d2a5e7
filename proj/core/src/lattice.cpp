#include "quea/lattice.hpp"

#include <cassert>

namespace quea {

namespace {

IntMat scaled_int_rows(const std::vector<VecQ>& rows, Integer& den) {
  den = 1;
  for (auto& r : rows)
    for (auto& x : r) den = lcm(den, x.get_den());
  IntMat m;
  for (auto& r : rows) {
    std::vector<Integer> ir;
    for (auto& x : r) ir.push_back(x.get_num() * (den / x.get_den()));
    m.push_back(ir);
  }
  return m;
}

}  // namespace

Lattice::Lattice(std::vector<VecQ> basis_rows) {
  if (basis_rows.empty()) throw LatticeError("empty basis");
  dim_ = static_cast<int>(basis_rows[0].size());
  for (auto& r : basis_rows)
    if (static_cast<int>(r.size()) != dim_) throw DimensionMismatch();
  hnf_ = hnf(scaled_int_rows(basis_rows, den_));
  // The given rows stay as the user basis when independent.
  basis_ = basis_rows;
  if (static_cast<int>(basis_rows.size()) != rank()) {
    // fall back to the canonical rows as the working basis
    basis_ = canonical_rows();
  }
}

Lattice Lattice::root_lattice(int n) {
  std::vector<VecQ> rows;
  for (int i = 0; i < n; ++i) {
    VecQ v = vq_zero(n);
    v[i] = 1;
    rows.push_back(v);
  }
  return Lattice(rows);
}

std::vector<VecQ> Lattice::canonical_rows() const {
  std::vector<VecQ> rows;
  for (auto& r : hnf_) {
    VecQ v;
    for (auto& x : r) {
      Rational q(x, den_);
      q.canonicalize();
      v.push_back(q);
    }
    rows.push_back(v);
  }
  return rows;
}

std::optional<std::vector<Integer>> Lattice::contains(const VecQ& v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch();
  auto sol = solve_row_combination(RatMat::from_rows(basis_), v);
  if (!sol) return std::nullopt;
  std::vector<Integer> z;
  for (auto& x : *sol) {
    if (x.get_den() != 1) return std::nullopt;
    z.push_back(x.get_num());
  }
  return z;
}

bool Lattice::contains_lattice(const Lattice& other) const {
  for (auto& r : other.canonical_rows())
    if (!contains(r)) return false;
  return true;
}

bool Lattice::spans_same(const Lattice& other) const {
  return contains_lattice(other) && other.contains_lattice(*this);
}

Integer Lattice::index_over(const Lattice& sub) const {
  if (rank() != sub.rank() || rank() == 0) throw LatticeError("index needs equal full ranks");
  // Express sub's canonical basis over ours; index = |det| of that integer matrix.
  int r = rank();
  RatMat C(r, r);
  auto mine = RatMat::from_rows(basis_);
  auto rows = sub.canonical_rows();
  for (int i = 0; i < r; ++i) {
    auto sol = solve_row_combination(mine, rows[i]);
    if (!sol) throw LatticeError("not a sublattice");
    for (int j = 0; j < r; ++j) C.at(i, j) = (*sol)[static_cast<size_t>(j)];
  }
  Rational d = C.det();
  if (d.get_den() != 1) throw LatticeError("not a sublattice (fractional index)");
  Integer z = d.get_num();
  return z < 0 ? Integer(-z) : z;
}

long Lattice::denominator() const {
  long n = 1;
  for (auto& r : canonical_rows())
    for (auto& x : r) n = std::lcm(n, static_cast<long>(x.get_den().get_si()));
  return n;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch();
  std::vector<VecQ> rows = a.canonical_rows();
  for (auto& r : b.canonical_rows()) rows.push_back(r);
  return Lattice(rows);
}

Lattice image_lattice(const RatMat& map, const Lattice& L, RankDeficient* rd) {
  std::vector<VecQ> rows;
  for (auto& r : L.basis()) rows.push_back(map.apply(r));
  bool all_zero = true;
  for (auto& r : rows)
    if (!vq_is_zero(r)) all_zero = false;
  if (all_zero) {
    if (rd) rd->flag = true;
    // zero lattice: represent with a single zero row rejected by Lattice;
    // callers treat this case through the flag.
    Lattice z;
    return z;
  }
  Lattice img(rows);
  if (rd) rd->flag = img.rank() < L.rank();
  return img;
}

TwistMatrix TwistMatrix::make(const RatMat& psi) {
  TwistMatrix t;
  t.psi = psi;
  t.antisymmetric = (psi + psi.transpose()).is_zero();
  t.root_denominator = psi.denominator();
  return t;
}

TwistMatrix TwistMatrix::zero(int n) { return make(RatMat(n, n)); }

RatMat psi_plus_matrix(const CartanDatum& c, const TwistMatrix& psi) {
  VecQ dinv(c.rank);
  for (int i = 0; i < c.rank; ++i) dinv[i] = 1 / c.d[i];
  return RatMat::diag(dinv) * psi.psi * c.A;
}

RatMat psi_minus_matrix(const CartanDatum& c, const TwistMatrix& psi) {
  VecQ dinv(c.rank);
  for (int i = 0; i < c.rank; ++i) dinv[i] = 1 / c.d[i];
  return RatMat::diag(dinv) * psi.psi.transpose() * c.A;
}

LatticeVector psi_apply(const CartanDatum& c, const TwistMatrix& psi, int sign,
                        const LatticeVector& v) {
  if (static_cast<int>(v.coords.size()) != c.rank) throw DimensionMismatch();
  RatMat m = sign >= 0 ? psi_plus_matrix(c, psi) : psi_minus_matrix(c, psi);
  return LatticeVector{m.apply(v.coords), v.side};
}

VecQ embed_plus(const VecQ& v, int n) {
  VecQ r = v;
  r.resize(2 * static_cast<size_t>(n), Rational(0));
  return r;
}

VecQ embed_minus(const VecQ& v, int n) {
  VecQ r = vq_zero(n);
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

TwistedBasis twisted_basis(const CartanDatum& c, const TwistMatrix& psi, const Lattice& m_plus,
                           const Lattice& m_minus) {
  int n = c.rank;
  if (m_plus.dim() != n || m_minus.dim() != n || m_plus.rank() != n || m_minus.rank() != n)
    throw DimensionMismatch();
  RatMat p = psi_plus_matrix(c, psi);
  RatMat m = psi_minus_matrix(c, psi);
  TwistedBasis tb;
  auto build = [&](const std::vector<VecQ>& mu_plus, const std::vector<VecQ>& mu_minus,
                   std::vector<VecQ>& out_plus, std::vector<VecQ>& out_minus) {
    for (int i = 0; i < n; ++i) {
      // varpi_i^+ = (mu_i^+ + psi_+(mu_i^+), -psi_-(mu_i^-))
      out_plus.push_back(
          vq_concat(vq_add(mu_plus[i], p.apply(mu_plus[i])), vq_neg(m.apply(mu_minus[i]))));
      // varpi_i^- = (-psi_+(mu_i^+), mu_i^- + psi_-(mu_i^-))
      out_minus.push_back(
          vq_concat(vq_neg(p.apply(mu_plus[i])), vq_add(mu_minus[i], m.apply(mu_minus[i]))));
    }
  };
  build(m_plus.basis(), m_minus.basis(), tb.varpi_plus, tb.varpi_minus);
  std::vector<VecQ> alphas;
  for (int i = 0; i < n; ++i) {
    VecQ v = vq_zero(n);
    v[i] = 1;
    alphas.push_back(v);
  }
  build(alphas, alphas, tb.tau_plus, tb.tau_minus);
  tb.m_psi_plus = Lattice(tb.varpi_plus);
  tb.m_psi_minus = Lattice(tb.varpi_minus);
  return tb;
}

Lattice q_psi_lattice(const CartanDatum& c, const TwistMatrix& psi) {
  int n = c.rank;
  Lattice q = Lattice::root_lattice(n);
  RankDeficient rd;
  Lattice s = q;
  Lattice ip = image_lattice(psi_plus_matrix(c, psi), q, &rd);
  if (ip.rank() > 0) s = lattice_sum(s, ip);
  Lattice im = image_lattice(psi_minus_matrix(c, psi), q, &rd);
  if (im.rank() > 0) s = lattice_sum(s, im);
  return s;
}

namespace {
Lattice q_psi_doubled(const CartanDatum& c, const TwistMatrix& psi, bool plus) {
  int n = c.rank;
  RatMat p = psi_plus_matrix(c, psi);
  RatMat m = psi_minus_matrix(c, psi);
  std::vector<VecQ> rows;
  for (int i = 0; i < n; ++i) {
    VecQ a = vq_zero(n);
    a[i] = 1;
    if (plus) {
      // (id + psi_+)(alpha_i^+) and psi_-(alpha_i^-)
      rows.push_back(vq_concat(vq_add(a, p.apply(a)), vq_zero(n)));
      VecQ mm = m.apply(a);
      if (!vq_is_zero(mm)) rows.push_back(vq_concat(vq_zero(n), mm));
    } else {
      rows.push_back(vq_concat(vq_zero(n), vq_add(a, m.apply(a))));
      VecQ pp = p.apply(a);
      if (!vq_is_zero(pp)) rows.push_back(vq_concat(pp, vq_zero(n)));
    }
  }
  return Lattice(rows);
}
}  // namespace

Lattice q_psi_doubled_plus(const CartanDatum& c, const TwistMatrix& psi) {
  return q_psi_doubled(c, psi, true);
}
Lattice q_psi_doubled_minus(const CartanDatum& c, const TwistMatrix& psi) {
  return q_psi_doubled(c, psi, false);
}

}  // namespace quea
