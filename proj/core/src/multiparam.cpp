#include "quea/multiparam.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quea {

MultiparamExponent theta(const CartanDatum& c, const TwistMatrix& psi) {
  RatMat at = c.A.transpose();
  RatMat skew = psi.psi.transpose() - psi.psi;
  return MultiparamExponent{c.DA + at * skew * c.A};
}

TwistMatrix xi(const CartanDatum& c, const MultiparamExponent& R) {
  if (!c.finite_type) throw NotFiniteType();
  if (R.R + R.R.transpose() != c.DA.scale(Rational(2))) throw NotInImageDomain();
  RatMat ainv = *c.A.inverse();
  RatMat aTinv = *c.A.transpose().inverse();
  return TwistMatrix::make((aTinv * (c.DA - R.R) * ainv).scale(Rational(1, 2)));
}

CocycleMatrix sigma_from_psi(const CartanDatum& c, const TwistMatrix& psi) {
  return CocycleMatrix{(c.A.transpose() * psi.psi * c.A).scale(Rational(-1))};
}

TwistMatrix psi_from_sigma(const CartanDatum& c, const CocycleMatrix& s) {
  if (!c.finite_type) throw NotFiniteType();
  RatMat ainv = *c.A.inverse();
  RatMat aTinv = *c.A.transpose().inverse();
  return TwistMatrix::make((aTinv * s.S * ainv).scale(Rational(-1)));
}

bool is_cartan_type(const CartanDatum& c, const MultiparamExponent& R) {
  int n = c.rank;
  if (R.R.rows() != n || R.R.cols() != n) throw DimensionMismatch();
  // r_ii = 2 c d_i for a common rational c > 0
  Rational cc = R.r(0, 0) / (2 * c.d[0]);
  if (cc <= 0) return false;
  for (int i = 0; i < n; ++i)
    if (R.r(i, i) != cc * 2 * c.d[i]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (R.r(i, j) + R.r(j, i) != c.a(i, j) * R.r(i, i)) return false;
  return true;
}

MultiparamExponent canonical_of(const CartanDatum& c, const MultiparamExponent& R) {
  if (!is_cartan_type(c, R)) throw NotCartanType();
  Rational cc = R.r(0, 0) / (2 * c.d[0]);
  return MultiparamExponent{c.DA.scale(cc)};
}

std::string DynkinDiagram::text() const {
  std::ostringstream os;
  for (size_t i = 0; i < vertex_labels.size(); ++i) {
    if (i) os << "  ";
    os << (i + 1) << ":[q^" << vertex_labels[i].get_str() << "]";
  }
  for (auto& [i, j, w] : edges)
    os << "\n  " << (i + 1) << " --(q^" << w.get_str() << ")-- " << (j + 1);
  return os.str();
}

DynkinDiagram dynkin_diagram(const MultiparamExponent& R) {
  DynkinDiagram d;
  int n = R.R.rows();
  for (int i = 0; i < n; ++i) d.vertex_labels.push_back(R.r(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational w = R.r(i, j) + R.r(j, i);
      if (w != 0) d.edges.emplace_back(i, j, w);
    }
  return d;
}

bool twist_equivalent(const MultiparamExponent& a, const MultiparamExponent& b) {
  int n = a.R.rows();
  if (b.R.rows() != n) throw DimensionMismatch();
  for (int i = 0; i < n; ++i) {
    if (a.r(i, i) != b.r(i, i)) return false;
    for (int j = 0; j < n; ++j)
      if (a.r(i, j) + a.r(j, i) != b.r(i, j) + b.r(j, i)) return false;
  }
  return true;
}

MultiparamExponent act_nu(const ActionExponent& nu, const MultiparamExponent& R) {
  return MultiparamExponent{nu.N + R.R - nu.N.transpose()};
}

ActionExponent equivalence_witness(const MultiparamExponent& from, const MultiparamExponent& to) {
  if (!twist_equivalent(from, to)) throw NotEquivalent();
  int n = from.R.rows();
  RatMat N(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) N.at(i, j) = to.r(i, j) - from.r(i, j);
  return ActionExponent{N};
}

std::optional<ApproxResult> approx_equivalent(const MultiparamExponent& a,
                                              const MultiparamExponent& b) {
  int n = a.R.rows();
  if (b.R.rows() != n) throw DimensionMismatch();
  if (n > 6) throw RankTooLarge();
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 0);
  do {
    bool plain = true, chev = true;
    for (int i = 0; i < n && (plain || chev); ++i)
      for (int j = 0; j < n && (plain || chev); ++j) {
        if (b.r(i, j) != a.r(g[i], g[j])) plain = false;
        if (b.r(i, j) != -a.r(g[j], g[i])) chev = false;
      }
    if (plain) return ApproxResult{g, false};
    if (chev) return ApproxResult{g, true};
  } while (std::next_permutation(g.begin(), g.end()));
  return std::nullopt;
}

}  // namespace quea
