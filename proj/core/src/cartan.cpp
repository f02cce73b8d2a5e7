#include "quea/cartan.hpp"

#include <queue>

namespace quea {

CartanDatum build_cartan(const RatMat& A) {
  int n = A.rows();
  if (n == 0 || A.cols() != n) throw NotGCM("matrix must be square and nonempty");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (A.at(i, j).get_den() != 1) throw NotGCM("non-integer entry");
      if (i == j && A.at(i, j) != 2) throw NotGCM("diagonal entry is not 2");
      if (i != j && A.at(i, j) > 0) throw NotGCM("positive off-diagonal entry");
      if (i != j && ((A.at(i, j) == 0) != (A.at(j, i) == 0)))
        throw NotGCM("asymmetric zero pattern");
    }
  }
  // Connectivity of the off-diagonal support graph.
  std::vector<bool> seen(n, false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w = 0; w < n; ++w)
      if (w != v && !seen[w] && A.at(v, w) != 0) {
        seen[w] = true;
        bfs.push(w);
      }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Decomposable();

  // Spanning-tree propagation of d_i a_ij = d_j a_ji, then verify all pairs.
  VecQ x(n, Rational(0));
  x[0] = 1;
  std::vector<bool> fixed(n, false);
  fixed[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w = 0; w < n; ++w) {
      if (w == v || A.at(v, w) == 0 || fixed[w]) continue;
      // d_w = d_v * a_vw / a_wv
      x[w] = x[v] * A.at(v, w) / A.at(w, v);
      fixed[w] = true;
      bfs.push(w);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] * A.at(i, j) != x[j] * A.at(j, i)) throw NotSymmetrizable();

  // Clear to coprime positive integers.
  Integer l = 1;
  for (auto& v : x) l = lcm(l, v.get_den());
  Integer g = 0;
  std::vector<Integer> di(n);
  for (int i = 0; i < n; ++i) {
    di[i] = x[i].get_num() * (l / x[i].get_den());
    g = gcd(g, di[i]);
  }
  CartanDatum c;
  c.rank = n;
  c.A = A;
  c.d.resize(n);
  for (int i = 0; i < n; ++i) {
    Integer v = di[i] / g;
    if (v <= 0) throw NotSymmetrizable();
    c.d[i] = Rational(v);
  }
  c.DA = RatMat::diag(c.d) * A;
  c.finite_type = c.DA.positive_definite();
  return c;
}

Rational root_pairing(const CartanDatum& c, const VecQ& lambda, const VecQ& mu) {
  if (static_cast<int>(lambda.size()) != c.rank || static_cast<int>(mu.size()) != c.rank)
    throw DimensionMismatch();
  VecQ w = c.DA.apply(mu);
  Rational r(0);
  for (int i = 0; i < c.rank; ++i) r += lambda[i] * w[i];
  return r;
}

RatMat fundamental_weights(const CartanDatum& c) {
  if (!c.finite_type) throw NotFiniteType();
  auto inv = c.A.transpose().inverse();
  return *inv;  // rows omega_i in alpha-coordinates; A^T W^T ... W = A^{-T}
}

std::optional<RatMat> named_cartan(const std::string& name) {
  auto M = [](std::vector<std::vector<long>> rows) {
    std::vector<VecQ> q;
    for (auto& r : rows) {
      VecQ v;
      for (long x : r) v.push_back(Rational(x));
      q.push_back(v);
    }
    return RatMat::from_rows(q);
  };
  if (name == "A1") return M({{2}});
  if (name == "A2") return M({{2, -1}, {-1, 2}});
  if (name == "A3") return M({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  if (name == "B2") return M({{2, -2}, {-1, 2}});
  if (name == "C3") return M({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  if (name == "D4") return M({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  if (name == "G2") return M({{2, -1}, {-3, 2}});
  return std::nullopt;
}

}  // namespace quea
