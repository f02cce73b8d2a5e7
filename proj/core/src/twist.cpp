#include "quea/twist.hpp"

namespace quea {

namespace {

// Toral word for a doubled vector (u, v): K_u L_{-v}; single vectors give K_u.
Word toral_word_pair(const VecQ& kexp, const VecQ& lexp) {
  Word w;
  if (!vq_is_zero(lexp)) w.push_back(letter_L(lexp));
  if (!vq_is_zero(kexp)) w.push_back(letter_K(kexp));
  return w;
}

struct TwistShifts {
  // per generator index: the exponent vectors entering the twisted tables
  std::vector<VecQ> psi_plus_alpha, psi_minus_alpha;
};

TwistShifts shifts(const CartanDatum& c, const TwistMatrix& psi) {
  TwistShifts sh;
  RatMat p = psi_plus_matrix(c, psi);
  RatMat m = psi_minus_matrix(c, psi);
  for (int i = 0; i < c.rank; ++i) {
    VecQ a = vq_zero(c.rank);
    a[i] = 1;
    sh.psi_plus_alpha.push_back(p.apply(a));
    sh.psi_minus_alpha.push_back(m.apply(a));
  }
  return sh;
}

HopfSpec make_twisted_tables(const AlgebraSpec& s, const CartanDatum& c, const TwistMatrix& psi,
                             bool doubled) {
  int n = s.n();
  TwistShifts sh = shifts(c, psi);
  HopfSpec h;
  h.spec = &s;
  for (int i = 0; i < n; ++i) {
    VecQ alpha = vq_zero(n);
    alpha[i] = 1;
    VecQ pa = sh.psi_plus_alpha[i], ma = sh.psi_minus_alpha[i];
    // Delta(E_l) = E_l (x) T_{psi_-(a_l)} + T_{a_l + psi_+(a_l)} (x) E_l
    Word leg1 = doubled ? toral_word_pair(vq_zero(n), vq_neg(ma))  // (0, psi_-(a))
                        : toral_word_pair(ma, {});
    Word leg2 = toral_word_pair(vq_add(alpha, pa), vq_zero(n));
    TensorElement dE(n, 2);
    dE.add_term({Word{letter_E(i)}, leg1}, FieldScalar::one());
    dE.add_term({leg2, Word{letter_E(i)}}, FieldScalar::one());
    h.delta_E.push_back(dE);
    // Delta(F_l) = F_l (x) T_{-(a_l + psi_-(a_l))} + T_{-psi_+(a_l)} (x) F_l
    VecQ apm = vq_add(alpha, ma);
    Word leg3 = doubled ? toral_word_pair(vq_zero(n), apm)  // (0, -(a+psi_-a)) -> L_{a+psi_-a}
                        : toral_word_pair(vq_neg(apm), {});
    Word leg4 = toral_word_pair(vq_neg(pa), vq_zero(n));
    TensorElement dF(n, 2);
    dF.add_term({Word{letter_F(i)}, leg3}, FieldScalar::one());
    dF.add_term({leg4, Word{letter_F(i)}}, FieldScalar::one());
    h.delta_F.push_back(dF);
    // S(E_l) = - T_{-(a+psi_+(a))} E_l T_{-psi_-(a)}
    AlgebraElement sE(n);
    Word we = toral_word_pair(vq_neg(vq_add(alpha, pa)), vq_zero(n));
    Word we2 = doubled ? toral_word_pair(vq_zero(n), ma) : toral_word_pair(vq_neg(ma), {});
    Word sew = we;
    sew.push_back(letter_E(i));
    sew.insert(sew.end(), we2.begin(), we2.end());
    sE.add_term(sew, -FieldScalar::one());
    h.s_E.push_back(sE);
    // S(F_l) = - T_{psi_+(a)} F_l T_{a + psi_-(a)}
    AlgebraElement sF(n);
    Word wf = toral_word_pair(pa, vq_zero(n));
    Word wf2 = doubled ? toral_word_pair(vq_zero(n), vq_neg(apm)) : toral_word_pair(apm, {});
    Word sfw = wf;
    sfw.push_back(letter_F(i));
    sfw.insert(sfw.end(), wf2.begin(), wf2.end());
    sF.add_term(sfw, -FieldScalar::one());
    h.s_F.push_back(sF);
  }
  return h;
}

}  // namespace

TwistedHopfSpec build_twquea(const CartanDatum& c, const TwistMatrix& psi, const Lattice& gamma,
                             bool doubled, Flavor flavor) {
  int n = c.rank;
  TwistedHopfSpec t;
  t.psi = psi;
  t.doubled = doubled;
  if (!doubled) {
    if (gamma.dim() != n) throw DimensionMismatch();
    Lattice need = q_psi_lattice(c, psi);
    for (auto& row : need.canonical_rows())
      if (!gamma.contains(row)) {
        LatticeTooSmall e("lattice misses a Q^Psi vector");
        e.witness = row;
        throw e;
      }
    // tor = gamma x {0}
    std::vector<VecQ> rows;
    for (auto& b : gamma.basis()) rows.push_back(vq_concat(b, vq_zero(n)));
    t.base = build_canonical(c, Lattice(rows), false, flavor);
    t.base.spec->gamma_plus = gamma;
    t.base.spec->gamma_minus = gamma;
  } else {
    if (gamma.dim() != 2 * n) throw DimensionMismatch();
    // the plus Borel only consumes Q^Psi_{(+)} legs, the minus Borel only
    // Q^Psi_{(-)} ones; the full algebra needs their sum
    std::vector<Lattice> needs;
    if (flavor != Flavor::borel_minus) needs.push_back(q_psi_doubled_plus(c, psi));
    if (flavor != Flavor::borel_plus) needs.push_back(q_psi_doubled_minus(c, psi));
    for (auto& need : needs)
      for (auto& row : need.canonical_rows())
        if (!gamma.contains(row)) {
          LatticeTooSmall e("lattice misses a Q^Psi_* vector");
          e.witness = row;
          throw e;
        }
    // doubled coords (u, v) correspond to toral pairs (u, -v)
    std::vector<VecQ> rows;
    for (auto& b : gamma.basis()) {
      VecQ u(b.begin(), b.begin() + n), v(b.begin() + n, b.end());
      rows.push_back(vq_concat(u, vq_neg(v)));
    }
    t.base = build_canonical(c, Lattice(rows), true, flavor);
  }
  t.twisted = make_twisted_tables(*t.base.spec, c, psi, doubled);
  // twisted generators
  TwistShifts sh = shifts(c, psi);
  for (int i = 0; i < n; ++i) {
    VecQ alpha = vq_zero(n);
    alpha[i] = 1;
    VecQ pa = sh.psi_plus_alpha[i], ma = sh.psi_minus_alpha[i];
    // E^Psi_i = T_{-psi_-(a_i^-)} E_i ; F^Psi_i = T_{+psi_+(a_i^+)} F_i
    Word ew = t.doubled ? toral_word_pair(vq_zero(n), ma) : toral_word_pair(vq_neg(ma), {});
    ew.push_back(letter_E(i));
    t.e_psi.push_back(AlgebraElement::monomial(n, ew, FieldScalar::one()));
    Word fw = toral_word_pair(pa, vq_zero(n));
    fw.push_back(letter_F(i));
    t.f_psi.push_back(AlgebraElement::monomial(n, fw, FieldScalar::one()));
    if (t.doubled) {
      // K^Psi_{i,+} = T_{tau_i^+}: pair (a + psi_+a, psi_-a)
      t.k_psi_plus.emplace_back(vq_add(alpha, pa), ma);
      // K^Psi_{i,-} = T_{-tau_i^-}: pair (psi_+a, a + psi_-a)
      t.k_psi_minus.emplace_back(pa, vq_add(alpha, ma));
    } else {
      t.k_psi_plus.emplace_back(vq_add(alpha, vq_add(pa, vq_neg(ma))), vq_zero(n));
      t.k_psi_minus.emplace_back(vq_neg(vq_add(alpha, vq_add(ma, vq_neg(pa)))), vq_zero(n));
    }
  }
  return t;
}

TensorElement twisted_coproduct(const TwistedHopfSpec& t, const AlgebraElement& x) {
  return coproduct(t.twisted, x);
}

AlgebraElement twisted_antipode(const TwistedHopfSpec& t, const AlgebraElement& x) {
  return antipode(t.twisted, x);
}

SubalgebraCondition hopf_subalgebra_condition(const CartanDatum& c, const TwistMatrix& psi,
                                              const Lattice& gamma) {
  SubalgebraCondition r;
  TwistShifts sh = shifts(c, psi);
  for (int i = 0; i < c.rank; ++i) {
    if (!gamma.contains(sh.psi_plus_alpha[i])) {
      r.holds = false;
      r.witness = "psi_+(alpha_" + std::to_string(i + 1) + ") outside the lattice";
      return r;
    }
    if (!gamma.contains(sh.psi_minus_alpha[i])) {
      r.holds = false;
      r.witness = "psi_-(alpha_" + std::to_string(i + 1) + ") outside the lattice";
      return r;
    }
  }
  return r;
}

namespace {

// Apply the Psi'-twist transformation to generator tables: every tensor
// term (a (x) b) picks up toral cofactors from the slot weights, and the
// antipode images are conjugated by the generator-weight torals.
TensorElement transform_delta(const AlgebraSpec& s, const TensorElement& d,
                              const CartanDatum& c, const TwistMatrix& psi2, bool doubled) {
  int n = s.n();
  RatMat p = psi_plus_matrix(c, psi2);
  RatMat m = psi_minus_matrix(c, psi2);
  TensorElement out(n, 2);
  for (auto& [ws, cf] : d.terms()) {
    VecQ w1 = vq_zero(n), w2 = vq_zero(n);
    for (auto& l : ws[0]) {
      if (l.kind == GenKind::E) w1[l.index] += 1;
      if (l.kind == GenKind::F) w1[l.index] -= 1;
    }
    for (auto& l : ws[1]) {
      if (l.kind == GenKind::E) w2[l.index] += 1;
      if (l.kind == GenKind::F) w2[l.index] -= 1;
    }
    // slot 1 gains T_{(psi'_+(w2), 0)}, slot 2 gains T_{(0, psi'_-(w1))}
    VecQ s1 = p.apply(w2);
    VecQ s2 = m.apply(w1);
    Word a = ws[0];
    Word cof1 = toral_word_pair(s1, vq_zero(n));
    a.insert(a.end(), cof1.begin(), cof1.end());
    Word b = ws[1];
    Word cof2 = doubled ? toral_word_pair(vq_zero(n), vq_neg(s2)) : toral_word_pair(s2, {});
    b.insert(b.end(), cof2.begin(), cof2.end());
    out.add_term({a, b}, cf);
  }
  return tensor_normal_form(s, out);
}

AlgebraElement transform_antipode(const AlgebraSpec& s, const AlgebraElement& img, int gen_index,
                                  bool is_e, const CartanDatum& c, const TwistMatrix& psi2,
                                  bool doubled) {
  int n = s.n();
  RatMat p = psi_plus_matrix(c, psi2);
  RatMat m = psi_minus_matrix(c, psi2);
  VecQ wt = vq_zero(n);
  wt[gen_index] = is_e ? 1 : -1;
  VecQ left = vq_neg(p.apply(wt));
  VecQ right = vq_neg(m.apply(wt));
  AlgebraElement out(n);
  for (auto& [w, cf] : img.terms()) {
    Word nw = toral_word_pair(left, vq_zero(n));
    nw.insert(nw.end(), w.begin(), w.end());
    Word rw = doubled ? toral_word_pair(vq_zero(n), vq_neg(right)) : toral_word_pair(right, {});
    nw.insert(nw.end(), rw.begin(), rw.end());
    out.add_term(nw, cf);
  }
  return normal_form(s, out);
}

}  // namespace

IterateReport iterate_twist_check(const CartanDatum& c, const TwistMatrix& psi,
                                  const TwistMatrix& psi2, const Lattice& gamma, bool doubled) {
  IterateReport rep;
  TwistedHopfSpec t1 = build_twquea(c, psi, gamma, doubled);
  TwistedHopfSpec t12 = build_twquea(c, psi + psi2, gamma, doubled);
  const AlgebraSpec& s = *t1.base.spec;
  const AlgebraSpec& s2 = *t12.base.spec;
  for (int i = 0; i < c.rank; ++i) {
    ++rep.checks;
    TensorElement lhsE = transform_delta(s, t1.twisted.delta_E[i], c, psi2, doubled);
    TensorElement rhsE = tensor_normal_form(s2, t12.twisted.delta_E[i]);
    lhsE.owner = -1;
    rhsE.owner = -1;
    if (lhsE != rhsE) rep.failures.push_back("delta(E_" + std::to_string(i + 1) + ")");
    ++rep.checks;
    TensorElement lhsF = transform_delta(s, t1.twisted.delta_F[i], c, psi2, doubled);
    TensorElement rhsF = tensor_normal_form(s2, t12.twisted.delta_F[i]);
    if (lhsF != rhsF) rep.failures.push_back("delta(F_" + std::to_string(i + 1) + ")");
    ++rep.checks;
    AlgebraElement lsE = transform_antipode(s, t1.twisted.s_E[i], i, true, c, psi2, doubled);
    AlgebraElement rsE = normal_form(s2, t12.twisted.s_E[i]);
    if (lsE != rsE) rep.failures.push_back("S(E_" + std::to_string(i + 1) + ")");
    ++rep.checks;
    AlgebraElement lsF = transform_antipode(s, t1.twisted.s_F[i], i, false, c, psi2, doubled);
    AlgebraElement rsF = normal_form(s2, t12.twisted.s_F[i]);
    if (lsF != rsF) rep.failures.push_back("S(F_" + std::to_string(i + 1) + ")");
  }
  return rep;
}

}  // namespace quea
