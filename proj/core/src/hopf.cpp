#include "quea/hopf.hpp"

namespace quea {

TensorElement HopfSpec::delta_letter(const Letter& l) const {
  const AlgebraSpec& s = *spec;
  switch (l.kind) {
    case GenKind::E:
      return delta_E[l.index];
    case GenKind::F:
      return delta_F[l.index];
    default: {
      TensorElement t(s.n(), 2);
      t.add_term({Word{l}, Word{l}}, FieldScalar::one());
      return t;
    }
  }
}

AlgebraElement HopfSpec::antipode_letter(const Letter& l) const {
  const AlgebraSpec& s = *spec;
  switch (l.kind) {
    case GenKind::E:
      return s_E[l.index];
    case GenKind::F:
      return s_F[l.index];
    default: {
      Letter inv = l;
      inv.exp = vq_neg(l.exp);
      return AlgebraElement::monomial(s.n(), Word{inv}, FieldScalar::one());
    }
  }
}

TensorElement coproduct(const HopfSpec& h, const AlgebraElement& x) {
  const AlgebraSpec& s = *h.spec;
  if (x.owner >= 0 && x.owner != s.id) throw SpecMismatch();
  TensorElement out(s.n(), 2);
  for (auto& [w, c] : x.terms()) {
    TensorElement t = TensorElement::unit(s.n(), 2).scale(c);
    for (auto& l : w) t = tensor_multiply(s, t, h.delta_letter(l));
    out = out + t;
  }
  out.owner = s.id;
  return out;
}

FieldScalar counit(const HopfSpec& h, const AlgebraElement& x) {
  // eps kills E/F and sends torals to 1
  FieldScalar r = FieldScalar::zero();
  for (auto& [w, c] : x.terms()) {
    bool alive = true;
    for (auto& l : w)
      if (l.kind == GenKind::E || l.kind == GenKind::F) {
        alive = false;
        break;
      }
    if (alive) r += c;
  }
  return r;
}

AlgebraElement antipode(const HopfSpec& h, const AlgebraElement& x) {
  const AlgebraSpec& s = *h.spec;
  if (x.owner >= 0 && x.owner != s.id) throw SpecMismatch();
  AlgebraElement out(s.n());
  for (auto& [w, c] : x.terms()) {
    AlgebraElement t = AlgebraElement::unit(s.n()).scale(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      t = multiply(s, t, h.antipode_letter(*it));
    out = out + t;
  }
  out.owner = s.id;
  return out;
}

namespace {

// The antipode tables all have the shape S(g) = -T_a g T_b with toral
// cofactors; the inverse then reads S^{-1}(g) = -T_b g T_a.
AlgebraElement invert_antipode_table(const AlgebraSpec& s, const AlgebraElement& img,
                                     GenKind kind, int index) {
  if (img.terms().size() != 1) throw AlgebraError("antipode table is not monomial");
  const auto& [w, c] = *img.terms().begin();
  Word prefix, suffix;
  bool seen = false;
  for (auto& l : w) {
    if (l.kind == kind && l.index == index) {
      seen = true;
      continue;
    }
    if (l.kind == GenKind::E || l.kind == GenKind::F)
      throw AlgebraError("antipode table mixes generators");
    (seen ? suffix : prefix).push_back(l);
  }
  if (!seen) throw AlgebraError("antipode table misses its generator");
  Word nw = suffix;
  nw.push_back(kind == GenKind::E ? letter_E(index) : letter_F(index));
  nw.insert(nw.end(), prefix.begin(), prefix.end());
  return normal_form(s, AlgebraElement::monomial(s.n(), nw, c));
}

}  // namespace

AlgebraElement antipode_inverse(const HopfSpec& h, const AlgebraElement& x) {
  const AlgebraSpec& s = *h.spec;
  if (x.owner >= 0 && x.owner != s.id) throw SpecMismatch();
  AlgebraElement out(s.n());
  for (auto& [w, c] : x.terms()) {
    AlgebraElement t = AlgebraElement::unit(s.n()).scale(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      AlgebraElement img(s.n());
      switch (it->kind) {
        case GenKind::E:
          img = invert_antipode_table(s, h.s_E[it->index], GenKind::E, it->index);
          break;
        case GenKind::F:
          img = invert_antipode_table(s, h.s_F[it->index], GenKind::F, it->index);
          break;
        default: {
          Letter inv = *it;
          inv.exp = vq_neg(it->exp);
          img = AlgebraElement::monomial(s.n(), Word{inv}, FieldScalar::one());
        }
      }
      t = multiply(s, t, img);
    }
    out = out + t;
  }
  out.owner = s.id;
  return out;
}

TensorElement coproduct_at_slot(const HopfSpec& h, const TensorElement& t, int slot) {
  const AlgebraSpec& s = *h.spec;
  TensorElement out(s.n(), t.degree() + 1);
  for (auto& [ws, c] : t.terms()) {
    TensorElement dw =
        coproduct(h, AlgebraElement::monomial(s.n(), ws[slot], FieldScalar::one()));
    for (auto& [pair, pc] : dw.terms()) {
      std::vector<Word> nws;
      for (int i = 0; i < slot; ++i) nws.push_back(ws[i]);
      nws.push_back(pair[0]);
      nws.push_back(pair[1]);
      for (size_t i = slot + 1; i < ws.size(); ++i) nws.push_back(ws[i]);
      out.add_term(nws, c * pc);
    }
  }
  out.owner = s.id;
  return out;
}

TensorElement iterated_coproduct(const HopfSpec& h, const AlgebraElement& x, int k) {
  const AlgebraSpec& s = *h.spec;
  if (k == 0) {
    TensorElement t(s.n(), 1);
    for (auto& [w, c] : x.terms()) t.add_term({w}, c);
    t.owner = s.id;
    return t;
  }
  TensorElement t = coproduct(h, x);
  for (int i = 1; i < k; ++i) t = coproduct_at_slot(h, t, 0);
  return t;
}

AlgebraElement tensor_contract(const AlgebraSpec& s, const TensorElement& t) {
  AlgebraElement out(s.n());
  for (auto& [ws, c] : t.terms()) {
    Word w;
    for (auto& slot : ws) w.insert(w.end(), slot.begin(), slot.end());
    out.add_term(w, c);
  }
  return normal_form(s, out);
}

std::vector<std::pair<std::string, AlgebraElement>> defining_relations(const AlgebraSpec& s);

HopfReport check_hopf_axioms(const HopfSpec& h, int degree_bound) {
  const AlgebraSpec& s = *h.spec;
  int n = s.n();
  std::vector<Word> tors{Word{}};
  // sample torals: first lattice basis pair and, when doubled, an L letter
  if (!s.tor.basis().empty()) {
    auto& row = s.tor.basis()[0];
    VecQ k(row.begin(), row.begin() + n), l(row.begin() + n, row.end());
    Word w;
    if (!vq_is_zero(l)) w.push_back(letter_L(l));
    if (!vq_is_zero(k)) w.push_back(letter_K(k));
    if (!w.empty()) tors.push_back(w);
  }
  if (s.doubled) {
    VecQ a = vq_zero(n);
    a[0] = 1;
    if (s.pair_allowed(vq_zero(n), a)) tors.push_back(Word{letter_L(a)});
  }
  return check_hopf_axioms(h, degree_bound, tors);
}

HopfReport check_hopf_axioms(const HopfSpec& h, int degree_bound,
                             const std::vector<Word>& toral_samples) {
  const AlgebraSpec& s = *h.spec;
  int n = s.n();
  HopfReport rep;
  auto words = basis_words(s, degree_bound, toral_samples);
  for (auto& w : words) {
    AlgebraElement x = AlgebraElement::monomial(n, w, FieldScalar::one());
    TensorElement d = coproduct(h, x);
    // coassociativity
    TensorElement left = coproduct_at_slot(h, d, 0);
    TensorElement right = coproduct_at_slot(h, d, 1);
    ++rep.checks;
    if (left != right) rep.failures.push_back({"coassociativity", w, ""});
    // counit laws
    AlgebraElement lc(n), rc(n);
    for (auto& [ws, c] : d.terms()) {
      FieldScalar e1 = counit(h, AlgebraElement::monomial(n, ws[0], FieldScalar::one()));
      FieldScalar e2 = counit(h, AlgebraElement::monomial(n, ws[1], FieldScalar::one()));
      lc.add_term(ws[1], c * e1);
      rc.add_term(ws[0], c * e2);
    }
    AlgebraElement nfw = normal_form(s, x);
    ++rep.checks;
    if (normal_form(s, lc) != nfw || normal_form(s, rc) != nfw)
      rep.failures.push_back({"counit", w, ""});
    // antipode identity: m(S (x) id) Delta = eps * 1 = m(id (x) S) Delta
    AlgebraElement sa(n), sb(n);
    for (auto& [ws, c] : d.terms()) {
      AlgebraElement s1 = antipode(h, AlgebraElement::monomial(n, ws[0], FieldScalar::one()));
      AlgebraElement i2 = AlgebraElement::monomial(n, ws[1], FieldScalar::one());
      sa = sa + multiply(s, s1, i2).scale(c);
      AlgebraElement i1 = AlgebraElement::monomial(n, ws[0], FieldScalar::one());
      AlgebraElement s2 = antipode(h, AlgebraElement::monomial(n, ws[1], FieldScalar::one()));
      sb = sb + multiply(s, i1, s2).scale(c);
    }
    AlgebraElement target = AlgebraElement::unit(n).scale(counit(h, x));
    ++rep.checks;
    if (sa != target || sb != target) rep.failures.push_back({"antipode", w, ""});
  }
  // relation compatibility: Delta, eps kill relations; S anti-kills them
  for (auto& [name, rel] : defining_relations(s)) {
    TensorElement dr = coproduct(h, rel);
    ++rep.checks;
    if (!dr.is_zero()) rep.failures.push_back({"delta-kills-" + name, Word{}, ""});
    ++rep.checks;
    if (!counit(h, rel).is_zero()) rep.failures.push_back({"counit-kills-" + name, Word{}, ""});
    AlgebraElement sr = antipode(h, rel);
    ++rep.checks;
    if (!sr.is_zero()) rep.failures.push_back({"antipode-kills-" + name, Word{}, ""});
  }
  return rep;
}

}  // namespace quea
