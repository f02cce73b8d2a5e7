#include "quea/algebra.hpp"

#include <cassert>
#include <deque>

namespace quea {

Letter letter_E(int i) { return Letter{GenKind::E, i, {}}; }
Letter letter_F(int i) { return Letter{GenKind::F, i, {}}; }
Letter letter_K(VecQ exp) { return Letter{GenKind::KTor, -1, std::move(exp)}; }
Letter letter_L(VecQ exp) { return Letter{GenKind::LTor, -1, std::move(exp)}; }

bool operator==(const Letter& a, const Letter& b) {
  return a.kind == b.kind && a.index == b.index && a.exp == b.exp;
}

bool operator<(const Letter& a, const Letter& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.index != b.index) return a.index < b.index;
  return a.exp < b.exp;
}

int letter_rank(const Letter& l, int n) {
  switch (l.kind) {
    case GenKind::F:
      return n - 1 - l.index;  // F_n lowest, F_1 highest among F
    case GenKind::LTor:
      return n;
    case GenKind::KTor:
      return n + 1;
    case GenKind::E:
      return n + 2 + l.index;
  }
  return 0;
}

bool letter_less(const Letter& a, const Letter& b, int n) {
  int ra = letter_rank(a, n), rb = letter_rank(b, n);
  if (ra != rb) return ra < rb;
  return a.exp < b.exp;
}

int ef_degree(const Word& w) {
  int d = 0;
  for (auto& l : w)
    if (l.kind == GenKind::E || l.kind == GenKind::F) ++d;
  return d;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  int da = ef_degree(a), db = ef_degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i], n), rb = letter_rank(b[i], n);
    if (ra != rb) return ra < rb;
    if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
  }
  return false;
}

bool VecWordLess::operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  WordLess wl{n};
  for (size_t i = 0; i < a.size(); ++i) {
    if (wl(a[i], b[i])) return true;
    if (wl(b[i], a[i])) return false;
  }
  return false;
}

AlgebraElement AlgebraElement::monomial(int n, Word w, FieldScalar c) {
  AlgebraElement e(n);
  e.add_term(w, c);
  return e;
}

void AlgebraElement::add_term(const Word& w, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

AlgebraElement AlgebraElement::scale(const FieldScalar& c) const {
  AlgebraElement r(n_);
  if (c.is_zero()) return r;
  for (auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

TensorElement TensorElement::unit(int n, int degree) {
  TensorElement t(n, degree);
  t.add_term(std::vector<Word>(degree), FieldScalar::one());
  return t;
}

void TensorElement::add_term(const std::vector<Word>& ws, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(ws);
  if (it == terms_.end()) {
    terms_.emplace(ws, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (degree_ != o.degree_) throw DegreeMismatch();
  TensorElement r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  if (degree_ != o.degree_) throw DegreeMismatch();
  TensorElement r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

TensorElement TensorElement::scale(const FieldScalar& c) const {
  TensorElement r(n_, degree_);
  if (c.is_zero()) return r;
  for (auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

Rational AlgebraSpec::bk(const VecQ& kexp, int j) const {
  Rational r(0);
  for (int i = 0; i < n(); ++i) r += kexp[i] * R.at(i, j);
  return r;
}

Rational AlgebraSpec::bl(const VecQ& lexp, int j) const {
  Rational r(0);
  for (int i = 0; i < n(); ++i) r -= lexp[i] * R.at(j, i);
  return r;
}

bool AlgebraSpec::pair_allowed(const VecQ& k, const VecQ& l) const {
  return tor.contains(vq_concat(k, l)).has_value();
}

void AlgebraSpec::canon_pair(VecQ& k, VecQ& l) const {
  if (!quotient) return;
  VecQ pair = vq_concat(k, l);
  auto z = tor.contains(pair);
  if (!z) throw ExponentNotInLattice("toral exponent outside the declared lattice");
  std::vector<Integer> red = hnf_reduce(quotient->rel_coords, *z);
  // rebuild from reduced coordinates
  VecQ out = vq_zero(2 * n());
  auto& rows = tor.basis();
  for (size_t i = 0; i < red.size(); ++i) {
    if (red[i] == 0) continue;
    Rational c(red[i]);
    for (size_t j = 0; j < out.size(); ++j) out[j] += c * rows[i][j];
  }
  k.assign(out.begin(), out.begin() + n());
  l.assign(out.begin() + n(), out.end());
}

namespace {

struct Pending {
  Word w;
  FieldScalar c;
};

// Try to match rule lhs at position p (kinds and indices; toral letters never
// occur in rule lhs words).
bool match_at(const Word& w, size_t p, const Word& lhs) {
  if (p + lhs.size() > w.size()) return false;
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (w[p + i].kind != lhs[i].kind || w[p + i].index != lhs[i].index) return false;
  }
  return true;
}

}  // namespace

AlgebraElement normal_form(const AlgebraSpec& s, const AlgebraElement& x) {
  int n = s.n();
  AlgebraElement out(n);
  out.owner = s.id;
  std::deque<Pending> work;
  for (auto& [w, c] : x.terms()) work.push_back({w, c});
  long steps = 0;
  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    if (++steps > s.step_cap) throw NonTerminating();
    Word& w = cur.w;
    FieldScalar& c = cur.c;
    if (c.is_zero()) continue;

    bool changed = true;
    bool dead = false;
    while (changed && !dead) {
      changed = false;
      // drop identity toral letters
      for (size_t p = 0; p < w.size(); ++p) {
        if ((w[p].kind == GenKind::KTor || w[p].kind == GenKind::LTor) && vq_is_zero(w[p].exp)) {
          w.erase(w.begin() + p);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // adjacent defects
      for (size_t p = 0; p + 1 < w.size(); ++p) {
        GenKind ka = w[p].kind, kb = w[p + 1].kind;
        if (ka == GenKind::KTor && kb == GenKind::KTor) {
          w[p].exp = vq_add(w[p].exp, w[p + 1].exp);
          w.erase(w.begin() + p + 1);
          changed = true;
          break;
        }
        if (ka == GenKind::LTor && kb == GenKind::LTor) {
          w[p].exp = vq_add(w[p].exp, w[p + 1].exp);
          w.erase(w.begin() + p + 1);
          changed = true;
          break;
        }
        if (ka == GenKind::KTor && kb == GenKind::LTor) {
          std::swap(w[p], w[p + 1]);
          changed = true;
          break;
        }
        if (ka == GenKind::E && (kb == GenKind::KTor || kb == GenKind::LTor)) {
          // E_i X -> q^{-B(X, alpha_i)} X E_i
          Rational e = kb == GenKind::KTor ? s.bk(w[p + 1].exp, w[p].index)
                                           : s.bl(w[p + 1].exp, w[p].index);
          c *= FieldScalar::q_pow(-e);
          std::swap(w[p], w[p + 1]);
          changed = true;
          break;
        }
        if ((ka == GenKind::KTor || ka == GenKind::LTor) && kb == GenKind::F) {
          // X F_j -> q^{-B(X, alpha_j)} F_j X
          Rational e =
              ka == GenKind::KTor ? s.bk(w[p].exp, w[p + 1].index) : s.bl(w[p].exp, w[p + 1].index);
          c *= FieldScalar::q_pow(-e);
          std::swap(w[p], w[p + 1]);
          changed = true;
          break;
        }
        if (ka == GenKind::E && kb == GenKind::F) {
          int i = w[p].index, j = w[p + 1].index;
          // E_i F_j = F_j E_i + delta_ij ef_coeff_i (T_pos - T_neg)
          if (i == j) {
            auto emit = [&](const std::pair<VecQ, VecQ>& pr, const FieldScalar& coeff) {
              Word nw(w.begin(), w.begin() + p);
              if (!vq_is_zero(pr.second)) nw.push_back(letter_L(pr.second));
              if (!vq_is_zero(pr.first)) nw.push_back(letter_K(pr.first));
              nw.insert(nw.end(), w.begin() + p + 2, w.end());
              work.push_back({std::move(nw), c * coeff});
            };
            emit(s.ef_pos[i], s.ef_coeff[i]);
            emit(s.ef_neg[i], -s.ef_coeff[i]);
          }
          std::swap(w[p], w[p + 1]);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // fused toral pair: quotient-canonical representative
      if (s.quotient) {
        VecQ k = vq_zero(n), l = vq_zero(n);
        int kpos = -1, lpos = -1;
        for (size_t p = 0; p < w.size(); ++p) {
          if (w[p].kind == GenKind::KTor) {
            k = w[p].exp;
            kpos = static_cast<int>(p);
          }
          if (w[p].kind == GenKind::LTor) {
            l = w[p].exp;
            lpos = static_cast<int>(p);
          }
        }
        if (kpos >= 0 || lpos >= 0) {
          VecQ k2 = k, l2 = l;
          s.canon_pair(k2, l2);
          if (k2 != k || l2 != l) {
            // rebuild the toral stretch in place
            Word nw;
            for (size_t p = 0; p < w.size(); ++p) {
              if (static_cast<int>(p) == kpos || static_cast<int>(p) == lpos) continue;
              nw.push_back(w[p]);
            }
            // insert at the boundary between F-block and E-block
            size_t ins = 0;
            while (ins < nw.size() && nw[ins].kind == GenKind::F) ++ins;
            Word tor;
            if (!vq_is_zero(l2)) tor.push_back(letter_L(l2));
            if (!vq_is_zero(k2)) tor.push_back(letter_K(k2));
            nw.insert(nw.begin() + ins, tor.begin(), tor.end());
            w = std::move(nw);
            changed = true;
            continue;
          }
        }
      }
      // Serre rules, leftmost match
      for (size_t p = 0; p < w.size() && !changed; ++p) {
        for (auto& r : s.serre_rules) {
          if (!r.enabled || !match_at(w, p, r.lhs)) continue;
          for (auto& [rw, rc] : r.rhs.terms()) {
            Word nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + p + r.lhs.size(), w.end());
            work.push_back({std::move(nw), c * rc});
          }
          dead = true;
          changed = true;
          break;
        }
      }
      if (dead) break;
    }
    if (!dead) out.add_term(w, c);
  }
  return out;
}

AlgebraElement multiply(const AlgebraSpec& s, const AlgebraElement& x, const AlgebraElement& y) {
  if ((x.owner >= 0 && x.owner != s.id) || (y.owner >= 0 && y.owner != s.id))
    throw SpecMismatch();
  AlgebraElement prod(s.n());
  for (auto& [wx, cx] : x.terms())
    for (auto& [wy, cy] : y.terms()) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      prod.add_term(w, cx * cy);
    }
  return normal_form(s, prod);
}

TensorElement tensor_multiply(const AlgebraSpec& s, const TensorElement& u,
                              const TensorElement& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch();
  TensorElement prod(s.n(), u.degree());
  for (auto& [wu, cu] : u.terms())
    for (auto& [wv, cv] : v.terms()) {
      std::vector<Word> ws(wu.size());
      for (size_t i = 0; i < ws.size(); ++i) {
        ws[i] = wu[i];
        ws[i].insert(ws[i].end(), wv[i].begin(), wv[i].end());
      }
      prod.add_term(ws, cu * cv);
    }
  return tensor_normal_form(s, prod);
}

TensorElement tensor_normal_form(const AlgebraSpec& s, const TensorElement& u) {
  TensorElement out(s.n(), u.degree());
  out.owner = s.id;
  for (auto& [ws, c] : u.terms()) {
    // normalize slot by slot, distributing sums
    std::vector<std::pair<std::vector<Word>, FieldScalar>> acc;
    acc.emplace_back(std::vector<Word>{}, c);
    for (auto& w : ws) {
      AlgebraElement nf = normal_form(s, AlgebraElement::monomial(s.n(), w, FieldScalar::one()));
      std::vector<std::pair<std::vector<Word>, FieldScalar>> next;
      for (auto& [pref, pc] : acc)
        for (auto& [nw, nc] : nf.terms()) {
          auto ws2 = pref;
          ws2.push_back(nw);
          next.emplace_back(std::move(ws2), pc * nc);
        }
      acc = std::move(next);
    }
    for (auto& [ws2, c2] : acc) out.add_term(ws2, c2);
  }
  return out;
}

TensorElement apply_componentwise(
    const AlgebraSpec& s, const std::vector<std::function<AlgebraElement(const Word&)>>& maps,
    const TensorElement& u) {
  if (static_cast<int>(maps.size()) != u.degree()) throw DegreeMismatch();
  TensorElement out(s.n(), u.degree());
  for (auto& [ws, c] : u.terms()) {
    std::vector<std::pair<std::vector<Word>, FieldScalar>> acc;
    acc.emplace_back(std::vector<Word>{}, c);
    for (size_t i = 0; i < ws.size(); ++i) {
      AlgebraElement img = maps[i](ws[i]);
      std::vector<std::pair<std::vector<Word>, FieldScalar>> next;
      for (auto& [pref, pc] : acc)
        for (auto& [nw, nc] : img.terms()) {
          auto ws2 = pref;
          ws2.push_back(nw);
          next.emplace_back(std::move(ws2), pc * nc);
        }
      acc = std::move(next);
    }
    for (auto& [ws2, c2] : acc) out.add_term(ws2, c2);
  }
  return out;
}

std::vector<long> e_multidegree(const Word& w, int n) {
  std::vector<long> d(n, 0);
  for (auto& l : w)
    if (l.kind == GenKind::E) ++d[l.index];
  return d;
}

std::vector<long> f_multidegree(const Word& w, int n) {
  std::vector<long> d(n, 0);
  for (auto& l : w)
    if (l.kind == GenKind::F) ++d[l.index];
  return d;
}

std::vector<Word> irreducible_block_words(const AlgebraSpec& s, GenKind kind, int maxdeg) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  auto reducible = [&](const Word& w) {
    for (auto& r : s.serre_rules) {
      if (!r.enabled || r.lhs.empty() || r.lhs[0].kind != kind) continue;
      if (w.size() < r.lhs.size()) continue;
      size_t p = w.size() - r.lhs.size();
      if (match_at(w, p, r.lhs)) return true;
    }
    return false;
  };
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (int i = 0; i < s.n(); ++i) {
        Word w2 = w;
        w2.push_back(kind == GenKind::E ? letter_E(i) : letter_F(i));
        // only the new suffix can introduce a redex
        if (!reducible(w2)) next.push_back(w2);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> basis_words(const AlgebraSpec& s, int maxdeg,
                              const std::vector<Word>& toral_samples) {
  std::vector<Word> es =
      s.has_E() ? irreducible_block_words(s, GenKind::E, maxdeg) : std::vector<Word>{Word{}};
  std::vector<Word> fs =
      s.has_F() ? irreducible_block_words(s, GenKind::F, maxdeg) : std::vector<Word>{Word{}};
  std::vector<Word> tors = toral_samples;
  if (tors.empty()) tors.push_back(Word{});
  std::vector<Word> out;
  for (auto& f : fs)
    for (auto& t : tors)
      for (auto& e : es) {
        if (ef_degree(f) + ef_degree(e) > maxdeg) continue;
        Word w = f;
        w.insert(w.end(), t.begin(), t.end());
        w.insert(w.end(), e.begin(), e.end());
        out.push_back(w);
      }
  return out;
}

namespace {

struct FlatRule {
  Word lhs;
  AlgebraElement rhs;
  std::string name;
};

std::vector<FlatRule> structural_rules(const AlgebraSpec& s) {
  int n = s.n();
  std::vector<FlatRule> rules;
  for (auto& r : s.serre_rules)
    if (r.enabled) rules.push_back({r.lhs, r.rhs, r.name});
  // EF straightening
  if (s.has_E() && s.has_F()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        AlgebraElement rhs(n);
        rhs.add_term(Word{letter_F(j), letter_E(i)}, FieldScalar::one());
        if (i == j) {
          auto emit = [&](const std::pair<VecQ, VecQ>& pr, const FieldScalar& c) {
            Word w;
            if (!vq_is_zero(pr.second)) w.push_back(letter_L(pr.second));
            if (!vq_is_zero(pr.first)) w.push_back(letter_K(pr.first));
            rhs.add_term(w, c);
          };
          emit(s.ef_pos[i], s.ef_coeff[i]);
          emit(s.ef_neg[i], -s.ef_coeff[i]);
        }
        rules.push_back({Word{letter_E(i), letter_F(j)}, rhs,
                         "EF(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
      }
  }
  // Toral exchange instances at lattice basis vectors and simple roots.
  std::vector<VecQ> kinst, linst;
  for (auto& row : s.tor.basis()) {
    VecQ k(row.begin(), row.begin() + n), l(row.begin() + n, row.end());
    if (!vq_is_zero(k)) kinst.push_back(k);
    if (!vq_is_zero(l)) linst.push_back(l);
  }
  for (int i = 0; i < n; ++i) {
    VecQ a = vq_zero(n);
    a[i] = 1;
    kinst.push_back(a);
    if (s.doubled) linst.push_back(a);
  }
  auto add2 = [&](Word lhs, AlgebraElement rhs, std::string name) {
    rules.push_back({std::move(lhs), std::move(rhs), std::move(name)});
  };
  for (auto& k : kinst) {
    if (s.has_E())
      for (int i = 0; i < n; ++i) {
        AlgebraElement rhs(n);
        rhs.add_term(Word{letter_K(k), letter_E(i)}, FieldScalar::q_pow(-s.bk(k, i)));
        add2(Word{letter_E(i), letter_K(k)}, rhs, "EK");
      }
    if (s.has_F())
      for (int j = 0; j < n; ++j) {
        AlgebraElement rhs(n);
        rhs.add_term(Word{letter_F(j), letter_K(k)}, FieldScalar::q_pow(-s.bk(k, j)));
        add2(Word{letter_K(k), letter_F(j)}, rhs, "KF");
      }
  }
  for (auto& l : linst) {
    if (s.has_E())
      for (int i = 0; i < n; ++i) {
        AlgebraElement rhs(n);
        rhs.add_term(Word{letter_L(l), letter_E(i)}, FieldScalar::q_pow(-s.bl(l, i)));
        add2(Word{letter_E(i), letter_L(l)}, rhs, "EL");
      }
    if (s.has_F())
      for (int j = 0; j < n; ++j) {
        AlgebraElement rhs(n);
        rhs.add_term(Word{letter_F(j), letter_L(l)}, FieldScalar::q_pow(-s.bl(l, j)));
        add2(Word{letter_L(l), letter_F(j)}, rhs, "LF");
      }
  }
  for (auto& k : kinst)
    for (auto& k2 : kinst) {
      AlgebraElement rhs(n);
      VecQ sum = vq_add(k, k2);
      if (vq_is_zero(sum))
        rhs.add_term(Word{}, FieldScalar::one());
      else
        rhs.add_term(Word{letter_K(sum)}, FieldScalar::one());
      add2(Word{letter_K(k), letter_K(k2)}, rhs, "KK");
    }
  for (auto& l : linst)
    for (auto& l2 : linst) {
      AlgebraElement rhs(n);
      VecQ sum = vq_add(l, l2);
      if (vq_is_zero(sum))
        rhs.add_term(Word{}, FieldScalar::one());
      else
        rhs.add_term(Word{letter_L(sum)}, FieldScalar::one());
      add2(Word{letter_L(l), letter_L(l2)}, rhs, "LL");
    }
  for (auto& k : kinst)
    for (auto& l : linst) {
      AlgebraElement rhs(n);
      rhs.add_term(Word{letter_L(l), letter_K(k)}, FieldScalar::one());
      add2(Word{letter_K(k), letter_L(l)}, rhs, "KL");
    }
  return rules;
}

bool letters_equal(const Letter& a, const Letter& b) { return a == b; }

}  // namespace

OverlapReport overlap_check(const AlgebraSpec& s, int degree_bound) {
  OverlapReport rep;
  auto rules = structural_rules(s);
  for (auto& r1 : rules)
    for (auto& r2 : rules) {
      // suffix of r1.lhs == prefix of r2.lhs, proper overlap
      size_t l1 = r1.lhs.size(), l2 = r2.lhs.size();
      for (size_t off = 1; off < l1; ++off) {
        size_t olap = l1 - off;
        if (olap > l2) continue;
        bool ok = true;
        for (size_t i = 0; i < olap && ok; ++i) ok = letters_equal(r1.lhs[off + i], r2.lhs[i]);
        if (!ok) continue;
        // overlap word = r1.lhs + tail of r2.lhs
        Word w = r1.lhs;
        w.insert(w.end(), r2.lhs.begin() + olap, r2.lhs.end());
        if (static_cast<int>(w.size()) > degree_bound) continue;
        ++rep.pairs_checked;
        // reduce via r1 at 0 vs r2 at off, then normal form both
        AlgebraElement x1(s.n()), x2(s.n());
        for (auto& [rw, rc] : r1.rhs.terms()) {
          Word nw = rw;
          nw.insert(nw.end(), w.begin() + l1, w.end());
          x1.add_term(nw, rc);
        }
        for (auto& [rw, rc] : r2.rhs.terms()) {
          Word nw(w.begin(), w.begin() + off);
          nw.insert(nw.end(), rw.begin(), rw.end());
          nw.insert(nw.end(), w.begin() + off + l2, w.end());
          x2.add_term(nw, rc);
        }
        AlgebraElement d = normal_form(s, x1) - normal_form(s, x2);
        if (!d.is_zero()) rep.failures.push_back({w, r1.name, r2.name, d});
      }
      // containment: r2.lhs strictly inside r1.lhs
      if (l2 < l1) {
        for (size_t p = 0; p + l2 <= l1; ++p) {
          if (p == 0 && l2 == l1) continue;
          bool ok = true;
          for (size_t i = 0; i < l2 && ok; ++i) ok = letters_equal(r1.lhs[p + i], r2.lhs[i]);
          if (!ok) continue;
          if (static_cast<int>(l1) > degree_bound) continue;
          ++rep.pairs_checked;
          AlgebraElement x1 = r1.rhs;
          AlgebraElement x2(s.n());
          for (auto& [rw, rc] : r2.rhs.terms()) {
            Word nw(r1.lhs.begin(), r1.lhs.begin() + p);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), r1.lhs.begin() + p + l2, r1.lhs.end());
            x2.add_term(nw, rc);
          }
          AlgebraElement d = normal_form(s, x1) - normal_form(s, x2);
          if (!d.is_zero()) rep.failures.push_back({r1.lhs, r1.name, r2.name, d});
        }
      }
    }
  return rep;
}

}  // namespace quea
