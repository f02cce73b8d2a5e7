#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "quea/multiparam.hpp"
#include "quea/scalar.hpp"

namespace quea {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecMismatch : AlgebraError {
  SpecMismatch() : AlgebraError("element belongs to a different algebra") {}
};
struct DegreeMismatch : AlgebraError {
  DegreeMismatch() : AlgebraError("tensor degrees differ") {}
};
struct NonTerminating : AlgebraError {
  NonTerminating() : AlgebraError("rewrite step cap exceeded (malformed rule set?)") {}
};
struct ExponentNotInLattice : AlgebraError {
  ExponentNotInLattice(const std::string& m) : AlgebraError(m) {}
};

// Letter precedence: F_n < ... < F_1 < L < K < E_1 < ... < E_n.
enum class GenKind : uint8_t { F, LTor, KTor, E };

struct Letter {
  GenKind kind;
  int index = -1;  // E/F generator index (0-based)
  VecQ exp;        // KTor/LTor exponent in alpha-coordinates
};

Letter letter_E(int i);
Letter letter_F(int i);
Letter letter_K(VecQ exp);
Letter letter_L(VecQ exp);

bool operator==(const Letter& a, const Letter& b);
// structural order for use in containers (not the term order)
bool operator<(const Letter& a, const Letter& b);
// total order consistent with the generator precedence, rank-aware
int letter_rank(const Letter& l, int n);
bool letter_less(const Letter& a, const Letter& b, int n);

using Word = std::vector<Letter>;

// deglex: E/F-degree, then length, then letterwise precedence.
struct WordLess {
  int n;
  bool operator()(const Word& a, const Word& b) const;
};

int ef_degree(const Word& w);

struct AlgebraSpec;

class AlgebraElement {
 public:
  using Terms = std::map<Word, FieldScalar, WordLess>;
  explicit AlgebraElement(int n) : terms_(WordLess{n}), n_(n) {}

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement unit(int n) { return monomial(n, Word{}, FieldScalar::one()); }
  static AlgebraElement monomial(int n, Word w, FieldScalar c);

  void add_term(const Word& w, const FieldScalar& c);
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int n() const { return n_; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scale(const FieldScalar& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  int owner = -1;  // AlgebraSpec id; -1 = unowned scratch value

 private:
  Terms terms_;
  int n_;
};

struct VecWordLess {
  int n;
  bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const;
};

class TensorElement {
 public:
  using Terms = std::map<std::vector<Word>, FieldScalar, VecWordLess>;
  TensorElement(int n, int degree) : terms_(VecWordLess{n}), n_(n), degree_(degree) {}

  static TensorElement unit(int n, int degree);
  void add_term(const std::vector<Word>& ws, const FieldScalar& c);
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int degree() const { return degree_; }
  int n() const { return n_; }

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scale(const FieldScalar& c) const;
  bool operator==(const TensorElement& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  int owner = -1;

 private:
  Terms terms_;
  int n_, degree_;
};

// Oriented rewrite rule: lhs is a pure E-block or F-block word and every
// rhs word is strictly smaller in the term order.
struct Rule {
  Word lhs;
  AlgebraElement rhs;
  bool enabled = true;
  std::string name;
};

enum class Flavor { full, borel_plus, borel_minus };
// mp: relation (e) reads q_ii (K - L)/(q_ii - 1); jimbo: 1/(q_i - q_i^{-1})
// with the section-3 generator conventions.
enum class Convention { mp, jimbo };

struct QuotientCanon {
  IntMat rel_coords;  // HNF rows: relation subgroup in integer coordinates over tor basis
  // ideal generators as toral-pair equations lhs = rhs
  std::vector<std::pair<std::pair<VecQ, VecQ>, std::pair<VecQ, VecQ>>> rel_pairs;
};

// A presented algebra: carrier data for the rewriting engine.  Built by
// the quantum-algebra builders; immutable afterwards.
struct AlgebraSpec {
  CartanDatum cartan;
  RatMat R;  // exponent matrix; DA in the canonical case
  Convention conv = Convention::mp;
  bool doubled = true;  // L letters allowed
  Flavor flavor = Flavor::full;
  // Allowed toral (kexp, lexp) pairs as a 2n-lattice.
  Lattice tor;
  // the declared n-dim lattices behind tor (K side, L side)
  Lattice gamma_plus, gamma_minus;
  std::vector<Rule> serre_rules;
  // relation (e) data per generator index
  std::vector<FieldScalar> ef_coeff;
  std::vector<std::pair<VecQ, VecQ>> ef_pos, ef_neg;
  std::optional<QuotientCanon> quotient;
  long step_cap = 8'000'000;
  int id = 0;

  int n() const { return cartan.rank; }
  // q^{B_K(kexp, alpha_j)} with B_K(alpha_i, alpha_j) = r_ij
  Rational bk(const VecQ& kexp, int j) const;
  // B_L(alpha_i, alpha_j) = -r_ji
  Rational bl(const VecQ& lexp, int j) const;
  bool pair_allowed(const VecQ& k, const VecQ& l) const;
  // canonical coset representative of a toral pair (quotient-aware)
  void canon_pair(VecQ& k, VecQ& l) const;

  bool has_E() const { return flavor != Flavor::borel_minus; }
  bool has_F() const { return flavor != Flavor::borel_plus; }
};

AlgebraElement normal_form(const AlgebraSpec& s, const AlgebraElement& x);
AlgebraElement multiply(const AlgebraSpec& s, const AlgebraElement& x, const AlgebraElement& y);

TensorElement tensor_multiply(const AlgebraSpec& s, const TensorElement& u,
                              const TensorElement& v);
// Per-slot linear maps applied componentwise.
TensorElement apply_componentwise(
    const AlgebraSpec& s, const std::vector<std::function<AlgebraElement(const Word&)>>& maps,
    const TensorElement& u);
// Normalize every slot of every term.
TensorElement tensor_normal_form(const AlgebraSpec& s, const TensorElement& u);

// Q-degree of the E-part / F-part of a word (vector of multiplicities).
std::vector<long> e_multidegree(const Word& w, int n);
std::vector<long> f_multidegree(const Word& w, int n);

// Irreducible same-kind block words of total degree <= maxdeg.
std::vector<Word> irreducible_block_words(const AlgebraSpec& s, GenKind kind, int maxdeg);

// Normal-form basis words: F-block x toral sample x E-block with E/F degree <= maxdeg.
std::vector<Word> basis_words(const AlgebraSpec& s, int maxdeg,
                              const std::vector<Word>& toral_samples);

struct OverlapFailure {
  Word overlap;
  std::string rule_a, rule_b;
  AlgebraElement diff;
};
struct OverlapReport {
  long pairs_checked = 0;
  std::vector<OverlapFailure> failures;
  bool clean() const { return failures.empty(); }
};
// Critical-pair audit over all structural rules (Serre, EF straightening,
// toral exchanges instantiated at lattice basis vectors and simple roots).
OverlapReport overlap_check(const AlgebraSpec& s, int degree_bound);

}  // namespace quea
