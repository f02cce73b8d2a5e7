#include "quea/expr.hpp"

#include <cctype>
#include <sstream>

namespace quea {

namespace {

struct Parser {
  const AlgebraSpec& spec;
  const std::string& s;
  size_t p = 0;

  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return p < s.size() ? s[p] : '\0';
  }

  Rational rational() {
    skip();
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p < s.size() && s[p] == '/') {
      ++p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    }
    if (p == start) throw ParseError("expected rational", p);
    return parse_rational(s.substr(start, p - start));
  }

  long integer() {
    skip();
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw ParseError("expected integer", p);
    return std::stol(s.substr(start, p - start));
  }

  int gen_index() {
    skip();
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw ParseError("expected generator index", p);
    int i = std::stoi(s.substr(start, p - start));
    if (i < 1 || i > spec.n()) throw UnknownGenerator("generator index out of range");
    return i - 1;
  }

  VecQ coords() {
    if (!eat('[')) throw ParseError("expected '['", p);
    VecQ v;
    if (peek() != ']') {
      v.push_back(rational());
      while (eat(',')) v.push_back(rational());
    }
    if (!eat(']')) throw ParseError("expected ']'", p);
    if (static_cast<int>(v.size()) != spec.n()) throw ParseError("coordinate count mismatch", p);
    return v;
  }

  // one factor: returns either a scalar or an element
  AlgebraElement factor() {
    skip();
    if (p >= s.size()) throw ParseError("unexpected end of input", p);
    char c = s[p];
    int n = spec.n();
    if (c == '(') {
      ++p;
      AlgebraElement inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", p);
      return inner;
    }
    if (c == 'q') {
      ++p;
      Rational r(1);
      if (eat('^')) {
        if (eat('(')) {
          r = rational();
          if (!eat(')')) throw ParseError("expected ')'", p);
        } else {
          r = Rational(integer());
        }
      }
      return AlgebraElement::monomial(n, Word{}, FieldScalar::q_pow(r));
    }
    if (c == 'E' || c == 'F' || c == 'K' || c == 'L') {
      ++p;
      Word w;
      if (c == 'E') {
        if (!spec.has_E()) throw UnknownGenerator("algebra has no E generators");
        w.push_back(letter_E(gen_index()));
      } else if (c == 'F') {
        if (!spec.has_F()) throw UnknownGenerator("algebra has no F generators");
        w.push_back(letter_F(gen_index()));
      } else {
        VecQ v = coords();
        if (c == 'K') {
          if (!spec.pair_allowed(v, vq_zero(n)))
            throw ExponentNotInLattice("K exponent outside the declared lattice");
          w.push_back(letter_K(v));
        } else {
          if (!spec.pair_allowed(vq_zero(n), v))
            throw ExponentNotInLattice("L exponent outside the declared lattice");
          w.push_back(letter_L(v));
        }
      }
      long e = 1;
      size_t save = p;
      if (eat('^')) {
        e = integer();
      } else {
        p = save;
      }
      if (e == 0) return AlgebraElement::unit(n);
      Word full;
      Letter base = w[0];
      if (e < 0) {
        if (base.kind == GenKind::E || base.kind == GenKind::F)
          throw ParseError("negative powers only for group-like generators", p);
        base.exp = vq_neg(base.exp);
        e = -e;
      }
      for (long i = 0; i < e; ++i) full.push_back(base);
      return AlgebraElement::monomial(n, full, FieldScalar::one());
    }
    // plain rational scalar
    Rational r = rational();
    return AlgebraElement::monomial(n, Word{}, FieldScalar(r));
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    while (true) {
      skip();
      if (p < s.size() && s[p] == '*') {
        ++p;
        acc = multiply(spec, acc, factor());
      } else if (p < s.size() && s[p] == '/') {
        ++p;
        size_t at = p;
        AlgebraElement d = factor();
        // division only by invertible scalars
        if (d.terms().size() != 1 || !d.terms().begin()->first.empty())
          throw ParseError("divisor must be a scalar", at);
        acc = acc.scale(d.terms().begin()->second.inv());
      } else {
        break;
      }
    }
    return acc;
  }

  AlgebraElement expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++p;
      neg = true;
    } else if (peek() == '+') {
      ++p;
    }
    AlgebraElement acc = term();
    if (neg) acc = acc.scale(-FieldScalar::one());
    while (true) {
      skip();
      if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        bool minus = s[p] == '-';
        ++p;
        AlgebraElement t = term();
        acc = minus ? acc - t : acc + t;
      } else {
        break;
      }
    }
    return acc;
  }
};

std::string coords_str(const VecQ& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace

AlgebraElement parse_expression(const AlgebraSpec& spec, const std::string& text) {
  Parser pa{spec, text};
  AlgebraElement e = pa.expr();
  pa.skip();
  if (pa.p != text.size()) throw ParseError("trailing input", pa.p);
  AlgebraElement nf = normal_form(spec, e);
  nf.owner = spec.id;
  return nf;
}

std::string render_scalar(const FieldScalar& c) { return c.str(); }

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    const Letter& l = w[i];
    std::string g;
    switch (l.kind) {
      case GenKind::E:
        g = "E" + std::to_string(l.index + 1);
        break;
      case GenKind::F:
        g = "F" + std::to_string(l.index + 1);
        break;
      case GenKind::KTor:
        g = "K" + coords_str(l.exp);
        break;
      case GenKind::LTor:
        g = "L" + coords_str(l.exp);
        break;
    }
    out += g;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string render_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  // highest term first for readability
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const FieldScalar& c = it->second;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string body = neg ? cs.substr(1) : cs;
    bool one = body == "1";
    std::string ws = render_word(it->first);
    std::string piece;
    if (one && !it->first.empty())
      piece = ws;
    else if (it->first.empty())
      piece = body;
    else {
      if (body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos)
        body = "(" + body + ")";
      piece = body + "*" + ws;
    }
    if (first) {
      out += (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace quea
