#include "quea/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace quea {

QPoly qp_monomial(const Rational& exp, const Rational& coeff) {
  QPoly p;
  if (coeff != 0) p[exp] = coeff;
  return p;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end()) {
      r.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

QPoly qp_neg(const QPoly& a) {
  QPoly r;
  for (auto& [e, c] : a) r.emplace(e, -c);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      Rational e = ea + eb;
      Rational c = ca * cb;
      auto it = r.find(e);
      if (it == r.end()) {
        r.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

bool qp_is_zero(const QPoly& a) { return a.empty(); }

namespace {

// Dense polynomial over Q used only inside gcd/division, after rescaling
// exponents of the two operands to a common integer grid.
using Dense = std::vector<Rational>;

void dense_trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  dense_trim(r);
  return r;
}

// a = q*b + r with deg(r) < deg(b)
void dense_divrem(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  assert(!b.empty());
  r = a;
  dense_trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
  Rational lead = b.back();
  while (r.size() >= b.size()) {
    Rational f = r.back() / lead;
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    dense_trim(r);
  }
  dense_trim(q);
}

Dense dense_gcd(Dense a, Dense b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.empty()) {
    Dense q, r;
    dense_divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) {
      Rational lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

long exponent_grid(const QPoly& a, const QPoly& b) {
  long n = 1;
  for (auto& [e, c] : a) n = std::lcm(n, static_cast<long>(e.get_den().get_si()));
  for (auto& [e, c] : b) n = std::lcm(n, static_cast<long>(e.get_den().get_si()));
  return n;
}

Rational min_exp(const QPoly& p) { return p.begin()->first; }

// Writes p = q^{shift} * dense(t) with t = q^{1/grid}, dense[0] != 0.
Dense to_dense(const QPoly& p, long grid, Rational& shift) {
  shift = min_exp(p);
  Rational spreadq = (p.rbegin()->first - shift) * grid;
  assert(spreadq.get_den() == 1);
  long spread = static_cast<long>(spreadq.get_num().get_si());
  Dense d(static_cast<size_t>(spread) + 1, Rational(0));
  for (auto& [e, c] : p) {
    Rational idx = (e - shift) * grid;
    d[static_cast<size_t>(idx.get_num().get_si())] = c;
  }
  return d;
}

QPoly from_dense(const Dense& d, long grid, const Rational& shift) {
  QPoly p;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    Rational e = shift + Rational(static_cast<long>(i), grid);
    e.canonicalize();
    p.emplace(std::move(e), d[i]);
  }
  return p;
}

}  // namespace

FieldScalar::FieldScalar(const Rational& c) : num_(qp_monomial(0, c)), den_(qp_monomial(0)) {}

FieldScalar::FieldScalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.empty()) throw DivisionByZero();
  normalize();
}

FieldScalar FieldScalar::q_pow(const Rational& r) {
  return FieldScalar(qp_monomial(r), qp_monomial(0));
}

FieldScalar qs(long num, long den) { return FieldScalar(rat(num, den)); }

bool FieldScalar::is_one() const {
  return num_.size() == 1 && num_.begin()->first == 0 && num_.begin()->second == 1 &&
         den_.size() == 1 && den_.begin()->first == 0 && den_.begin()->second == 1;
}

void FieldScalar::normalize() {
  if (num_.empty()) {
    den_ = qp_monomial(0);
    return;
  }
  // Cancel the gcd of the polynomial parts.
  if (den_.size() > 1 || num_.size() > 1) {
    long grid = exponent_grid(num_, den_);
    Rational sn, sd;
    Dense dn = to_dense(num_, grid, sn);
    Dense dd = to_dense(den_, grid, sd);
    Dense g = dense_gcd(dn, dd);
    if (g.size() > 1) {
      Dense q, r;
      dense_divrem(dn, g, q, r);
      assert(r.empty());
      dn = q;
      dense_divrem(dd, g, q, r);
      assert(r.empty());
      dd = q;
    }
    num_ = from_dense(dn, grid, sn);
    den_ = from_dense(dd, grid, sd);
  }
  // Units: make the denominator have lowest exponent 0 and leading coeff 1.
  Rational shift = min_exp(den_);
  Rational lead = den_.rbegin()->second;
  if (shift != 0 || lead != 1) {
    QPoly nn, nd;
    for (auto& [e, c] : num_) nn.emplace(e - shift, c / lead);
    for (auto& [e, c] : den_) nd.emplace(e - shift, c / lead);
    num_ = std::move(nn);
    den_ = std::move(nd);
  }
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return FieldScalar(qp_add(num_, o.num_), den_);
  return FieldScalar(qp_add(qp_mul(num_, o.den_), qp_mul(o.num_, den_)), qp_mul(den_, o.den_));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator-() const {
  FieldScalar r;
  r.num_ = qp_neg(num_);
  r.den_ = den_;
  return r;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  if (is_zero() || o.is_zero()) return FieldScalar();
  return FieldScalar(qp_mul(num_, o.num_), qp_mul(den_, o.den_));
}

FieldScalar FieldScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  return FieldScalar(den_, num_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inv(); }

FieldScalar FieldScalar::pow(long e) const {
  if (e == 0) return one();
  FieldScalar base = e > 0 ? *this : inv();
  long k = e > 0 ? e : -e;
  FieldScalar r = one();
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool FieldScalar::operator<(const FieldScalar& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

bool FieldScalar::as_monomial(Rational& coeff, Rational& exp) const {
  if (num_.size() != 1 || den_.size() != 1) return false;
  // canonical form: den = c * q^0 with c == 1
  if (den_.begin()->first != 0 || den_.begin()->second != 1) return false;
  exp = num_.begin()->first;
  coeff = num_.begin()->second;
  return true;
}

namespace {

std::string render_term(const Rational& exp, const Rational& coeff, bool lead) {
  std::string s;
  Rational c = coeff;
  bool neg = c < 0;
  if (neg) c = -c;
  if (lead) {
    if (neg) s += "-";
  } else {
    s += neg ? " - " : " + ";
  }
  std::string qpart;
  if (exp != 0) {
    if (exp == 1)
      qpart = "q";
    else if (exp.get_den() == 1)
      qpart = "q^" + exp.get_str();
    else
      qpart = "q^(" + exp.get_str() + ")";
  }
  if (qpart.empty()) {
    s += c.get_str();
  } else if (c == 1) {
    s += qpart;
  } else {
    s += c.get_str() + "*" + qpart;
  }
  return s;
}

std::string render_qpoly(const QPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool lead = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    s += render_term(it->first, it->second, lead);
    lead = false;
  }
  return s;
}

}  // namespace

std::string FieldScalar::str() const {
  if (is_zero()) return "0";
  bool den_trivial = den_.size() == 1 && den_.begin()->first == 0 && den_.begin()->second == 1;
  std::string ns = render_qpoly(num_);
  if (den_trivial) return ns;
  if (num_.size() > 1) ns = "(" + ns + ")";
  return ns + "/(" + render_qpoly(den_) + ")";
}

FieldScalar q_power(const ScalarContext& ctx, const Rational& r) {
  Rational scaled = r * ctx.root_order;
  if (scaled.get_den() != 1)
    throw ExponentDenominatorExceedsRoot("exponent " + r.get_str() +
                                         " not representable with root order " +
                                         std::to_string(ctx.root_order));
  return FieldScalar::q_pow(r);
}

}  // namespace quea
