#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "quea/rational.hpp"

namespace quea {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : ScalarError {
  DivisionByZero() : ScalarError("division by zero scalar") {}
};
struct ExponentDenominatorExceedsRoot : ScalarError {
  ExponentDenominatorExceedsRoot(const std::string& m) : ScalarError(m) {}
};

// Laurent combination sum_r c_r * q^r with rational exponents r.
// Stored sparsely; exponent denominators are unconstrained here, the
// run-wide root order only gates configured input (see ScalarContext).
using QPoly = std::map<Rational, Rational>;

QPoly qp_monomial(const Rational& exp, const Rational& coeff = Rational(1));
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_neg(const QPoly& a);
QPoly qp_mul(const QPoly& a, const QPoly& b);
bool qp_is_zero(const QPoly& a);

// Exact field of fractions of Laurent combinations.  Canonical form:
// denominator has lowest exponent 0, is monic in its highest exponent,
// and shares no factor with the numerator, so equality is structural.
class FieldScalar {
 public:
  FieldScalar() : num_(), den_(qp_monomial(0)) {}
  explicit FieldScalar(const Rational& c);
  FieldScalar(QPoly num, QPoly den);

  static FieldScalar zero() { return FieldScalar(); }
  static FieldScalar one() { return FieldScalar(Rational(1)); }
  // q^r as a scalar.
  static FieldScalar q_pow(const Rational& r);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inv() const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar pow(long e) const;

  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  bool operator==(const FieldScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }
  // Total order usable as a map key (lexicographic on the canonical form).
  bool operator<(const FieldScalar& o) const;

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  // If the scalar is c*q^r, returns true and fills (c, r).
  bool as_monomial(Rational& coeff, Rational& exp) const;

  // Rendering per the Laurent grammar: "q^2", "q^(1/2)", "(q+1)/(q^2-1)", "3/2", ...
  std::string str() const;

 private:
  void normalize();
  QPoly num_, den_;
};

FieldScalar qs(long num, long den = 1);

// Run-wide root order N: q^{1/N} generates every exponent declared in a
// configuration.  Internal arithmetic is exponent-exact and does not
// consult it; it gates declared input and drives rendering.
struct ScalarContext {
  long root_order = 1;
};

// q^r as t^{rN} over the context; errors when r*N is not an integer.
FieldScalar q_power(const ScalarContext& ctx, const Rational& r);

}  // namespace quea
