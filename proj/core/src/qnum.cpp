#include "quea/qnum.hpp"

namespace quea {

FieldScalar q_paren_number(long n, const FieldScalar& q) {
  if (n <= 0) return FieldScalar::one();
  FieldScalar s = FieldScalar::zero();
  FieldScalar p = FieldScalar::one();
  for (long i = 0; i < n; ++i) {
    s += p;
    p = p * q;
  }
  return s;
}

FieldScalar q_paren_factorial(long n, const FieldScalar& q) {
  FieldScalar r = FieldScalar::one();
  for (long s = 1; s <= n; ++s) r = r * q_paren_number(s, q);
  return r;
}

FieldScalar q_paren_binomial(long n, long k, const FieldScalar& q) {
  if (k < 0 || k > n) throw BinomialRange();
  return q_paren_factorial(n, q) / (q_paren_factorial(k, q) * q_paren_factorial(n - k, q));
}

FieldScalar q_bracket_number(long n, const FieldScalar& q) {
  if (n <= 0) return FieldScalar::one();
  FieldScalar qinv = q.inv();
  FieldScalar s = FieldScalar::zero();
  // q^{2s-n+1} for s = 0..n-1
  FieldScalar p = qinv.pow(n - 1);
  FieldScalar q2 = q * q;
  for (long i = 0; i < n; ++i) {
    s += p;
    p = p * q2;
  }
  return s;
}

FieldScalar q_bracket_factorial(long n, const FieldScalar& q) {
  FieldScalar r = FieldScalar::one();
  for (long s = 1; s <= n; ++s) r = r * q_bracket_number(s, q);
  return r;
}

FieldScalar q_bracket_binomial(long n, long k, const FieldScalar& q) {
  if (k < 0 || k > n) throw BinomialRange();
  return q_bracket_factorial(n, q) / (q_bracket_factorial(k, q) * q_bracket_factorial(n - k, q));
}

}  // namespace quea
