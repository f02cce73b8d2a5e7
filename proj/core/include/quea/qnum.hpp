#pragma once

#include "quea/scalar.hpp"

namespace quea {

struct BinomialRange : ScalarError {
  BinomialRange() : ScalarError("binomial index out of range") {}
};

// (n)_q = 1 + q + ... + q^{n-1}, with (0)_q = 1 by convention of the
// factorial product; the sum itself is 0 for n = 0 and the factorial
// uses (0)_q := 1.
FieldScalar q_paren_number(long n, const FieldScalar& q);
FieldScalar q_paren_factorial(long n, const FieldScalar& q);
FieldScalar q_paren_binomial(long n, long k, const FieldScalar& q);

// [n]_q = (q^n - q^{-n})/(q - q^{-1}) = sum_{s=0}^{n-1} q^{2s-n+1}
FieldScalar q_bracket_number(long n, const FieldScalar& q);
FieldScalar q_bracket_factorial(long n, const FieldScalar& q);
FieldScalar q_bracket_binomial(long n, long k, const FieldScalar& q);

}  // namespace quea
