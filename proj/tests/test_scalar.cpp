#include <doctest.h>

#include "quea/qnum.hpp"
#include "quea/scalar.hpp"

using namespace quea;

TEST_CASE("q_power examples") {
  ScalarContext c2{2};
  CHECK(q_power(c2, Rational(1)) == FieldScalar::q_pow(1));
  ScalarContext c6{6};
  CHECK(q_power(c6, parse_rational("-1/3")) == FieldScalar::q_pow(parse_rational("-1/3")));
  ScalarContext c1{1};
  CHECK(q_power(c1, Rational(0)) == FieldScalar::one());
  CHECK_THROWS_AS(q_power(c2, parse_rational("1/3")), ExponentDenominatorExceedsRoot);
}

TEST_CASE("field arithmetic canonical forms") {
  FieldScalar q = FieldScalar::q_pow(1);
  // inv(q - 1) * (q^2 - 1) = q + 1
  FieldScalar a = (q - FieldScalar::one()).inv() * (q * q - FieldScalar::one());
  CHECK(a == q + FieldScalar::one());
  FieldScalar x = q + qs(3) * q.pow(-2);
  CHECK((x + (-x)).is_zero());
  FieldScalar half = FieldScalar::q_pow(parse_rational("1/2"));
  CHECK(half * half == q);
  CHECK(q / q == FieldScalar::one());
  // associativity/commutativity spot checks
  FieldScalar y = (q - FieldScalar::one()).inv();
  FieldScalar z = q.pow(3) + FieldScalar::one();
  CHECK((x + y) + z == x + (y + z));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * y == y * x);
}

TEST_CASE("q_power group homomorphism") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      Rational ra(a, 6), rb(b, 4);
      ra.canonicalize();
      rb.canonicalize();
      CHECK(FieldScalar::q_pow(ra) * FieldScalar::q_pow(rb) == FieldScalar::q_pow(ra + rb));
    }
}

TEST_CASE("paren q-numbers") {
  FieldScalar q = FieldScalar::q_pow(1);
  CHECK(q_paren_number(3, q) == FieldScalar::one() + q + q * q);
  CHECK(q_paren_number(0, q) == FieldScalar::one());
  CHECK(q_paren_binomial(2, 1, q) == FieldScalar::one() + q);
  // specialization at q = 1 is well-defined
  CHECK(q_paren_number(4, FieldScalar::one()) == qs(4));
}

TEST_CASE("bracket q-numbers") {
  FieldScalar q = FieldScalar::q_pow(1);
  CHECK(q_bracket_number(2, q) == q.inv() + q);
  CHECK(q_bracket_binomial(5, 0, q) == FieldScalar::one());
  // (3)_{q^2} = q^2 [3]_q ... wait: (n)_{q^2} = q^{n-1} [n]_q
  CHECK(q_paren_number(3, q * q) == q.pow(2) * q_bracket_number(3, q));
}

TEST_CASE("q-number identity family n <= 8") {
  FieldScalar q = FieldScalar::q_pow(1);
  FieldScalar q2 = q * q;
  for (long n = 0; n <= 8; ++n) {
    if (n >= 1) CHECK(q_paren_number(n, q2) == q.pow(n - 1) * q_bracket_number(n, q));
    // factorial-corrected identity (the displayed right side reads [n]_q!)
    CHECK(q_paren_factorial(n, q2) == q.pow(n * (n - 1) / 2) * q_bracket_factorial(n, q));
    for (long k = 0; k <= n; ++k)
      CHECK(q_paren_binomial(n, k, q2) == q.pow(k * (n - k)) * q_bracket_binomial(n, k, q));
  }
}

TEST_CASE("rendering") {
  FieldScalar q = FieldScalar::q_pow(1);
  CHECK(FieldScalar::q_pow(parse_rational("-1/2")).str() == "q^(-1/2)");
  CHECK((q.pow(2) / (q.pow(2) - FieldScalar::one())).str() == "q^2/(q^2 - 1)");
  CHECK(qs(3, 2).str() == "3/2");
  CHECK(FieldScalar::zero().str() == "0");
}
