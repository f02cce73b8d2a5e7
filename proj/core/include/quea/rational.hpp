#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace quea {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a/b", "a", or "-a/b".  Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline long denominator_of(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return static_cast<long>(c.get_den().get_si());
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

using VecQ = std::vector<Rational>;

inline VecQ vq_zero(int n) { return VecQ(static_cast<size_t>(n), Rational(0)); }

inline bool vq_is_zero(const VecQ& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

inline VecQ vq_add(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecQ vq_sub(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecQ vq_neg(const VecQ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline VecQ vq_scale(const Rational& c, const VecQ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline VecQ vq_concat(const VecQ& a, const VecQ& b) {
  VecQ r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace quea
