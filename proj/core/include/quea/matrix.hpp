#pragma once

#include <optional>
#include <vector>

#include "quea/rational.hpp"

namespace quea {

struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : MatrixError {
  DimensionMismatch() : MatrixError("dimension mismatch") {}
};

// Dense rational matrix, row-major.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols, Rational(0)) {}
  static RatMat identity(int n);
  static RatMat from_rows(const std::vector<VecQ>& rows);
  static RatMat diag(const VecQ& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return d_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return d_[size_t(i) * cols_ + j]; }

  VecQ row(int i) const;
  VecQ col(int j) const;

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scale(const Rational& c) const;
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }
  bool operator!=(const RatMat& o) const { return !(*this == o); }
  bool is_zero() const;

  VecQ apply(const VecQ& v) const;  // column action

  Rational det() const;
  std::optional<RatMat> inverse() const;

  // Positive-definiteness of a symmetric matrix by leading principal minors.
  bool positive_definite() const;

  // lcm of entry denominators.
  long denominator() const;

 private:
  int rows_, cols_;
  std::vector<Rational> d_;
};

// Solve xA = b for a row vector x (i.e. express b in the row span of A).
// A has full row rank r <= cols; returns coordinates over the rows of A,
// or nullopt when b is outside the row span.
std::optional<VecQ> solve_row_combination(const RatMat& A, const VecQ& b);

// Integer matrices for lattice arithmetic.
using IntMat = std::vector<std::vector<Integer>>;

// Row-style Hermite normal form (nonzero rows, positive pivots, entries
// above each pivot reduced); returns the canonical basis of the row span.
IntMat hnf(IntMat m);

// Reduce v modulo the row span of an HNF basis (canonical coset representative).
std::vector<Integer> hnf_reduce(const IntMat& h, std::vector<Integer> v);

}  // namespace quea
