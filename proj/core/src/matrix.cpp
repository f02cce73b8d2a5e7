#include "quea/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace quea {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<VecQ>& rows) {
  if (rows.empty()) return RatMat();
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size()) throw DimensionMismatch();
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::diag(const VecQ& d) {
  RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
  return m;
}

VecQ RatMat::row(int i) const {
  VecQ r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

VecQ RatMat::col(int j) const {
  VecQ r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch();
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  RatMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const { return *this + o.scale(Rational(-1)); }

RatMat RatMat::scale(const Rational& c) const {
  RatMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) *= c;
  return r;
}

bool RatMat::is_zero() const {
  for (auto& x : d_)
    if (x != 0) return false;
  return true;
}

VecQ RatMat::apply(const VecQ& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch();
  VecQ r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Rational RatMat::det() const {
  if (rows_ != cols_) throw DimensionMismatch();
  RatMat m = *this;
  Rational d(1);
  int n = rows_;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = 1 / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<RatMat> RatMat::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch();
  int n = rows_;
  RatMat m = *this;
  RatMat inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rational f = 1 / m.at(c, c);
    for (int j = 0; j < n; ++j) {
      m.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      Rational g = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= g * m.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool RatMat::positive_definite() const {
  if (rows_ != cols_) throw DimensionMismatch();
  for (int k = 1; k <= rows_; ++k) {
    RatMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
    if (sub.det() <= 0) return false;
  }
  return true;
}

long RatMat::denominator() const {
  long n = 1;
  for (auto& x : d_) n = std::lcm(n, static_cast<long>(x.get_den().get_si()));
  return n;
}

std::optional<VecQ> solve_row_combination(const RatMat& A, const VecQ& b) {
  // Gaussian elimination on A^T | b^T: find x with x A = b.
  int r = A.rows(), c = A.cols();
  if (static_cast<int>(b.size()) != c) throw DimensionMismatch();
  // Build augmented system: columns of A^T are the unknown coefficients.
  RatMat m(c, r + 1);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < r; ++j) m.at(i, j) = A.at(j, i);
    m.at(i, r) = b[i];
  }
  std::vector<int> pivot_col(c, -1);
  int rank = 0;
  for (int col = 0; col < r && rank < c; ++col) {
    int p = -1;
    for (int row = rank; row < c; ++row)
      if (m.at(row, col) != 0) {
        p = row;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j <= r; ++j) std::swap(m.at(p, j), m.at(rank, j));
    Rational f = 1 / m.at(rank, col);
    for (int j = 0; j <= r; ++j) m.at(rank, j) *= f;
    for (int row = 0; row < c; ++row) {
      if (row == rank || m.at(row, col) == 0) continue;
      Rational g = m.at(row, col);
      for (int j = 0; j <= r; ++j) m.at(row, j) -= g * m.at(rank, j);
    }
    pivot_col[rank] = col;
    ++rank;
  }
  // Inconsistent rows: 0 ... 0 | nonzero
  for (int row = rank; row < c; ++row)
    if (m.at(row, r) != 0) return std::nullopt;
  VecQ x(r, Rational(0));
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = m.at(i, r);
  return x;
}

IntMat hnf(IntMat m) {
  if (m.empty()) return m;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Find a pivot and clear the column below by gcd steps.
    while (true) {
      size_t p = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (p == rows || cmp(abs(m[i][c]), abs(m[p][c])) < 0)) p = i;
      if (p == rows) break;
      std::swap(m[r], m[p]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Integer f = m[i][c] / m[r][c];
        for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    // Reduce entries above the pivot.
    for (size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (f != 0)
        for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<Integer> hnf_reduce(const IntMat& h, std::vector<Integer> v) {
  for (auto& row : h) {
    size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), v[pc].get_mpz_t(), row[pc].get_mpz_t());
    if (f != 0)
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

}  // namespace quea
