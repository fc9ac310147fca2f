#ifndef CALIB_MATRIX_HPP
#define CALIB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "calib/rational.hpp"

namespace calib {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void append_row(const Vec& r);
  void append_rows(const RatMatrix& other);
  RatMatrix transpose() const;
  RatMatrix columns(const std::vector<std::size_t>& keep) const;
  RatMatrix without_columns(const std::vector<std::size_t>& drop) const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  Vec operator*(const Vec& v) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  bool operator==(const RatMatrix&) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

// Rank by fraction-free Bareiss elimination with partial (max-|entry|)
// pivoting, after clearing denominators row by row.
std::size_t rank(const RatMatrix& m);

// In-place reduced row echelon form (rational Gauss-Jordan, first-nonzero
// pivoting). Returns pivot column indices; zero rows sink to the bottom.
std::vector<std::size_t> rref(RatMatrix& m);

// Nonzero RREF rows: the canonical basis of the row space.
RatMatrix row_space(const RatMatrix& m);

// Canonical basis of { x : m x = 0 }, one row per free column, ordered by
// free-column index.
RatMatrix kernel(const RatMatrix& m);

Rational det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

// One solution of m x = b; false if inconsistent.
bool solve(const RatMatrix& m, const Vec& b, Vec& x);

}  // namespace calib

#endif
