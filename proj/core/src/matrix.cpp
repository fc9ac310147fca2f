#include "calib/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace calib {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void RatMatrix::append_row(const Vec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void RatMatrix::append_rows(const RatMatrix& other) {
  for (std::size_t i = 0; i < other.rows(); ++i) append_row(other.row(i));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::columns(const std::vector<std::size_t>& keep) const {
  RatMatrix m(rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) m.at(i, j) = at(i, keep[j]);
  return m;
}

RatMatrix RatMatrix::without_columns(const std::vector<std::size_t>& drop) const {
  std::vector<bool> dropped(cols_, false);
  for (std::size_t c : drop) {
    if (c >= cols_) throw std::invalid_argument("without_columns: column out of range");
    dropped[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!dropped[c]) keep.push_back(c);
  return columns(keep);
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("operator*: shape mismatch");
  RatMatrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
    }
  return m;
}

Vec RatMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("operator*: vector length mismatch");
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("operator-: shape mismatch");
  RatMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= rhs.data_[i];
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("operator+: shape mismatch");
  RatMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += rhs.data_[i];
  return m;
}

RatMatrix operator*(const Rational& c, RatMatrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

namespace {

// Clear denominators row by row; rank is unchanged.
std::vector<mpz_class> integerize(const RatMatrix& m) {
  std::vector<mpz_class> z(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class q = m.at(i, j) * l;
      z[i * m.cols() + j] = q.get_num();  // q is integral by construction
    }
  }
  return z;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a = integerize(m);
  auto e = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Partial pivoting: largest |entry| keeps the fraction-free products small.
    std::size_t piv = r;
    for (std::size_t i = r; i < rows; ++i) {
      mpz_class ai = abs(e(i, c)), ap = abs(e(piv, c));
      if (cmp(ai, ap) > 0) piv = i;
    }
    if (e(piv, c) == 0) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(e(piv, j), e(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = e(r, c) * e(i, j) - e(i, c) * e(r, j);
        mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      e(i, c) = 0;
    }
    prev = e(r, c);
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix row_space(const RatMatrix& m) {
  RatMatrix w = m;
  std::vector<std::size_t> pivots = rref(w);
  RatMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = w.at(i, j);
  return out;
}

RatMatrix kernel(const RatMatrix& m) {
  RatMatrix w = m;
  std::vector<std::size_t> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  RatMatrix out(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(i, f);
    out.append_row(v);
  }
  return out;
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  RatMatrix w = m;
  Rational d = 1;
  const std::size_t n = w.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && w.at(piv, c) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    Rational inv = 1 / w.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w.at(i, c) == 0) continue;
      Rational f = w.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return d;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw std::invalid_argument("inverse: singular matrix");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

bool solve(const RatMatrix& m, const Vec& b, Vec& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;  // row (0...0 | 1)
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return true;
}

}  // namespace calib
