#include "calib/subspace.hpp"

#include <stdexcept>

namespace calib {

VectorSubspace VectorSubspace::span(const RatMatrix& rows) {
  VectorSubspace s(rows.cols());
  s.basis_ = row_space(rows);
  return s;
}

VectorSubspace VectorSubspace::full(std::size_t ambient) {
  VectorSubspace s(ambient);
  s.basis_ = RatMatrix::identity(ambient);
  return s;
}

bool VectorSubspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("VectorSubspace::contains: length mismatch");
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_ || r[p] == 0) continue;
    Rational f = r[p];
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  for (const Rational& q : r)
    if (q != 0) return false;
  return true;
}

bool VectorSubspace::contains(const VectorSubspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

VectorSubspace VectorSubspace::intersect(const VectorSubspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  // Solve a^T alpha = b^T beta: kernel of [A^T | -B^T] gives the coefficients.
  const std::size_t p = dim(), q = other.dim();
  if (p == 0 || q == 0) return VectorSubspace(ambient_);
  RatMatrix sys(ambient_, p + q);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < p; ++i) sys.at(r, i) = basis_.at(i, r);
    for (std::size_t j = 0; j < q; ++j) sys.at(r, p + j) = -other.basis_.at(j, r);
  }
  RatMatrix coeffs = kernel(sys);
  RatMatrix vectors(coeffs.rows(), ambient_);
  for (std::size_t k = 0; k < coeffs.rows(); ++k)
    for (std::size_t i = 0; i < p; ++i) {
      if (coeffs.at(k, i) == 0) continue;
      for (std::size_t r = 0; r < ambient_; ++r) vectors.at(k, r) += coeffs.at(k, i) * basis_.at(i, r);
    }
  return span(vectors);
}

VectorSubspace VectorSubspace::sum(const VectorSubspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("sum: ambient mismatch");
  RatMatrix stacked = basis_;
  stacked.append_rows(other.basis_);
  if (stacked.rows() == 0) return VectorSubspace(ambient_);
  return span(stacked);
}

Vec flatten(const RatMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

RatMatrix unflatten(std::size_t n, const Vec& v) {
  if (v.size() != n * n) throw std::invalid_argument("unflatten: length mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

MatrixSubspace MatrixSubspace::span(std::size_t n, const std::vector<RatMatrix>& mats) {
  RatMatrix rows(0, n * n);
  for (const RatMatrix& m : mats) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("MatrixSubspace::span: size mismatch");
    rows.append_row(flatten(m));
  }
  MatrixSubspace s(n);
  s.flat_ = rows.rows() == 0 ? VectorSubspace(n * n) : VectorSubspace::span(rows);
  return s;
}

MatrixSubspace MatrixSubspace::from_flat(std::size_t n, const VectorSubspace& flat) {
  if (flat.ambient() != n * n) throw std::invalid_argument("from_flat: ambient mismatch");
  MatrixSubspace s(n);
  s.flat_ = flat;
  return s;
}

RatMatrix MatrixSubspace::basis_matrix(std::size_t i) const { return unflatten(n_, flat_.basis().row(i)); }

std::vector<RatMatrix> MatrixSubspace::basis_matrices() const {
  std::vector<RatMatrix> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_matrix(i));
  return out;
}

bool MatrixSubspace::contains(const RatMatrix& m) const { return flat_.contains(flatten(m)); }

bool MatrixSubspace::contains(const MatrixSubspace& other) const { return flat_.contains(other.flat_); }

MatrixSubspace MatrixSubspace::intersect(const MatrixSubspace& other) const {
  return from_flat(n_, flat_.intersect(other.flat_));
}

MatrixSubspace MatrixSubspace::sum(const MatrixSubspace& other) const {
  return from_flat(n_, flat_.sum(other.flat_));
}

MatrixSubspace MatrixSubspace::conjugate(const RatMatrix& g) const {
  RatMatrix ginv = inverse(g);
  std::vector<RatMatrix> mats;
  mats.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) mats.push_back(g * basis_matrix(i) * ginv);
  return span(n_, mats);
}

bool MatrixSubspace::bracket_stable_under(const RatMatrix& a) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(commutator(a, basis_matrix(i)))) return false;
  return true;
}

}  // namespace calib
