#ifndef CALIB_SUBSPACE_HPP
#define CALIB_SUBSPACE_HPP

#include <vector>

#include "calib/matrix.hpp"

namespace calib {

// Linear subspace of R^m held by its canonical basis: the nonzero rows of the
// reduced row echelon form. Equal subspaces compare equal structurally.
class VectorSubspace {
 public:
  VectorSubspace() = default;
  explicit VectorSubspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static VectorSubspace span(const RatMatrix& rows);
  static VectorSubspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const VectorSubspace& other) const;
  VectorSubspace intersect(const VectorSubspace& other) const;
  VectorSubspace sum(const VectorSubspace& other) const;

  bool operator==(const VectorSubspace&) const = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
};

// Subspace of n x n matrices, canonicalized through row-major flattening.
class MatrixSubspace {
 public:
  MatrixSubspace() = default;
  explicit MatrixSubspace(std::size_t n) : n_(n), flat_(n * n) {}

  static MatrixSubspace span(std::size_t n, const std::vector<RatMatrix>& mats);
  static MatrixSubspace from_flat(std::size_t n, const VectorSubspace& flat);

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return flat_.dim(); }
  const VectorSubspace& flat() const { return flat_; }
  RatMatrix basis_matrix(std::size_t i) const;  // i-th canonical basis element
  std::vector<RatMatrix> basis_matrices() const;

  bool contains(const RatMatrix& m) const;
  bool contains(const MatrixSubspace& other) const;
  MatrixSubspace intersect(const MatrixSubspace& other) const;
  MatrixSubspace sum(const MatrixSubspace& other) const;

  // { g m g^{-1} : m in this }.
  MatrixSubspace conjugate(const RatMatrix& g) const;

  // True if [a, w] lies in this for every basis element w.
  bool bracket_stable_under(const RatMatrix& a) const;

  bool operator==(const MatrixSubspace&) const = default;

 private:
  std::size_t n_ = 0;
  VectorSubspace flat_;
};

Vec flatten(const RatMatrix& m);
RatMatrix unflatten(std::size_t n, const Vec& v);

}  // namespace calib

#endif
