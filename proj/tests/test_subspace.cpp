#include <doctest.h>

#include <random>
#include <vector>

#include "calib/matrix.hpp"
#include "calib/rational.hpp"
#include "calib/subspace.hpp"

using namespace calib;

namespace {

RatMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = frac(static_cast<long>(gen() % 19) - 9, static_cast<long>(gen() % 4) + 1);
  return m;
}

}  // namespace

TEST_CASE("vector subspaces canonicalize their spanning sets") {
  RatMatrix redundant = RatMatrix::from_rows({
      {frac(1), frac(0), frac(1)},
      {frac(2), frac(0), frac(2)},
      {frac(0), frac(1), frac(0)},
  });
  VectorSubspace u = VectorSubspace::span(redundant);
  CHECK(u.dim() == 2);
  CHECK(u.ambient() == 3);
  CHECK(u.contains(Vec{frac(3), frac(-5), frac(3)}));
  CHECK_FALSE(u.contains(Vec{frac(1), frac(0), frac(0)}));

  // Scaled spanning rows give the identical canonical object.
  RatMatrix scaled = RatMatrix::from_rows({
      {frac(0), frac(-7), frac(0)},
      {frac(1, 3), frac(0), frac(1, 3)},
  });
  CHECK(u == VectorSubspace::span(scaled));
  CHECK(VectorSubspace::full(4).dim() == 4);
}

TEST_CASE("dimension formula for sums and intersections") {
  std::mt19937 gen(911);
  for (int trial = 0; trial < 10; ++trial) {
    VectorSubspace u = VectorSubspace::span(random_matrix(gen, 3, 6));
    VectorSubspace v = VectorSubspace::span(random_matrix(gen, 4, 6));
    VectorSubspace sum = u.sum(v);
    VectorSubspace cap = u.intersect(v);
    CHECK(u.dim() + v.dim() == sum.dim() + cap.dim());
    CHECK(sum.contains(u));
    CHECK(sum.contains(v));
    CHECK(u.contains(cap));
    CHECK(v.contains(cap));
  }

  // Two distinct planes in R^3 meet in a line.
  VectorSubspace p1 = VectorSubspace::span(RatMatrix::from_rows({
      {frac(1), frac(0), frac(0)},
      {frac(0), frac(1), frac(0)},
  }));
  VectorSubspace p2 = VectorSubspace::span(RatMatrix::from_rows({
      {frac(0), frac(1), frac(0)},
      {frac(0), frac(0), frac(1)},
  }));
  VectorSubspace line = p1.intersect(p2);
  CHECK(line.dim() == 1);
  CHECK(line.contains(Vec{frac(0), frac(1), frac(0)}));
}

TEST_CASE("matrix subspaces flatten consistently") {
  std::mt19937 gen(1009);
  RatMatrix a = random_matrix(gen, 3, 3);
  CHECK(unflatten(3, flatten(a)) == a);

  MatrixSubspace s = MatrixSubspace::span(3, {a, Rational(2) * a, random_matrix(gen, 3, 3)});
  CHECK(s.dim() == 2);
  CHECK(s.matrix_size() == 3);
  CHECK(s.contains(Rational(-5) * a));
  std::vector<RatMatrix> basis = s.basis_matrices();
  CHECK(basis.size() == 2);
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i] == s.basis_matrix(i));
  CHECK(MatrixSubspace::from_flat(3, s.flat()) == s);
}

TEST_CASE("conjugation preserves dimension and is inverted by the inverse") {
  std::mt19937 gen(1103);
  MatrixSubspace s = MatrixSubspace::span(
      3, {random_matrix(gen, 3, 3), random_matrix(gen, 3, 3)});
  RatMatrix g = random_matrix(gen, 3, 3);
  while (det(g) == Rational(0)) g = random_matrix(gen, 3, 3);

  MatrixSubspace t = s.conjugate(g);
  CHECK(t.dim() == s.dim());
  CHECK(t.conjugate(inverse(g)) == s);
  CHECK(s.conjugate(RatMatrix::identity(3)) == s);
}

TEST_CASE("bracket stability detects Lie subalgebras") {
  // so(3): antisymmetric 3x3 matrices, closed under bracket.
  auto elem = [](std::size_t i, std::size_t j) {
    RatMatrix m(3, 3);
    m.at(i, j) = 1;
    m.at(j, i) = -1;
    return m;
  };
  MatrixSubspace so3 = MatrixSubspace::span(3, {elem(0, 1), elem(0, 2), elem(1, 2)});
  CHECK(so3.dim() == 3);
  for (const RatMatrix& b : so3.basis_matrices()) CHECK(so3.bracket_stable_under(b));

  // Strictly upper triangular matrices are not stable under a rotation generator.
  RatMatrix e01(3, 3);
  e01.at(0, 1) = 1;
  MatrixSubspace line = MatrixSubspace::span(3, {e01});
  CHECK_FALSE(line.bracket_stable_under(elem(0, 1)));
}
