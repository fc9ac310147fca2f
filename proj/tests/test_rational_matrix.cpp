#include <doctest.h>

#include <random>

#include "calib/matrix.hpp"
#include "calib/rational.hpp"

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

TEST_CASE("frac canonicalizes fractions") {
  CHECK(frac(3, -6) == frac(-1, 2));
  CHECK(frac(0, 5) == Rational(0));
  CHECK(to_string(frac(10, 4)) == "5/2");
  CHECK(parse_rational("-6/8") == frac(-3, 4));
}

TEST_CASE("matrix arithmetic basics") {
  RatMatrix a = RatMatrix::from_rows({{frac(1), frac(2)}, {frac(3), frac(4)}});
  RatMatrix b = RatMatrix::from_rows({{frac(0), frac(1)}, {frac(1), frac(0)}});

  CHECK(a * RatMatrix::identity(2) == a);
  CHECK(RatMatrix::identity(2) * a == a);
  CHECK((a - a).is_zero());
  CHECK(a + a == Rational(2) * a);
  CHECK((a * b).at(0, 0) == frac(2));
  CHECK(a.transpose().transpose() == a);

  Vec v = {frac(1), frac(-1)};
  Vec av = a * v;
  CHECK(av == Vec{frac(-1), frac(-1)});
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  std::mt19937 gen(11);
  RatMatrix x = random_matrix(gen, 4, 4);
  RatMatrix y = random_matrix(gen, 4, 4);
  RatMatrix z = random_matrix(gen, 4, 4);

  CHECK(commutator(x, y) == Rational(-1) * commutator(y, x));
  CHECK(commutator(x, x).is_zero());
  CHECK(commutator(x + y, z) == commutator(x, z) + commutator(y, z));
  // Jacobi identity.
  RatMatrix jac = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                  commutator(z, commutator(x, y));
  CHECK(jac.is_zero());
}

TEST_CASE("rank agrees with rref pivot count and is transpose-invariant") {
  std::mt19937 gen(23);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m = random_matrix(gen, 5, 7);
    RatMatrix copy = m;
    std::vector<std::size_t> pivots = rref(copy);
    CHECK(rank(m) == pivots.size());
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank detects engineered dependencies") {
  RatMatrix m = RatMatrix::from_rows({
      {frac(1), frac(2), frac(3)},
      {frac(2), frac(4), frac(6)},
      {frac(1), frac(0), frac(1)},
  });
  CHECK(rank(m) == 2);

  // Vandermonde matrix at distinct nodes is invertible.
  RatMatrix v(4, 4);
  for (long i = 0; i < 4; ++i) {
    Rational node = frac(i - 1, 2);
    Rational p(1);
    for (long j = 0; j < 4; ++j) {
      v.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p;
      p = Rational(p * node);
    }
  }
  CHECK(rank(v) == 4);
  CHECK(det(v) != Rational(0));
}

TEST_CASE("rref is idempotent and row_space is canonical") {
  std::mt19937 gen(37);
  RatMatrix m = random_matrix(gen, 4, 6);
  RatMatrix r = m;
  rref(r);
  RatMatrix rr = r;
  rref(rr);
  CHECK(r == rr);

  // Row-equivalent matrices share the canonical row space.
  RatMatrix g = random_matrix(gen, 4, 4);
  while (det(g) == Rational(0)) g = random_matrix(gen, 4, 4);
  CHECK(row_space(g * m) == row_space(m));
  CHECK(rank(row_space(m)) == rank(m));
}

TEST_CASE("kernel rows annihilate the matrix and have complementary dimension") {
  std::mt19937 gen(41);
  for (int trial = 0; trial < 8; ++trial) {
    RatMatrix m = random_matrix(gen, 3, 6);
    RatMatrix k = kernel(m);
    CHECK(k.rows() + rank(m) == m.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Vec x = k.row(i);
      Vec mx = m * x;
      for (const Rational& c : mx) CHECK(c == Rational(0));
    }
    CHECK(rank(k) == k.rows());
  }
  CHECK(kernel(RatMatrix::identity(5)).rows() == 0);
}

TEST_CASE("determinant and inverse are exact") {
  RatMatrix m = RatMatrix::from_rows({
      {frac(2), frac(1), frac(0)},
      {frac(1), frac(-1), frac(3)},
      {frac(0), frac(5, 2), frac(1)},
  });
  CHECK(det(m) == frac(-18));
  CHECK(m * inverse(m) == RatMatrix::identity(3));
  CHECK(inverse(m) * m == RatMatrix::identity(3));
  CHECK(det(RatMatrix::identity(4)) == Rational(1));

  std::mt19937 gen(53);
  RatMatrix a = random_matrix(gen, 4, 4);
  RatMatrix b = random_matrix(gen, 4, 4);
  CHECK(det(a * b) == Rational(det(a) * det(b)));
  CHECK(det(a.transpose()) == det(a));
}

TEST_CASE("solve finds solutions exactly when consistent") {
  RatMatrix m = RatMatrix::from_rows({
      {frac(1), frac(2), frac(3)},
      {frac(2), frac(4), frac(6)},
  });
  Vec x;
  CHECK(solve(m, Vec{frac(1), frac(2)}, x));
  Vec mx = m * x;
  CHECK(mx == Vec{frac(1), frac(2)});
  CHECK_FALSE(solve(m, Vec{frac(1), frac(3)}, x));

  std::mt19937 gen(61);
  RatMatrix a = random_matrix(gen, 5, 5);
  while (det(a) == Rational(0)) a = random_matrix(gen, 5, 5);
  Vec b = {frac(1), frac(0), frac(-2), frac(7, 3), frac(4)};
  CHECK(solve(a, b, x));
  CHECK(a * x == b);
}

TEST_CASE("column selection helpers") {
  RatMatrix m = RatMatrix::from_rows({
      {frac(1), frac(2), frac(3), frac(4)},
      {frac(5), frac(6), frac(7), frac(8)},
  });
  RatMatrix keep = m.columns({0, 2});
  CHECK(keep.cols() == 2);
  CHECK(keep.at(1, 1) == frac(7));
  RatMatrix drop = m.without_columns({1, 3});
  CHECK(drop == keep);
}
