#ifndef CALIB_STABILIZER_HPP
#define CALIB_STABILIZER_HPP

#include <optional>
#include <vector>

#include "calib/forms.hpp"
#include "calib/subspace.hpp"

namespace calib {

// { x in gl(n) : gl_act(x, a) = 0 for every listed form }, by one exact
// linear solve over the n^2 elementary-matrix coordinates.
MatrixSubspace stabilizer(const std::vector<AlternatingForm>& forms, int n);

// Group-level membership: pullback(g, a) == a for every listed form.
bool stabilizes(const RatMatrix& g, const std::vector<AlternatingForm>& forms);

// Skew-symmetric matrices so(n) and handy ambient spaces.
MatrixSubspace so_subspace(int n);
MatrixSubspace gl_subspace(int n);

// Embed a subspace of gl(k) into gl(n) as the trailing diagonal block.
MatrixSubspace embed_trailing_block(const MatrixSubspace& s, int n);

// First Spencer cohomology data of g subset gl(n) in degree one: the
// skew-symmetrization delta : g tensor (R^n)* -> R^n tensor Lambda^2 (R^n)*,
// its kernel (the prolongation g^(1)), image, and cokernel dimension h0.
struct TorsionReport {
  int n = 0;
  int dim_g = 0;
  int dim_prolongation = 0;  // dim ker delta
  int dim_image = 0;         // rank delta
  int dim_h0 = 0;            // n * C(n,2) - rank delta
};

TorsionReport torsion_report(const MatrixSubspace& g);

// For g subset so(n): h0 must equal (dim so(n) - dim g) * n, because delta is
// injective on any complement of g in so(n) and so(n)^(1) = 0.
struct QuotientDimCheck {
  int n = 0;
  int dim_so = 0;
  int dim_g = 0;
  int expected_h0 = 0;
  int computed_h0 = 0;
  bool pass = false;
};

QuotientDimCheck subgroup_quotient_dim_check(const MatrixSubspace& g);

// Solve gl_act(x, F_j) = sum_k t^j_k F_k for the matrix t; nullopt when the
// action does not preserve the span of the components. When the components
// are linearly independent the solution is unique.
std::optional<RatMatrix> intertwiner(const RatMatrix& x, const VectorValuedForm& f);

// True if the components of f are linearly independent as forms.
bool independent_components(const VectorValuedForm& f);

}  // namespace calib

#endif
