#ifndef CALIB_INTEGRAL_HPP
#define CALIB_INTEGRAL_HPP

#include <map>
#include <tuple>
#include <vector>

#include "calib/forms.hpp"
#include "calib/subspace.hpp"

namespace calib {

// A transverse n-plane in the thickened model is cut out by coefficients
// p^j_{kl}; only the skew parts q^j_{kl} = p^j_{[kl]}, k < l, enter the
// first-order conditions. Variables are ordered j asc, then (k,l) lex.
struct ParamVarTable {
  int n = 0;

  int pairs() const { return n * (n - 1) / 2; }
  int count() const { return n * pairs(); }
  int pair_index(int k, int l) const;              // k < l
  int index(int j, int k, int l) const;            // k < l
  std::tuple<int, int, int> var(int idx) const;    // (j, k, l)
};

// Linear expression in the q-variables.
struct LinExpr {
  std::map<int, Rational> coeff;

  void add(int var, const Rational& r);
  bool empty() const { return coeff.empty(); }
  bool operator==(const LinExpr&) const = default;
};

// Homogeneous form whose coefficients are linear in the q-variables.
class ParamForm {
 public:
  ParamForm() = default;
  ParamForm(int n, int grade) : n_(n), grade_(grade) {}

  int dim() const { return n_; }
  int grade() const { return grade_; }
  const std::map<IndexMask, LinExpr>& terms() const { return terms_; }
  LinExpr coeff(IndexMask m) const;
  void add(IndexMask m, int var, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const ParamForm&) const = default;

 private:
  int n_ = 0, grade_ = 0;
  std::map<IndexMask, LinExpr> terms_;
};

// d eta^j expressed on a transverse plane: sum_{k<l} 2 q^j_{kl} eta^k ^ eta^l.
ParamForm structure_expansion(int n, int j);

// Leibniz expansion of d(a-hat) with every d eta^j replaced by its
// structure_expansion; the integral-element condition is that this vanishes.
ParamForm d_hat(const AlternatingForm& a);

// Evaluate a ParamForm at concrete q-values (indexed per ParamVarTable).
AlternatingForm substitute(const ParamForm& f, const std::vector<Rational>& q);

// The stacked linear system d(a-hat) = 0 over all generators. Row order is
// generator order, then increasing basis-mask order; each row remembers where
// it came from.
struct ConstraintRow {
  int generator = 0;
  IndexMask mask = 0;
};

struct ConstraintSystem {
  int n = 0;
  ParamVarTable vars;
  RatMatrix matrix;
  std::vector<ConstraintRow> rows;
  std::vector<int> generator_rank_increments;  // rank gained by each generator block
  int total_rank = 0;
};

ConstraintSystem ideal_constraint_system(const std::vector<AlternatingForm>& generators, int n);

// The ideal is strongly admissible for g when the number of independent
// first-order conditions equals dim h0(g) from the torsion computation.
struct AdmissibilityCertificate {
  int constraint_rank = 0;
  int h0_dim = 0;
  bool pass = false;
};

AdmissibilityCertificate strong_admissibility_check(const ConstraintSystem& sys, int h0_dim);

// Can the listed variables take arbitrary values on the solution variety?
// Holds iff deleting their columns does not drop the rank.
bool coordinate_freedom(const ConstraintSystem& sys, const std::vector<int>& variables);

// Polar space of the span of e_1..e_q under a vector-valued form:
// { v : f_j(v, e_1, ..., e_q) = 0 for all j }. The e's must be independent.
VectorSubspace polar_space(const VectorValuedForm& f, const std::vector<Vec>& e);

}  // namespace calib

#endif
