#ifndef CALIB_FORMS_HPP
#define CALIB_FORMS_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "calib/matrix.hpp"
#include "calib/rational.hpp"

namespace calib {

// A basis p-form dx^{i_1} ^ ... ^ dx^{i_p}, i_1 < ... < i_p, is keyed by the
// bitmask of its (0-based) coordinate indices. Dimensions up to 9 suffice here.
using IndexMask = std::uint32_t;

constexpr int kMaxDim = 9;

int mask_grade(IndexMask m);
std::vector<int> mask_indices(IndexMask m);
IndexMask mask_of(const std::vector<int>& indices);  // requires strictly increasing

// Sign of dx^A ^ dx^B relative to the sorted merge; 0 if A and B overlap.
int wedge_sign(IndexMask a, IndexMask b);

// All grade-p masks over {0..n-1}, in increasing numeric (hence deterministic) order.
std::vector<IndexMask> all_masks(int n, int grade);

// Homogeneous alternating form with sparse exact-rational coefficients.
// Zero coefficients are never stored, so operator== is structural equality.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  AlternatingForm(int n, int grade);

  int dim() const { return n_; }
  int grade() const { return grade_; }
  const std::map<IndexMask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(IndexMask m) const;
  void set_coeff(IndexMask m, const Rational& c);
  void add_coeff(IndexMask m, const Rational& c);

  AlternatingForm& operator+=(const AlternatingForm& rhs);
  AlternatingForm& operator-=(const AlternatingForm& rhs);
  AlternatingForm& operator*=(const Rational& c);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator*(const Rational& c, AlternatingForm a) { return a *= c; }
  friend AlternatingForm operator-(AlternatingForm a) { return a *= Rational(-1); }
  bool operator==(const AlternatingForm&) const = default;

  std::string to_string() const;

 private:
  void check_mask(IndexMask m) const;

  int n_ = 0;
  int grade_ = 0;
  std::map<IndexMask, Rational> terms_;
};

// dx^{indices} with coefficient `c`; indices strictly increasing, 0-based.
AlternatingForm basis_form(int n, const std::vector<int>& indices, const Rational& c = Rational(1));

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b);

// v interior a (left contraction in the first slot). Grade must be >= 1.
AlternatingForm interior(const Vec& v, const AlternatingForm& a);

// Hodge star for the standard inner product and the orientation given by the
// increasing coordinate volume form dx^0 ^ ... ^ dx^{n-1}.
AlternatingForm hodge(const AlternatingForm& a);

// a(v_1, ..., v_p); the number of vectors must equal the grade.
Rational evaluate(const AlternatingForm& a, const std::vector<Vec>& vectors);

// Gram determinant det(<v_i, v_j>) = squared volume of the parallelepiped.
Rational gram_norm_sq(const std::vector<Vec>& vectors);

// Infinitesimal gl(n) action: the derivation sending dx^i to sum_j x^i_j dx^j.
AlternatingForm gl_act(const RatMatrix& x, const AlternatingForm& a);

// Pullback by g: the algebra morphism sending dx^i to sum_j g^i_j dx^j.
AlternatingForm pullback(const RatMatrix& g, const AlternatingForm& a);

// Restriction to the span of the first k coordinate vectors: terms with any
// index >= k are dropped (the form is kept in ambient dimension n).
AlternatingForm restrict_form(const AlternatingForm& a, int k);

// Reindex a form on R^m into R^{n_new} along i -> i + offset.
AlternatingForm shift_embed(const AlternatingForm& a, int offset, int n_new);

// A form with values in R^m, one homogeneous component per value coordinate.
struct VectorValuedForm {
  std::vector<AlternatingForm> comps;

  int values() const { return static_cast<int>(comps.size()); }
  bool operator==(const VectorValuedForm&) const = default;
};

}  // namespace calib

#endif
