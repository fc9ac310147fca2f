#ifndef CALIB_CATALOG_HPP
#define CALIB_CATALOG_HPP

#include <array>
#include <random>

#include "calib/forms.hpp"

namespace calib {

// The fixed flat-model forms everything else is checked against.
//
//  - phi:       associative 3-form on R^7
//  - star_phi:  coassociative 4-form, equal to hodge(phi)
//  - chi:       R^7-valued 3-form with chi_j = -(e_j interior star_phi)
//  - psi:       Cayley 4-form on R^8, equal to dx^0 ^ phi + star_phi
//  - tau:       R^7-valued 4-form on R^8 cutting out the Cayley 4-planes;
//               tau_j = dx^0 ^ chi_j + star(chi_j), and the components agree
//               with the imaginary part of the octonion fourfold cross product
//  - su3_*:     the SU(3) model forms on R^7 = C^3 + R
//  - sd_triple: orthonormal self-dual 2-form basis on R^4
//
// build_catalog() cross-checks each transcribed table against its defining
// construction and throws std::logic_error on any mismatch, so a successfully
// constructed catalog is internally consistent.
struct CalibrationCatalog {
  AlternatingForm phi;
  AlternatingForm star_phi;
  VectorValuedForm chi;
  AlternatingForm psi;
  VectorValuedForm tau;

  AlternatingForm su3_alpha;       // dx^7 in 1-based labels
  AlternatingForm su3_omega;
  AlternatingForm su3_upsilon_re;
  AlternatingForm su3_upsilon_im;

  std::array<AlternatingForm, 3> sd_triple;
};

const CalibrationCatalog& catalog();  // built once, cached
CalibrationCatalog build_catalog();

// Two-fold cross product on R^7: <cross2(u,v), w> = phi(u,v,w).
Vec cross2(const Vec& u, const Vec& v);

// Triple cross product on R^8: <triple_cross(u,v,w), z> = psi(u,v,w,z).
Vec triple_cross(const Vec& u, const Vec& v, const Vec& w);

// Octonion structure on R^8 determined by phi: e_0 is the unit and the
// imaginary units multiply by e_i e_j = -delta_ij e_0 + sum_k phi(i,j,k) e_k.
// The result is a composition algebra: |ab|^2 = |a|^2 |b|^2 exactly.
Vec octonion_product(const Vec& a, const Vec& b);
Vec octonion_conjugate(Vec a);

// Imaginary part of the fourfold cross product of x,y,z,w in R^8; its seven
// components coincide with tau evaluated on the same arguments.
Vec fourfold_cross_imaginary(const Vec& x, const Vec& y, const Vec& z, const Vec& w);

// phi(u,v,w)^2 + |chi(u,v,w)|^2 - |u ^ v ^ w|^2; identically zero on R^7.
Rational assoc_residual(const Vec& u, const Vec& v, const Vec& w);

// psi(u,v,w,z)^2 + sum_j tau_j(u,v,w,z)^2 - |u ^ v ^ w ^ z|^2; identically zero on R^8.
Rational cayley_residual(const Vec& u, const Vec& v, const Vec& w, const Vec& z);

// Assemble the Cayley 4-form on R^4 x R^4 from a triple of 2-forms on the
// second factor satisfying o_j ^ o_k = 2 delta_jk dvol. Violating triples are
// rejected with the offending (j,k) pairs in the exception message.
AlternatingForm build_spin7_from_sd_triple(const std::array<AlternatingForm, 3>& o);

// Deterministic stream of rational vectors: numerators in [-9,9],
// denominators in [1,4], driven by a fixed-seed mt19937.
class SeededTuples {
 public:
  explicit SeededTuples(std::uint32_t seed) : gen_(seed) {}
  Vec vector(int n);

 private:
  std::mt19937 gen_;
};

}  // namespace calib

#endif
