#include "calib/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace calib {

namespace {

// 1-based coordinate labels for the R^7 tables; R^8 tables are 0-based already.
AlternatingForm f7(std::vector<int> labels, long c) {
  for (int& l : labels) --l;
  return basis_form(7, labels, Rational(c));
}

AlternatingForm f8(const std::vector<int>& labels, long c) { return basis_form(8, labels, Rational(c)); }

AlternatingForm sum7(int grade, const std::vector<std::pair<std::vector<int>, long>>& terms) {
  AlternatingForm out(7, grade);
  for (const auto& [labels, c] : terms) out += f7(labels, c);
  return out;
}

AlternatingForm sum8(int grade, const std::vector<std::pair<std::vector<int>, long>>& terms) {
  AlternatingForm out(8, grade);
  for (const auto& [labels, c] : terms) out += f8(labels, c);
  return out;
}

// (re_a + i im_a) ^ (re_b + i im_b), complex wedge on real parts.
std::pair<AlternatingForm, AlternatingForm> complex_wedge(const AlternatingForm& re_a,
                                                          const AlternatingForm& im_a,
                                                          const AlternatingForm& re_b,
                                                          const AlternatingForm& im_b) {
  return {wedge(re_a, re_b) - wedge(im_a, im_b), wedge(re_a, im_b) + wedge(im_a, re_b)};
}

// Composition-algebra product on R^8 with unit e_0 and imaginary units
// multiplying by e_i e_j = -delta_ij e_0 + sum_k phi(i,j,k) e_k.
struct OctonionTable {
  std::array<std::array<Vec, 8>, 8> prod;

  explicit OctonionTable(const AlternatingForm& phi) {
    for (auto& row : prod)
      for (auto& entry : row) entry = Vec(8, Rational(0));
    for (int j = 0; j < 8; ++j) prod[0][j][j] = 1;
    for (int i = 1; i < 8; ++i) prod[i][0][i] = 1;
    for (int i = 1; i < 8; ++i)
      for (int j = 1; j < 8; ++j) {
        if (i == j) {
          prod[i][j][0] = -1;
          continue;
        }
        for (int k = 1; k < 8; ++k) {
          if (k == i || k == j) continue;
          std::vector<Vec> t = {basis_vector(7, i - 1), basis_vector(7, j - 1),
                                basis_vector(7, k - 1)};
          prod[i][j][k] = evaluate(phi, t);
        }
      }
  }

  static Vec conj(Vec a) {
    for (int i = 1; i < 8; ++i) a[i] = -a[i];
    return a;
  }

  Vec mult(const Vec& a, const Vec& b) const {
    Vec r(8, Rational(0));
    for (int i = 0; i < 8; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (b[j] == 0) continue;
        Rational c(a[i] * b[j]);
        const Vec& e = prod[i][j];
        for (int k = 0; k < 8; ++k)
          if (e[k] != 0) r[k] += c * e[k];
      }
    }
    return r;
  }

  // x x y x z = ((z yb) x - (x yb) z) / 2; pairs with the fourth argument to
  // give the Cayley 4-form.
  Vec triple(const Vec& x, const Vec& y, const Vec& z) const {
    Vec yb = conj(y);
    Vec a = mult(mult(z, yb), x);
    Vec b = mult(mult(x, yb), z);
    Vec r(8);
    for (int i = 0; i < 8; ++i) r[i] = Rational(a[i] - b[i]) / 2;
    return r;
  }

  // Normalized alternation of Im(wb (x x y x z)) over the argument in the
  // last slot: the imaginary part of the fourfold cross product.
  Vec fourfold_im(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
    auto g = [this](const Vec& p, const Vec& q, const Vec& r, const Vec& s) {
      Vec v = mult(conj(s), triple(p, q, r));
      v[0] = 0;
      return v;
    };
    Vec a = g(x, y, z, w), b = g(x, y, w, z), c = g(x, z, w, y), d = g(y, z, w, x);
    Vec out(7);
    for (int k = 1; k < 8; ++k) out[k - 1] = Rational(a[k] - b[k] + c[k] - d[k]) / 2;
    return out;
  }
};

const OctonionTable& octonions() {
  static const OctonionTable table(catalog().phi);
  return table;
}

}  // namespace

CalibrationCatalog build_catalog() {
  CalibrationCatalog cat;

  cat.phi = sum7(3, {{{1, 2, 3}, 1},
                     {{1, 4, 5}, 1},
                     {{1, 6, 7}, 1},
                     {{2, 4, 6}, 1},
                     {{2, 5, 7}, -1},
                     {{3, 4, 7}, -1},
                     {{3, 5, 6}, -1}});

  cat.star_phi = sum7(4, {{{4, 5, 6, 7}, 1},
                          {{2, 3, 4, 5}, 1},
                          {{2, 3, 6, 7}, 1},
                          {{1, 3, 4, 6}, -1},
                          {{1, 3, 5, 7}, 1},
                          {{1, 2, 4, 7}, -1},
                          {{1, 2, 5, 6}, -1}});
  if (hodge(cat.phi) != cat.star_phi)
    throw std::logic_error("catalog: hodge(phi) disagrees with the transcribed 4-form");

  cat.chi.comps = {
      sum7(3, {{{3, 5, 7}, -1}, {{3, 4, 6}, 1}, {{2, 5, 6}, 1}, {{2, 4, 7}, 1}}),
      sum7(3, {{{3, 6, 7}, -1}, {{3, 4, 5}, -1}, {{1, 5, 6}, -1}, {{1, 4, 7}, -1}}),
      sum7(3, {{{2, 6, 7}, 1}, {{2, 4, 5}, 1}, {{1, 5, 7}, 1}, {{1, 4, 6}, -1}}),
      sum7(3, {{{5, 6, 7}, -1}, {{2, 3, 5}, -1}, {{1, 3, 6}, 1}, {{1, 2, 7}, 1}}),
      sum7(3, {{{4, 6, 7}, 1}, {{2, 3, 4}, 1}, {{1, 3, 7}, -1}, {{1, 2, 6}, 1}}),
      sum7(3, {{{4, 5, 7}, -1}, {{2, 3, 7}, -1}, {{1, 3, 4}, -1}, {{1, 2, 5}, -1}}),
      sum7(3, {{{4, 5, 6}, 1}, {{2, 3, 6}, 1}, {{1, 3, 5}, 1}, {{1, 2, 4}, -1}}),
  };
  for (int j = 0; j < 7; ++j) {
    AlternatingForm contracted = Rational(-1) * interior(basis_vector(7, j), cat.star_phi);
    if (contracted != cat.chi.comps[j]) {
      std::ostringstream os;
      os << "catalog: chi component " << j + 1 << " disagrees with -(e_j interior star_phi)";
      throw std::logic_error(os.str());
    }
  }

  cat.psi = sum8(4, {{{0, 1, 2, 3}, 1},
                     {{4, 5, 6, 7}, 1},
                     {{0, 1, 4, 5}, 1},
                     {{0, 1, 6, 7}, 1},
                     {{2, 3, 4, 5}, 1},
                     {{2, 3, 6, 7}, 1},
                     {{0, 2, 4, 6}, 1},
                     {{0, 2, 5, 7}, -1},
                     {{1, 3, 4, 6}, -1},
                     {{1, 3, 5, 7}, 1},
                     {{0, 3, 4, 7}, -1},
                     {{0, 3, 5, 6}, -1},
                     {{1, 2, 4, 7}, -1},
                     {{1, 2, 5, 6}, -1}});
  {
    // The same 4-form must arise as dx^0 ^ phi + star_phi under the inclusion
    // R^7 -> R^8 as the last seven coordinates.
    AlternatingForm assembled =
        wedge(f8({0}, 1), shift_embed(cat.phi, 1, 8)) + shift_embed(cat.star_phi, 1, 8);
    if (assembled != cat.psi)
      throw std::logic_error("catalog: psi disagrees with dx^0 ^ phi + star_phi");
  }

  // Each tau component assembles from the corresponding chi component exactly
  // as psi assembles from phi: tau_j = dx^0 ^ chi_j + star(chi_j).  The
  // octonion checks below certify that the seven components are the imaginary
  // components of the fourfold cross product, which is what makes
  // psi^2 + |tau|^2 equal the Gram determinant on decomposable 4-vectors.
  cat.tau.comps.clear();
  for (int j = 0; j < 7; ++j)
    cat.tau.comps.push_back(wedge(f8({0}, 1), shift_embed(cat.chi.comps[j], 1, 8)) +
                            shift_embed(hodge(cat.chi.comps[j]), 1, 8));
  {
    const OctonionTable oct(cat.phi);
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c) {
          const Vec t = oct.triple(basis_vector(8, a), basis_vector(8, b), basis_vector(8, c));
          for (int d = 0; d < 8; ++d) {
            std::vector<Vec> tup = {basis_vector(8, a), basis_vector(8, b), basis_vector(8, c),
                                    basis_vector(8, d)};
            if (t[d] != evaluate(cat.psi, tup))
              throw std::logic_error("catalog: triple cross pairing disagrees with psi");
          }
        }
    for (IndexMask m : all_masks(8, 4)) {
      const std::vector<int> idx = mask_indices(m);
      const Vec v = oct.fourfold_im(basis_vector(8, idx[0]), basis_vector(8, idx[1]),
                                    basis_vector(8, idx[2]), basis_vector(8, idx[3]));
      for (int k = 0; k < 7; ++k)
        if (v[k] != cat.tau.comps[k].coeff(m))
          throw std::logic_error("catalog: tau disagrees with the fourfold cross product");
    }
  }

  cat.su3_alpha = f7({7}, 1);
  cat.su3_omega = sum7(2, {{{1, 6}, 1}, {{2, 5}, -1}, {{3, 4}, -1}});
  {
    auto [re12, im12] = complex_wedge(f7({1}, 1), f7({6}, 1), f7({2}, 1), f7({5}, -1));
    auto [re, im] = complex_wedge(re12, im12, f7({3}, 1), f7({4}, -1));
    cat.su3_upsilon_re = re;
    cat.su3_upsilon_im = im;
  }

  cat.sd_triple = {
      basis_form(4, {0, 1}) + basis_form(4, {2, 3}),
      basis_form(4, {0, 2}) - basis_form(4, {1, 3}),
      basis_form(4, {0, 3}) + basis_form(4, {1, 2}),
  };
  if (build_spin7_from_sd_triple(cat.sd_triple) != cat.psi)
    throw std::logic_error("catalog: self-dual triple assembly disagrees with psi");

  return cat;
}

const CalibrationCatalog& catalog() {
  static const CalibrationCatalog cat = build_catalog();
  return cat;
}

Vec cross2(const Vec& u, const Vec& v) {
  const AlternatingForm lambda = interior(v, interior(u, catalog().phi));
  Vec out(7, Rational(0));
  for (int m = 0; m < 7; ++m) out[m] = lambda.coeff(IndexMask{1} << m);
  return out;
}

Vec triple_cross(const Vec& u, const Vec& v, const Vec& w) {
  const AlternatingForm lambda = interior(w, interior(v, interior(u, catalog().psi)));
  Vec out(8, Rational(0));
  for (int m = 0; m < 8; ++m) out[m] = lambda.coeff(IndexMask{1} << m);
  return out;
}

Vec octonion_product(const Vec& a, const Vec& b) { return octonions().mult(a, b); }

Vec octonion_conjugate(Vec a) { return OctonionTable::conj(std::move(a)); }

Vec fourfold_cross_imaginary(const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  return octonions().fourfold_im(x, y, z, w);
}

Rational assoc_residual(const Vec& u, const Vec& v, const Vec& w) {
  const CalibrationCatalog& cat = catalog();
  const std::vector<Vec> t = {u, v, w};
  Rational value = evaluate(cat.phi, t);
  Rational total = value * value;
  for (const AlternatingForm& comp : cat.chi.comps) {
    Rational x = evaluate(comp, t);
    total += x * x;
  }
  return total - gram_norm_sq(t);
}

Rational cayley_residual(const Vec& u, const Vec& v, const Vec& w, const Vec& z) {
  const CalibrationCatalog& cat = catalog();
  const std::vector<Vec> t = {u, v, w, z};
  Rational value = evaluate(cat.psi, t);
  Rational total = value * value;
  for (const AlternatingForm& comp : cat.tau.comps) {
    Rational x = evaluate(comp, t);
    total += x * x;
  }
  return total - gram_norm_sq(t);
}

AlternatingForm build_spin7_from_sd_triple(const std::array<AlternatingForm, 3>& o) {
  const AlternatingForm dvol = basis_form(4, {0, 1, 2, 3});
  std::vector<std::pair<int, int>> bad;
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k) {
      AlternatingForm expect(4, 4);
      if (j == k) expect = Rational(2) * dvol;
      if (wedge(o[j], o[k]) != expect) bad.emplace_back(j + 1, k + 1);
    }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "build_spin7_from_sd_triple: wedge relations o_j ^ o_k = 2 delta_jk dvol fail at";
    for (auto [j, k] : bad) os << " (" << j << "," << k << ")";
    throw std::invalid_argument(os.str());
  }

  std::array<AlternatingForm, 3> p;
  for (int j = 0; j < 3; ++j) p[j] = shift_embed(o[j], 4, 8);
  const AlternatingForm y01 = f8({0, 1}, 1), y23 = f8({2, 3}, 1), y02 = f8({0, 2}, 1),
                        y31 = f8({1, 3}, -1), y03 = f8({0, 3}, 1), y12 = f8({1, 2}, 1);
  return f8({0, 1, 2, 3}, 1) + frac(1, 2) * wedge(p[0], p[0]) + wedge(y01 + y23, p[0]) +
         wedge(y02 + y31, p[1]) - wedge(y03 + y12, p[2]);
}

Vec SeededTuples::vector(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    long num = static_cast<long>(gen_() % 19) - 9;
    long den = static_cast<long>(gen_() % 4) + 1;
    v[i] = frac(num, den);
  }
  return v;
}

}  // namespace calib
