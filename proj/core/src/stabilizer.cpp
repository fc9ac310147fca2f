#include "calib/stabilizer.hpp"

#include <stdexcept>

namespace calib {

namespace {

RatMatrix elementary(int n, int i, int j) {
  RatMatrix e(n, n);
  e.at(i, j) = 1;
  return e;
}

}  // namespace

MatrixSubspace stabilizer(const std::vector<AlternatingForm>& forms, int n) {
  if (forms.empty()) throw std::invalid_argument("stabilizer: no forms given");
  for (const AlternatingForm& a : forms)
    if (a.dim() != n) throw std::invalid_argument("stabilizer: form dimension mismatch");

  // Column i*n+j carries the coefficient of x^i_j; one block of rows per form,
  // one row per basis mask of its grade.
  RatMatrix sys(0, static_cast<std::size_t>(n) * n);
  for (const AlternatingForm& a : forms) {
    std::vector<IndexMask> masks = all_masks(n, a.grade());
    RatMatrix block(masks.size(), static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        AlternatingForm acted = gl_act(elementary(n, i, j), a);
        for (std::size_t r = 0; r < masks.size(); ++r) {
          Rational c = acted.coeff(masks[r]);
          if (c != 0) block.at(r, static_cast<std::size_t>(i) * n + j) = c;
        }
      }
    sys.append_rows(block);
  }
  return MatrixSubspace::from_flat(n, VectorSubspace::span(kernel(sys)));
}

bool stabilizes(const RatMatrix& g, const std::vector<AlternatingForm>& forms) {
  for (const AlternatingForm& a : forms)
    if (pullback(g, a) != a) return false;
  return true;
}

MatrixSubspace so_subspace(int n) {
  std::vector<RatMatrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix m(n, n);
      m.at(i, j) = 1;
      m.at(j, i) = -1;
      basis.push_back(m);
    }
  return MatrixSubspace::span(n, basis);
}

MatrixSubspace gl_subspace(int n) {
  return MatrixSubspace::from_flat(n, VectorSubspace::full(static_cast<std::size_t>(n) * n));
}

MatrixSubspace embed_trailing_block(const MatrixSubspace& s, int n) {
  const int k = static_cast<int>(s.matrix_size());
  if (k > n) throw std::invalid_argument("embed_trailing_block: block too large");
  const int off = n - k;
  std::vector<RatMatrix> mats;
  for (std::size_t b = 0; b < s.dim(); ++b) {
    RatMatrix small = s.basis_matrix(b);
    RatMatrix big(n, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) big.at(off + i, off + j) = small.at(i, j);
    mats.push_back(big);
  }
  return MatrixSubspace::span(n, mats);
}

TorsionReport torsion_report(const MatrixSubspace& g) {
  const int n = static_cast<int>(g.matrix_size());
  const int pairs = n * (n - 1) / 2;
  const int dim_g = static_cast<int>(g.dim());

  // Pair (k,m), k<m, at row offset pair_index(k,m).
  std::vector<std::pair<int, int>> pair_list;
  for (int k = 0; k < n; ++k)
    for (int m = k + 1; m < n; ++m) pair_list.emplace_back(k, m);

  // delta(b tensor eta^l)^j_{km} = b^j_k [m=l] - b^j_m [k=l].
  RatMatrix delta(static_cast<std::size_t>(n) * pairs, static_cast<std::size_t>(dim_g) * n);
  for (int b = 0; b < dim_g; ++b) {
    RatMatrix mb = g.basis_matrix(b);
    for (int l = 0; l < n; ++l) {
      const std::size_t col = static_cast<std::size_t>(b) * n + l;
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < pairs; ++p) {
          auto [k, m] = pair_list[p];
          Rational val = 0;
          if (m == l) val += mb.at(j, k);
          if (k == l) val -= mb.at(j, m);
          if (val != 0) delta.at(static_cast<std::size_t>(j) * pairs + p, col) = val;
        }
    }
  }

  TorsionReport rep;
  rep.n = n;
  rep.dim_g = dim_g;
  rep.dim_image = static_cast<int>(rank(delta));
  rep.dim_prolongation = dim_g * n - rep.dim_image;
  rep.dim_h0 = n * pairs - rep.dim_image;
  return rep;
}

QuotientDimCheck subgroup_quotient_dim_check(const MatrixSubspace& g) {
  const int n = static_cast<int>(g.matrix_size());
  if (!so_subspace(n).contains(g))
    throw std::invalid_argument("subgroup_quotient_dim_check: subspace is not skew-symmetric");
  QuotientDimCheck chk;
  chk.n = n;
  chk.dim_so = n * (n - 1) / 2;
  chk.dim_g = static_cast<int>(g.dim());
  chk.expected_h0 = (chk.dim_so - chk.dim_g) * n;
  chk.computed_h0 = torsion_report(g).dim_h0;
  chk.pass = chk.expected_h0 == chk.computed_h0;
  return chk;
}

std::optional<RatMatrix> intertwiner(const RatMatrix& x, const VectorValuedForm& f) {
  const int m = f.values();
  if (m == 0) throw std::invalid_argument("intertwiner: no components");
  const int n = f.comps.front().dim();
  const int grade = f.comps.front().grade();
  for (const AlternatingForm& c : f.comps)
    if (c.dim() != n || c.grade() != grade)
      throw std::invalid_argument("intertwiner: mixed component dimensions or grades");

  const std::vector<IndexMask> masks = all_masks(n, grade);
  RatMatrix a(masks.size(), m);
  for (int k = 0; k < m; ++k)
    for (std::size_t r = 0; r < masks.size(); ++r) a.at(r, k) = f.comps[k].coeff(masks[r]);

  RatMatrix t(m, m);
  for (int j = 0; j < m; ++j) {
    AlternatingForm acted = gl_act(x, f.comps[j]);
    Vec b(masks.size());
    for (std::size_t r = 0; r < masks.size(); ++r) b[r] = acted.coeff(masks[r]);
    Vec row;
    if (!solve(a, b, row)) return std::nullopt;
    for (int k = 0; k < m; ++k) t.at(j, k) = row[k];
  }
  return t;
}

bool independent_components(const VectorValuedForm& f) {
  const int m = f.values();
  if (m == 0) return true;
  const int n = f.comps.front().dim();
  const int grade = f.comps.front().grade();
  const std::vector<IndexMask> masks = all_masks(n, grade);
  RatMatrix a(m, masks.size());
  for (int k = 0; k < m; ++k)
    for (std::size_t r = 0; r < masks.size(); ++r) a.at(k, r) = f.comps[k].coeff(masks[r]);
  return rank(a) == static_cast<std::size_t>(m);
}

}  // namespace calib
