#include "calib/integral.hpp"

#include <stdexcept>

namespace calib {

int ParamVarTable::pair_index(int k, int l) const {
  if (!(0 <= k && k < l && l < n)) throw std::invalid_argument("pair_index: need 0 <= k < l < n");
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in lex order.
  return k * n - k * (k + 1) / 2 + (l - k - 1);
}

int ParamVarTable::index(int j, int k, int l) const {
  if (j < 0 || j >= n) throw std::invalid_argument("index: j out of range");
  return j * pairs() + pair_index(k, l);
}

std::tuple<int, int, int> ParamVarTable::var(int idx) const {
  if (idx < 0 || idx >= count()) throw std::invalid_argument("var: index out of range");
  int j = idx / pairs();
  int p = idx % pairs();
  for (int k = 0; k < n; ++k) {
    int width = n - k - 1;
    if (p < width) return {j, k, k + 1 + p};
    p -= width;
  }
  throw std::logic_error("var: unreachable");
}

void LinExpr::add(int var, const Rational& r) {
  auto it = coeff.find(var);
  if (it == coeff.end()) {
    if (r != 0) coeff.emplace(var, r);
    return;
  }
  it->second += r;
  if (it->second == 0) coeff.erase(it);
}

LinExpr ParamForm::coeff(IndexMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LinExpr{} : it->second;
}

void ParamForm::add(IndexMask m, int var, const Rational& c) {
  if (mask_grade(m) != grade_ || (m >> n_)) throw std::invalid_argument("ParamForm::add: bad mask");
  LinExpr& e = terms_[m];
  e.add(var, c);
  if (e.empty()) terms_.erase(m);
}

ParamForm structure_expansion(int n, int j) {
  if (j < 0 || j >= n) throw std::invalid_argument("structure_expansion: j out of range");
  ParamVarTable vars{n};
  ParamForm out(n, 2);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) out.add(mask_of({k, l}), vars.index(j, k, l), Rational(2));
  return out;
}

ParamForm d_hat(const AlternatingForm& a) {
  const int n = a.dim();
  ParamVarTable vars{n};
  ParamForm out(n, a.grade() + 1);
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = mask_indices(m);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      // d(eta^I) = sum_s (-1)^s  d eta^{i_s} ^ eta^{I minus i_s}; the 2-form
      // d eta commutes past the leading 1-forms.
      const int i = idx[s];
      const IndexMask rest = m & ~(IndexMask{1} << i);
      const Rational lead = (s % 2 == 0) ? c : -c;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const IndexMask kl = mask_of({k, l});
          int sgn = wedge_sign(kl, rest);
          if (sgn == 0) continue;
          out.add(kl | rest, vars.index(i, k, l), Rational(2 * sgn) * lead);
        }
    }
  }
  return out;
}

AlternatingForm substitute(const ParamForm& f, const std::vector<Rational>& q) {
  ParamVarTable vars{f.dim()};
  if (static_cast<int>(q.size()) != vars.count())
    throw std::invalid_argument("substitute: wrong number of values");
  AlternatingForm out(f.dim(), f.grade());
  for (const auto& [m, e] : f.terms()) {
    Rational total = 0;
    for (const auto& [var, c] : e.coeff) total += c * q[var];
    out.add_coeff(m, total);
  }
  return out;
}

ConstraintSystem ideal_constraint_system(const std::vector<AlternatingForm>& generators, int n) {
  if (generators.empty()) throw std::invalid_argument("ideal_constraint_system: no generators");
  for (const AlternatingForm& g : generators)
    if (g.dim() != n) throw std::invalid_argument("ideal_constraint_system: dimension mismatch");

  ConstraintSystem sys;
  sys.n = n;
  sys.vars = ParamVarTable{n};
  sys.matrix = RatMatrix(0, sys.vars.count());

  int prev_rank = 0;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    ParamForm df = d_hat(generators[g]);
    for (IndexMask m : all_masks(n, df.grade())) {
      LinExpr e = df.coeff(m);
      Vec row(sys.vars.count(), Rational(0));
      for (const auto& [var, c] : e.coeff) row[var] = c;
      sys.matrix.append_row(row);
      sys.rows.push_back({static_cast<int>(g), m});
    }
    int r = static_cast<int>(rank(sys.matrix));
    sys.generator_rank_increments.push_back(r - prev_rank);
    prev_rank = r;
  }
  sys.total_rank = prev_rank;
  return sys;
}

AdmissibilityCertificate strong_admissibility_check(const ConstraintSystem& sys, int h0_dim) {
  AdmissibilityCertificate cert;
  cert.constraint_rank = sys.total_rank;
  cert.h0_dim = h0_dim;
  cert.pass = cert.constraint_rank == h0_dim;
  return cert;
}

bool coordinate_freedom(const ConstraintSystem& sys, const std::vector<int>& variables) {
  std::vector<std::size_t> drop;
  for (int v : variables) {
    if (v < 0 || v >= sys.vars.count()) throw std::invalid_argument("coordinate_freedom: variable out of range");
    drop.push_back(static_cast<std::size_t>(v));
  }
  // The projection of the solution space onto the listed coordinates is onto
  // iff those columns add nothing to the rank of the remaining ones.
  RatMatrix reduced = sys.matrix.without_columns(drop);
  return rank(reduced) == static_cast<std::size_t>(sys.total_rank);
}

VectorSubspace polar_space(const VectorValuedForm& f, const std::vector<Vec>& e) {
  if (f.values() == 0) throw std::invalid_argument("polar_space: no components");
  const int n = f.comps.front().dim();
  const int grade = f.comps.front().grade();
  if (static_cast<int>(e.size()) != grade - 1)
    throw std::invalid_argument("polar_space: need grade-1 spanning vectors");
  if (rank(RatMatrix::from_rows(e)) != e.size())
    throw std::invalid_argument("polar_space: spanning vectors are linearly dependent");

  RatMatrix sys(f.values(), n);
  for (int j = 0; j < f.values(); ++j)
    for (int m = 0; m < n; ++m) {
      std::vector<Vec> args;
      args.push_back(basis_vector(n, m));
      args.insert(args.end(), e.begin(), e.end());
      sys.at(j, m) = evaluate(f.comps[j], args);
    }
  return VectorSubspace::span(kernel(sys));
}

}  // namespace calib
