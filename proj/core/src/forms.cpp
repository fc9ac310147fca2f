#include "calib/forms.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace calib {

int mask_grade(IndexMask m) { return std::popcount(m); }

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> idx;
  for (int i = 0; i < kMaxDim; ++i)
    if (m & (IndexMask{1} << i)) idx.push_back(i);
  return idx;
}

IndexMask mask_of(const std::vector<int>& indices) {
  IndexMask m = 0;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= kMaxDim) throw std::invalid_argument("mask_of: index out of range");
    if (i <= prev) throw std::invalid_argument("mask_of: indices must be strictly increasing");
    m |= IndexMask{1} << i;
    prev = i;
  }
  return m;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count transpositions: for each index in b, the indices of a above it.
  int inversions = 0;
  for (int j = 0; j < kMaxDim; ++j) {
    if (!(b & (IndexMask{1} << j))) continue;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<IndexMask> all_masks(int n, int grade) {
  std::vector<IndexMask> out;
  IndexMask top = IndexMask{1} << n;
  for (IndexMask m = 0; m < top; ++m)
    if (std::popcount(m) == grade) out.push_back(m);
  return out;
}

AlternatingForm::AlternatingForm(int n, int grade) : n_(n), grade_(grade) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("AlternatingForm: dimension out of range");
  if (grade < 0) throw std::invalid_argument("AlternatingForm: negative grade");
}

void AlternatingForm::check_mask(IndexMask m) const {
  if (mask_grade(m) != grade_) throw std::invalid_argument("AlternatingForm: mask grade mismatch");
  if (m >> n_) throw std::invalid_argument("AlternatingForm: index exceeds dimension");
}

Rational AlternatingForm::coeff(IndexMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlternatingForm::set_coeff(IndexMask m, const Rational& c) {
  check_mask(m);
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void AlternatingForm::add_coeff(IndexMask m, const Rational& c) {
  check_mask(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& rhs) {
  if (n_ != rhs.n_ || grade_ != rhs.grade_)
    throw std::invalid_argument("AlternatingForm: +/- requires equal dimension and grade");
  for (const auto& [m, c] : rhs.terms_) add_coeff(m, c);
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& rhs) {
  if (n_ != rhs.n_ || grade_ != rhs.grade_)
    throw std::invalid_argument("AlternatingForm: +/- requires equal dimension and grade");
  for (const auto& [m, c] : rhs.terms_) add_coeff(m, -c);
  return *this;
}

AlternatingForm& AlternatingForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string AlternatingForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (grade_ > 0) {
      os << " dx";
      for (int i : mask_indices(m)) os << i;
    }
  }
  return os.str();
}

AlternatingForm basis_form(int n, const std::vector<int>& indices, const Rational& c) {
  AlternatingForm f(n, static_cast<int>(indices.size()));
  f.set_coeff(mask_of(indices), c);
  return f;
}

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  AlternatingForm out(a.dim(), a.grade() + b.grade());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.add_coeff(ma | mb, s * ca * cb);
    }
  return out;
}

AlternatingForm interior(const Vec& v, const AlternatingForm& a) {
  if (a.grade() < 1) throw std::invalid_argument("interior: grade must be at least 1");
  if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("interior: vector length mismatch");
  AlternatingForm out(a.dim(), a.grade() - 1);
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = mask_indices(m);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (v[idx[s]] == 0) continue;
      Rational sign = (s % 2 == 0) ? 1 : -1;
      out.add_coeff(m & ~(IndexMask{1} << idx[s]), sign * v[idx[s]] * c);
    }
  }
  return out;
}

AlternatingForm hodge(const AlternatingForm& a) {
  const int n = a.dim();
  const IndexMask full = (IndexMask{1} << n) - 1;
  AlternatingForm out(n, n - a.grade());
  for (const auto& [m, c] : a.terms()) {
    IndexMask comp = full & ~m;
    out.add_coeff(comp, wedge_sign(m, comp) * c);
  }
  return out;
}

Rational evaluate(const AlternatingForm& a, const std::vector<Vec>& vectors) {
  if (static_cast<int>(vectors.size()) != a.grade())
    throw std::invalid_argument("evaluate: number of vectors must equal the grade");
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("evaluate: vector length mismatch");
  if (a.grade() == 0) return a.coeff(0);
  Rational total = 0;
  const std::size_t p = vectors.size();
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = mask_indices(m);
    RatMatrix minor(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t t = 0; t < p; ++t) minor.at(r, t) = vectors[t][idx[r]];
    total += c * det(minor);
  }
  return total;
}

Rational gram_norm_sq(const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("gram_norm_sq: empty vector sequence");
  const std::size_t p = vectors.size(), n = vectors.front().size();
  for (const Vec& v : vectors)
    if (v.size() != n) throw std::invalid_argument("gram_norm_sq: mixed dimensions");
  RatMatrix g(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += vectors[i][k] * vectors[j][k];
      g.at(i, j) = dot;
    }
  return det(g);
}

AlternatingForm gl_act(const RatMatrix& x, const AlternatingForm& a) {
  const int n = a.dim();
  if (x.rows() != static_cast<std::size_t>(n) || x.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("gl_act: matrix must be n x n");
  AlternatingForm out(n, a.grade());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = mask_indices(m);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const int i = idx[s];
      const IndexMask rest = m & ~(IndexMask{1} << i);
      const int lead = (s % 2 == 0) ? 1 : -1;  // move slot s to the front
      for (int j = 0; j < n; ++j) {
        const Rational& xij = x.at(i, j);
        if (xij == 0) continue;
        const IndexMask jm = IndexMask{1} << j;
        int sgn = wedge_sign(jm, rest);
        if (sgn == 0) continue;
        out.add_coeff(jm | rest, (lead * sgn) * xij * c);
      }
    }
  }
  return out;
}

AlternatingForm pullback(const RatMatrix& g, const AlternatingForm& a) {
  const int n = a.dim();
  if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("pullback: matrix must be n x n");
  AlternatingForm out(n, a.grade());
  for (const auto& [m, c] : a.terms()) {
    AlternatingForm prod(n, 0);
    prod.set_coeff(0, c);
    for (int i : mask_indices(m)) {
      AlternatingForm line(n, 1);
      for (int j = 0; j < n; ++j) line.set_coeff(IndexMask{1} << j, g.at(i, j));
      prod = wedge(prod, line);
    }
    out += prod;
  }
  return out;
}

AlternatingForm restrict_form(const AlternatingForm& a, int k) {
  if (k < 0 || k > a.dim()) throw std::invalid_argument("restrict_form: k out of range");
  const IndexMask keep = (IndexMask{1} << k) - 1;
  AlternatingForm out(a.dim(), a.grade());
  for (const auto& [m, c] : a.terms())
    if ((m & ~keep) == 0) out.set_coeff(m, c);
  return out;
}

AlternatingForm shift_embed(const AlternatingForm& a, int offset, int n_new) {
  if (offset < 0 || a.dim() + offset > n_new) throw std::invalid_argument("shift_embed: range error");
  AlternatingForm out(n_new, a.grade());
  for (const auto& [m, c] : a.terms()) out.set_coeff(m << offset, c);
  return out;
}

}  // namespace calib
