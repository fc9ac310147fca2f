#include "calib/flags.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "calib/catalog.hpp"
#include "calib/stabilizer.hpp"

namespace calib {

namespace {

RatMatrix signature_diag(int n, int split, int lead_sign) {
  // diag(lead_sign * I_split, -lead_sign * I_{n-split})
  RatMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = (i < split) ? lead_sign : -lead_sign;
  return r;
}

RatMatrix elementary(int n, int i, int j) {
  RatMatrix e(n, n);
  e.at(i, j) = 1;
  return e;
}

// Stacked coefficient rows of x -> gl_act(x, a) restricted to the first k
// coordinates, over all generators a: h_k is the kernel of this matrix.
RatMatrix restriction_rows(const GroupModel& model, int k) {
  const int n = model.n;
  RatMatrix sys(0, static_cast<std::size_t>(n) * n);
  for (const AlternatingForm& a : model.generators) {
    std::vector<IndexMask> masks = all_masks(k, a.grade());
    if (masks.empty()) continue;
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
  return sys;
}

GroupModel build_model(Group g) {
  const CalibrationCatalog& cat = catalog();
  GroupModel m;
  m.group = g;
  if (g == Group::G2) {
    m.name = "g2";
    m.n = 7;
    m.generators = {cat.phi, cat.star_phi};
    m.involution = signature_diag(7, 3, 1);  // diag(I_3, -I_4)
    m.algebra = stabilizer(m.generators, 7);
    m.su2 = MatrixSubspace(7);
  } else {
    m.name = "spin7";
    m.n = 8;
    m.generators = {cat.psi};
    m.involution = signature_diag(8, 4, -1);  // diag(-I_4, I_4)
    m.algebra = stabilizer(m.generators, 8);
    std::vector<AlternatingForm> sd(cat.sd_triple.begin(), cat.sd_triple.end());
    m.su2 = embed_trailing_block(stabilizer(sd, 4), 8);
  }
  return m;
}

// Target (dimension, flag level) pairs for the chain search: the codimension
// of h_s at the last four proper levels s = n-4 .. n-1.
std::vector<std::pair<int, int>> chain_targets(const GroupModel& model) {
  std::vector<std::pair<int, int>> t;
  for (int s = model.n - 4; s < model.n; ++s) {
    MatrixSubspace hs = compute_hk(model, s);
    t.emplace_back(model.n * model.n - static_cast<int>(hs.dim()), s);
  }
  return t;
}

}  // namespace

const GroupModel& group_model(Group g) {
  static const GroupModel g2 = build_model(Group::G2);
  static const GroupModel spin7 = build_model(Group::Spin7);
  return g == Group::G2 ? g2 : spin7;
}

MatrixSubspace compute_hk(const GroupModel& model, int k) {
  if (k < 0 || k > model.n) throw std::invalid_argument("compute_hk: k out of range");
  RatMatrix sys = restriction_rows(model, k);
  if (sys.rows() == 0) return gl_subspace(model.n);
  return MatrixSubspace::from_flat(model.n, VectorSubspace::span(kernel(sys)));
}

FlagReport character_sequence(const GroupModel& model) {
  FlagReport rep;
  rep.group = model.name;
  rep.n = model.n;
  rep.dim_g = static_cast<int>(model.algebra.dim());
  rep.dim_s = model.n + model.n * model.n - rep.dim_g;

  int prev_codim = 0;
  for (int k = 0; k <= model.n; ++k) {
    MatrixSubspace hk = compute_hk(model, k);
    FlagLevel lvl;
    lvl.k = k;
    lvl.dim_hk = static_cast<int>(hk.dim());
    lvl.codim = model.n * model.n - lvl.dim_hk;
    lvl.increment = lvl.codim - prev_codim;
    lvl.polar_dim = model.n + lvl.dim_hk - rep.dim_g;
    lvl.ext_rank = lvl.polar_dim - (k + 1);
    prev_codim = lvl.codim;
    if (k < model.n) rep.cartan_sum += lvl.codim;
    rep.levels.push_back(lvl);
  }

  rep.ideal_rank = ideal_constraint_system(model.generators, model.n).total_rank;
  rep.regular = rep.cartan_sum == rep.ideal_rank;
  return rep;
}

std::pair<int, int> flag_dims(const GroupModel& model, int k) {
  MatrixSubspace hk = compute_hk(model, k);
  int polar = model.n + static_cast<int>(hk.dim()) - static_cast<int>(model.algebra.dim());
  return {polar, polar - (k + 1)};
}

TransversalCertificate verify_transversal(const GroupModel& model, const MatrixSubspace& w, int s) {
  MatrixSubspace hs = compute_hk(model, s);
  TransversalCertificate cert;
  cert.s = s;
  cert.dim_w = static_cast<int>(w.dim());
  cert.codim_hs = model.n * model.n - static_cast<int>(hs.dim());
  cert.dim_matches_codim = cert.dim_w == cert.codim_hs;
  cert.transversal = w.intersect(hs).dim() == 0;
  cert.involution_invariant = w.conjugate(model.involution) == w;
  cert.su2_invariant = true;
  for (std::size_t b = 0; b < model.su2.dim(); ++b)
    if (!w.bracket_stable_under(model.su2.basis_matrix(b))) {
      cert.su2_invariant = false;
      break;
    }
  cert.pass = cert.dim_matches_codim && cert.transversal && cert.involution_invariant && cert.su2_invariant;
  return cert;
}

std::vector<WChainLevel> seed_levels(const GroupModel& model) {
  if (model.group != Group::G2) return {};
  const int n = 7;

  RatMatrix w1(n, n);
  for (int i = 0; i < 3; ++i) w1.at(i, i) = 1;

  // Basis of the hand-constructed 5-dimensional transversal, one matrix per
  // parameter direction of the display.
  RatMatrix x1 = w1;
  RatMatrix x2(n, n), x3(n, n), x4(n, n), x5(n, n);
  x2.at(0, 3) = x2.at(1, 3) = x2.at(2, 3) = 1;
  x3.at(4, 1) = x3.at(4, 2) = x3.at(5, 2) = 1;
  x4.at(5, 0) = x4.at(6, 0) = x4.at(6, 1) = 1;
  x5.at(4, 0) = x5.at(5, 1) = x5.at(6, 2) = 1;

  std::vector<WChainLevel> seed;
  seed.push_back({1, 3, MatrixSubspace::span(n, {w1})});
  seed.push_back({5, 4, MatrixSubspace::span(n, {x1, x2, x3, x4, x5})});
  return seed;
}

namespace {

std::vector<std::size_t> pivot_profile(const MatrixSubspace& s) {
  std::vector<std::size_t> pivots;
  const RatMatrix& b = s.flat().basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t p = 0;
    while (p < b.cols() && b.at(i, p) == 0) ++p;
    pivots.push_back(p);
  }
  return pivots;
}

void sort_blocks(std::vector<MatrixSubspace>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const MatrixSubspace& a, const MatrixSubspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return pivot_profile(a) < pivot_profile(b);
  });
}

}  // namespace

std::vector<MatrixSubspace> invariant_blocks(const GroupModel& model) {
  const int n = model.n;
  std::vector<MatrixSubspace> blocks;

  if (model.group == Group::G2) {
    // R is diagonal, so every coordinate line of gl(7) is an eigenline of the
    // conjugation action: all 49 are admissible one-dimensional blocks.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) blocks.push_back(MatrixSubspace::span(n, {elementary(n, a, b)}));
  } else {
    // Quadrant structure relative to R = diag(-I_4, I_4): each quadrant is an
    // eigenspace of the conjugation, so any su(2)-isotypic piece inside a
    // single quadrant is an admissible block.
    const std::vector<RatMatrix> s4 = [] {
      const CalibrationCatalog& cat = catalog();
      std::vector<AlternatingForm> sd(cat.sd_triple.begin(), cat.sd_triple.end());
      return stabilizer(sd, 4).basis_matrices();
    }();

    // Leading 4x4 quadrant: su(2) acts trivially, 16 coordinate lines.
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) blocks.push_back(MatrixSubspace::span(n, {elementary(n, a, b)}));

    // Trailing quadrant: commutant lines (trivial isotypic) and the
    // three-dimensional adjoint blocks s * t for each commutant direction t,
    // found by solving [s_i, m] = 0 over the 16 entries of m.
    RatMatrix sys(3 * 16, 16);
    for (std::size_t i = 0; i < s4.size(); ++i)
      for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
          RatMatrix c = commutator(s4[i], elementary(4, u, v));
          for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
              sys.at(i * 16 + p * 4 + q, static_cast<std::size_t>(u) * 4 + v) = c.at(p, q);
        }
    RatMatrix comm = row_space(kernel(sys));
    if (comm.rows() != 4) throw std::logic_error("invariant_blocks: commutant dimension is not 4");

    for (std::size_t t = 0; t < comm.rows(); ++t) {
      RatMatrix tq = unflatten(4, comm.row(t));
      MatrixSubspace line = embed_trailing_block(MatrixSubspace::span(4, {tq}), n);
      blocks.push_back(line);
      std::vector<RatMatrix> adj;
      for (const RatMatrix& s : s4) adj.push_back(s * tq);
      MatrixSubspace adjoint = embed_trailing_block(MatrixSubspace::span(4, adj), n);
      if (adjoint.dim() != 3) throw std::logic_error("invariant_blocks: adjoint block dimension is not 3");
      blocks.push_back(adjoint);
    }

    // Off-diagonal quadrants: rows of the upper-right and columns of the
    // lower-left quadrant are standard 4-dimensional su(2)-modules.
    for (int a = 0; a < 4; ++a) {
      std::vector<RatMatrix> row_block, col_block;
      for (int m = 0; m < 4; ++m) {
        row_block.push_back(elementary(n, a, 4 + m));
        col_block.push_back(elementary(n, 4 + m, a));
      }
      blocks.push_back(MatrixSubspace::span(n, row_block));
      blocks.push_back(MatrixSubspace::span(n, col_block));
    }
  }

  // Construction invariants: the blocks decompose gl(n) and each one is
  // invariant under conjugation by R and under the su(2) bracket.
  MatrixSubspace total(n);
  std::size_t dim_sum = 0;
  for (const MatrixSubspace& b : blocks) {
    dim_sum += b.dim();
    total = total.sum(b);
    if (b.conjugate(model.involution) != b)
      throw std::logic_error("invariant_blocks: block is not involution-invariant");
    for (std::size_t i = 0; i < model.su2.dim(); ++i)
      if (!b.bracket_stable_under(model.su2.basis_matrix(i)))
        throw std::logic_error("invariant_blocks: block is not su(2)-invariant");
  }
  if (dim_sum != static_cast<std::size_t>(n) * n || total.dim() != dim_sum)
    throw std::logic_error("invariant_blocks: blocks do not decompose gl(n)");

  sort_blocks(blocks);
  return blocks;
}

MatrixSubspace bracket_orbit(const GroupModel& model, const RatMatrix& v) {
  const int n = model.n;
  MatrixSubspace orbit = MatrixSubspace::span(n, {v});
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t s = 0; s < model.su2.dim(); ++s)
      for (std::size_t b = 0; b < orbit.dim(); ++b) {
        RatMatrix c = commutator(model.su2.basis_matrix(s), orbit.basis_matrix(b));
        if (!c.is_zero() && !orbit.contains(c)) {
          orbit = orbit.sum(MatrixSubspace::span(n, {c}));
          grew = true;
        }
      }
  }
  return orbit;
}

std::vector<MatrixSubspace> candidate_modules(const GroupModel& model) {
  std::vector<MatrixSubspace> blocks = invariant_blocks(model);
  std::vector<MatrixSubspace> pool = blocks;

  // Graph-type candidates: orbits of u +/- w for basis vectors u, w of two
  // distinct blocks of equal dimension at least 2. For isomorphic blocks
  // these are the diagonal submodules the plain blocks cannot express; mixed
  // pairs merely reproduce unions and are skipped by the dimension cap, and
  // one-dimensional mixes are redundant because coordinate lines already
  // realize every achievable rank in the trivial sector. Orbits that fail to
  // be involution-invariant (mixed eigenvectors of the conjugation) are
  // dropped.
  std::vector<MatrixSubspace> mixes;
  for (std::size_t dim_want : {4, 3})
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].dim() != dim_want) continue;
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        if (blocks[j].dim() != dim_want) continue;
        for (std::size_t bu = 0; bu < dim_want; ++bu)
          for (std::size_t bw = 0; bw < dim_want; ++bw)
            for (int sign : {1, -1}) {
              RatMatrix v =
                  blocks[i].basis_matrix(bu) + Rational(sign) * blocks[j].basis_matrix(bw);
              MatrixSubspace orbit = bracket_orbit(model, v);
              if (orbit.dim() > dim_want) continue;
              if (orbit.conjugate(model.involution) != orbit) continue;
              mixes.push_back(orbit);
            }
      }
    }
  pool.insert(pool.end(), mixes.begin(), mixes.end());

  // Largest candidates first: the search fills each level with the scarce
  // high-dimensional modules and tops off with coordinate lines, which keeps
  // the backtracking shallow. Stable, so the order stays deterministic.
  std::stable_sort(pool.begin(), pool.end(),
                   [](const MatrixSubspace& a, const MatrixSubspace& b) { return a.dim() > b.dim(); });
  return pool;
}

namespace {

// Echelon accumulator for images of basis vectors under the level's
// constraint functionals: a set of modules is jointly transversal to h_s and
// in direct sum exactly when all their images reduce to independent rows.
struct ImageEchelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  bool add(Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& lead = v[pivots[r]];
      if (lead != 0) {
        Rational f(lead / rows[r][pivots[r]]);
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

struct ChainSearcher {
  const GroupModel& model;
  std::vector<std::pair<int, int>> targets;  // (dim, s)
  std::vector<RatMatrix> funcs;              // constraint functionals per level
  std::vector<WChainLevel> seed;
  std::vector<MatrixSubspace> pool;                   // sorted by dim descending
  std::vector<std::vector<std::vector<Vec>>> images;  // [level][pool index][basis]
  std::vector<std::vector<char>> usable;              // [level][pool index]
  std::vector<WChainLevel> result;
  int deepest = -1;

  Vec image_vec(std::size_t lvl, const Vec& flat) const {
    const RatMatrix& f = funcs[lvl];
    Vec out(f.rows(), Rational(0));
    for (std::size_t c = 0; c < flat.size(); ++c) {
      if (flat[c] == 0) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        const Rational& fc = f.at(r, c);
        if (fc != 0) out[r] += fc * flat[c];
      }
    }
    return out;
  }

  std::vector<Vec> image_of(std::size_t lvl, const MatrixSubspace& m) const {
    std::vector<Vec> out;
    for (std::size_t b = 0; b < m.dim(); ++b)
      out.push_back(image_vec(lvl, m.flat().basis().row(b)));
    return out;
  }

  void prepare_level(std::size_t lvl) {
    if (!images[lvl].empty()) return;
    images[lvl].reserve(pool.size());
    usable[lvl].assign(pool.size(), 0);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      images[lvl].push_back(image_of(lvl, pool[i]));
      ImageEchelon ech;
      bool ok = true;
      for (const Vec& v : images[lvl][i])
        if (!ech.add(v)) {
          ok = false;
          break;
        }
      usable[lvl][i] = ok ? 1 : 0;
    }
  }

  bool run(std::size_t lvl, const MatrixSubspace& w) {
    if (lvl == targets.size()) return true;
    const auto [d, s] = targets[lvl];

    if (lvl < seed.size()) {
      const MatrixSubspace& next = seed[lvl].space;
      if (seed[lvl].dim != d || seed[lvl].s != s) return false;
      if (static_cast<int>(next.dim()) != d || !next.contains(w)) return false;
      ImageEchelon seed_ech;
      for (const Vec& v : image_of(lvl, next))
        if (!seed_ech.add(v)) return false;
      if (next.conjugate(model.involution) != next) return false;
      result.push_back({d, s, next});
      deepest = std::max<int>(deepest, static_cast<int>(lvl));
      if (run(lvl + 1, next)) return true;
      result.pop_back();
      return false;
    }

    // Re-seat the inherited space in this level's quotient; nesting of the
    // flag subspaces guarantees it stays transversal.
    ImageEchelon ech;
    for (const Vec& v : image_of(lvl, w))
      if (!ech.add(v)) return false;

    prepare_level(lvl);
    return extend(lvl, w, ech, 0);
  }

  bool extend(std::size_t lvl, const MatrixSubspace& w, const ImageEchelon& ech, std::size_t start) {
    const auto [d, s] = targets[lvl];
    if (static_cast<int>(w.dim()) == d) {
      result.push_back({d, s, w});
      deepest = std::max<int>(deepest, static_cast<int>(lvl));
      if (run(lvl + 1, w)) return true;
      result.pop_back();
      return false;
    }
    const int need = d - static_cast<int>(w.dim());
    for (std::size_t bi = start; bi < pool.size(); ++bi) {
      if (static_cast<int>(pool[bi].dim()) > need || !usable[lvl][bi]) continue;
      ImageEchelon ech2 = ech;
      bool ok = true;
      for (const Vec& v : images[lvl][bi])
        if (!ech2.add(v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (extend(lvl, w.sum(pool[bi]), ech2, bi + 1)) return true;
    }
    return false;
  }
};

}  // namespace

WChainResult search_w_chain(const GroupModel& model, bool use_seed) {
  ChainSearcher searcher{model};
  searcher.targets = chain_targets(model);
  // Row space of each level's restriction constraints: h_s is its kernel, so
  // transversality to h_s is injectivity of these functionals.
  for (const auto& [d, s] : searcher.targets)
    searcher.funcs.push_back(row_space(restriction_rows(model, s)));
  if (use_seed) searcher.seed = seed_levels(model);
  searcher.pool = candidate_modules(model);
  searcher.images.resize(searcher.targets.size());
  searcher.usable.resize(searcher.targets.size());

  WChainResult res;
  res.found = searcher.run(0, MatrixSubspace(model.n));
  res.deepest_completed = searcher.deepest;
  if (res.found) {
    res.chain.group = model.name;
    res.chain.levels = searcher.result;
  }
  return res;
}

ThickeningReport thickening_check(const GroupModel& model, const WChain& chain) {
  ThickeningReport rep;
  rep.group = model.name;
  const int n = model.n;
  const int dim_g = static_cast<int>(model.algebra.dim());
  rep.dim_s = n + n * n - dim_g;
  rep.pass = true;

  for (const WChainLevel& lvl : chain.levels) {
    MatrixSubspace hs = compute_hk(model, lvl.s);
    if (!hs.contains(model.algebra)) throw std::logic_error("thickening_check: algebra not inside h_s");

    ThickeningLevel t;
    t.s = lvl.s;
    t.dim_w = static_cast<int>(lvl.space.dim());

    MatrixSubspace w_plus_g = lvl.space.sum(model.algebra);
    t.dim_z = (lvl.s + 1) + static_cast<int>(w_plus_g.dim()) - dim_g;
    t.dim_intersection = (lvl.s + 1) + static_cast<int>(hs.intersect(w_plus_g).dim()) - dim_g;
    t.spans = hs.sum(lvl.space).dim() == static_cast<std::size_t>(n) * n;
    t.pass = t.dim_intersection == lvl.s + 1 && t.spans;
    rep.pass = rep.pass && t.pass;
    rep.levels.push_back(t);
  }
  return rep;
}

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
  return nlohmann::ordered_json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational_from_json: expected [num, den]");
  Rational q(j[0].get<std::string>() + "/" + j[1].get<std::string>());
  q.canonicalize();
  return q;
}

}  // namespace

std::string wchain_to_json(const WChain& chain) {
  nlohmann::ordered_json j;
  j["group"] = chain.group;
  const std::size_t n = chain.levels.empty() ? 0 : chain.levels.front().space.matrix_size();
  j["matrix_size"] = n;
  j["levels"] = nlohmann::ordered_json::array();
  for (const WChainLevel& lvl : chain.levels) {
    nlohmann::ordered_json jl;
    jl["dim"] = lvl.dim;
    jl["flag_index"] = lvl.s;
    jl["basis"] = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < lvl.space.dim(); ++b) {
      RatMatrix m = lvl.space.basis_matrix(b);
      nlohmann::ordered_json jm = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_json(m.at(i, k)));
        jm.push_back(row);
      }
      jl["basis"].push_back(jm);
    }
    j["levels"].push_back(jl);
  }
  return j.dump(2) + "\n";
}

WChain wchain_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  WChain chain;
  chain.group = j.at("group").get<std::string>();
  const std::size_t n = j.at("matrix_size").get<std::size_t>();
  for (const auto& jl : j.at("levels")) {
    WChainLevel lvl;
    lvl.dim = jl.at("dim").get<int>();
    lvl.s = jl.at("flag_index").get<int>();
    std::vector<RatMatrix> mats;
    for (const auto& jm : jl.at("basis")) {
      RatMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = rational_from_json(jm.at(i).at(k));
      mats.push_back(m);
    }
    lvl.space = MatrixSubspace::span(n, mats);
    chain.levels.push_back(lvl);
  }
  return chain;
}

}  // namespace calib
