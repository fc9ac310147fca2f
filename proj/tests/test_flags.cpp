#include <doctest.h>

#include <vector>

#include "calib/flags.hpp"
#include "calib/matrix.hpp"
#include "calib/rational.hpp"
#include "calib/subspace.hpp"

using namespace calib;

TEST_CASE("group models carry consistent structural data") {
  const GroupModel& g2 = group_model(Group::G2);
  CHECK(g2.n == 7);
  CHECK(g2.algebra.dim() == 14);
  CHECK(g2.su2.dim() == 0);
  CHECK(g2.involution * g2.involution == RatMatrix::identity(7));
  CHECK(g2.algebra.conjugate(g2.involution) == g2.algebra);

  const GroupModel& s7 = group_model(Group::Spin7);
  CHECK(s7.n == 8);
  CHECK(s7.algebra.dim() == 21);
  CHECK(s7.su2.dim() == 3);
  CHECK(s7.involution * s7.involution == RatMatrix::identity(8));
  CHECK(s7.algebra.conjugate(s7.involution) == s7.algebra);
  // The su(2) is inside the stabilizer algebra and closed under bracket.
  CHECK(s7.algebra.contains(s7.su2));
  for (const RatMatrix& b : s7.su2.basis_matrices()) CHECK(s7.su2.bracket_stable_under(b));
}

TEST_CASE("partial stabilizers interpolate from everything to the algebra") {
  const GroupModel& model = group_model(Group::G2);
  CHECK(compute_hk(model, 0).dim() == 49);
  CHECK(compute_hk(model, model.n) == model.algebra);

  MatrixSubspace prev = compute_hk(model, 0);
  for (int k = 1; k <= model.n; ++k) {
    MatrixSubspace hk = compute_hk(model, k);
    CHECK(prev.contains(hk));
    prev = hk;
  }
}

TEST_CASE("matrices killing the first k coordinates are always partial stabilizers") {
  const GroupModel& model = group_model(Group::G2);
  const int k = 3;
  MatrixSubspace hk = compute_hk(model, k);
  // x with the first k columns zero satisfies x e_j = 0 for j < k, so every
  // evaluation of gl_act(x, a) on vectors from the flag vanishes term by term.
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = k; j < 7; ++j) {
      RatMatrix e(7, 7);
      e.at(i, j) = 1;
      mats.push_back(e);
    }
  MatrixSubspace killer = MatrixSubspace::span(7, mats);
  CHECK(killer.dim() == 7 * (7 - k));
  CHECK(hk.contains(killer));
}

TEST_CASE("character sequence bookkeeping is internally consistent") {
  const GroupModel& model = group_model(Group::G2);
  FlagReport rep = character_sequence(model);
  CHECK(rep.n == 7);
  CHECK(rep.dim_g == 14);
  CHECK(rep.dim_s == 7 + 49 - 14);
  REQUIRE(rep.levels.size() == 8);  // levels k = 0..n inclusive
  int sum = 0;
  int prev_codim = 0;
  for (const FlagLevel& lvl : rep.levels) {
    CHECK(lvl.codim == 49 - lvl.dim_hk);
    CHECK(lvl.increment == lvl.codim - prev_codim);
    CHECK(lvl.increment >= 0);
    CHECK(lvl.polar_dim == 7 + lvl.dim_hk - 14);
    CHECK(lvl.ext_rank == lvl.polar_dim - (lvl.k + 1));
    prev_codim = lvl.codim;
    if (lvl.k < rep.n) sum += lvl.codim;
  }
  CHECK(sum == rep.cartan_sum);
  CHECK(rep.regular == (rep.cartan_sum == rep.ideal_rank));

  auto [polar3, ext3] = flag_dims(model, 3);
  CHECK(polar3 == rep.levels[3].polar_dim);
  CHECK(ext3 == rep.levels[3].ext_rank);
}

TEST_CASE("invariant blocks decompose the matrix space") {
  for (Group g : {Group::G2, Group::Spin7}) {
    const GroupModel& model = group_model(g);
    std::vector<MatrixSubspace> blocks = invariant_blocks(model);
    std::size_t total = 0;
    MatrixSubspace sum(static_cast<std::size_t>(model.n));
    for (const MatrixSubspace& b : blocks) {
      total += b.dim();
      sum = sum.sum(b);
      CHECK(b.conjugate(model.involution) == b);
      for (const RatMatrix& s : model.su2.basis_matrices()) CHECK(b.bracket_stable_under(s));
    }
    CHECK(total == static_cast<std::size_t>(model.n * model.n));
    CHECK(sum.dim() == total);  // direct sum: blocks are independent
  }
}

TEST_CASE("bracket orbits are the smallest invariant envelopes") {
  const GroupModel& s7 = group_model(Group::Spin7);

  RatMatrix corner(8, 8);
  corner.at(0, 4) = 1;
  MatrixSubspace orbit = bracket_orbit(s7, corner);
  CHECK(orbit.dim() == 4);
  CHECK(orbit.contains(corner));
  for (const RatMatrix& s : s7.su2.basis_matrices()) CHECK(orbit.bracket_stable_under(s));

  RatMatrix diag(8, 8);
  diag.at(0, 0) = 1;
  CHECK(bracket_orbit(s7, diag).dim() == 1);

  // Without an su(2) the orbit is just the line through the seed.
  const GroupModel& g2 = group_model(Group::G2);
  RatMatrix any(7, 7);
  any.at(2, 5) = 1;
  CHECK(bracket_orbit(g2, any).dim() == 1);
}

TEST_CASE("candidate modules are invariant and deterministically ordered") {
  const GroupModel& model = group_model(Group::Spin7);
  std::vector<MatrixSubspace> pool = candidate_modules(model);
  CHECK_FALSE(pool.empty());
  for (std::size_t i = 1; i < pool.size(); ++i) CHECK(pool[i - 1].dim() >= pool[i].dim());
  for (const MatrixSubspace& c : pool) {
    CHECK(c.conjugate(model.involution) == c);
    for (const RatMatrix& s : model.su2.basis_matrices()) CHECK(c.bracket_stable_under(s));
  }
  // Deterministic: a second enumeration is identical.
  CHECK(pool == candidate_modules(model));
}

TEST_CASE("transversality certificates reject subspaces meeting the stabilizer") {
  const GroupModel& model = group_model(Group::G2);
  // A line inside h_3 itself can never be transversal to it.
  MatrixSubspace h3 = compute_hk(model, 3);
  MatrixSubspace line = MatrixSubspace::span(7, {h3.basis_matrix(0)});
  TransversalCertificate cert = verify_transversal(model, line, 3);
  CHECK_FALSE(cert.transversal);
  CHECK_FALSE(cert.pass);

  // The seed levels do pass.
  std::vector<WChainLevel> seeds = seed_levels(model);
  REQUIRE(seeds.size() >= 2);
  for (const WChainLevel& lvl : seeds) {
    TransversalCertificate ok = verify_transversal(model, lvl.space, lvl.s);
    CHECK(ok.pass);
    CHECK(ok.dim_w == lvl.dim);
    CHECK(ok.dim_matches_codim);
    CHECK(ok.involution_invariant);
  }

  // Wrong dimension for the level is flagged even when disjoint from h_s.
  TransversalCertificate wrong = verify_transversal(model, seeds[0].space, 4);
  CHECK_FALSE(wrong.dim_matches_codim);
  CHECK_FALSE(wrong.pass);
}

TEST_CASE("thickening check fails on corrupted chains") {
  const GroupModel& model = group_model(Group::G2);
  WChain chain{model.name, seed_levels(model)};
  ThickeningReport good = thickening_check(model, chain);
  CHECK(good.pass);
  REQUIRE(good.levels.size() == 2);
  CHECK(good.levels[0].dim_intersection == good.levels[0].s + 1);
  CHECK(good.levels[0].spans);
  CHECK(good.levels[0].dim_z == good.levels[0].s + 1 + good.levels[0].dim_w);

  // Inflate the top space by a partial-stabilizer direction it misses: the
  // intersection dimension overshoots and the level fails.
  WChain broken = chain;
  MatrixSubspace h4 = compute_hk(model, broken.levels[1].s);
  MatrixSubspace wg = broken.levels[1].space.sum(model.algebra);
  std::size_t pick = 0;
  while (pick < h4.dim() && wg.contains(h4.basis_matrix(pick))) ++pick;
  REQUIRE(pick < h4.dim());
  broken.levels[1].space =
      broken.levels[1].space.sum(MatrixSubspace::span(7, {h4.basis_matrix(pick)}));
  ThickeningReport bad = thickening_check(model, broken);
  CHECK_FALSE(bad.pass);
}
