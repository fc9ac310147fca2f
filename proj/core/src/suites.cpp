#include "calib/suites.hpp"

#include <array>
#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calib/catalog.hpp"
#include "calib/flags.hpp"
#include "calib/integral.hpp"
#include "calib/stabilizer.hpp"
#include "calib/subspace.hpp"

namespace calib {
namespace {

void add(std::vector<Certificate>& certs, std::string id, std::string description,
         std::string computed, std::string expected) {
  bool pass = computed == expected;
  certs.push_back(
      {std::move(id), std::move(description), std::move(computed), std::move(expected), pass});
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::string seq_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string mat_rows_str(const RatMatrix& m) {
  if (m.rows() == 0) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    out += vec_str(m.row(i));
  }
  return out;
}

std::string tcert_str(const TransversalCertificate& t) {
  return "s=" + std::to_string(t.s) + " dim=" + std::to_string(t.dim_w) + " codim=" +
         std::to_string(t.codim_hs) + " complement=" + yn(t.transversal) + " involution=" +
         yn(t.involution_invariant) + " su2=" + yn(t.su2_invariant);
}

std::string thicken_str(const ThickeningReport& th) {
  std::vector<int> z, cap;
  bool spans = true;
  for (const auto& lvl : th.levels) {
    z.push_back(lvl.dim_z);
    cap.push_back(lvl.dim_intersection);
    spans = spans && lvl.spans;
  }
  return "z=" + seq_str(z) + " cap=" + seq_str(cap) + " spans=" + yn(spans);
}

RatMatrix embed_matrix(const RatMatrix& x, std::size_t n) {
  RatMatrix m(n, n);
  std::size_t off = n - x.rows();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m.at(off + i, off + j) = x.at(i, j);
  return m;
}

// Shared certificates: Lie-algebra hygiene of the stabilizer of the model's
// generating forms, first Spencer cohomology, and the Cartan flag data.
void algebra_certificates(std::vector<Certificate>& certs, const GroupModel& model, int dim_g,
                          int h0) {
  int fixed = 0;
  for (const auto& x : model.algebra.basis_matrices()) {
    bool ok = true;
    for (const auto& a : model.generators) ok = ok && gl_act(x, a).is_zero();
    if (ok) ++fixed;
  }
  add(certs, "equivariance.generators_fixed",
      "every stabilizer basis element annihilates every generating form",
      std::to_string(fixed) + "/" + std::to_string(dim_g),
      std::to_string(dim_g) + "/" + std::to_string(dim_g));

  add(certs, "stab.skew", "stabilizer algebra consists of skew-symmetric matrices",
      yn(so_subspace(model.n).contains(model.algebra)), "true");

  bool closed = true;
  for (const auto& a : model.algebra.basis_matrices())
    closed = closed && model.algebra.bracket_stable_under(a);
  add(certs, "stab.bracket_closed", "stabilizer algebra is closed under the matrix bracket",
      yn(closed), "true");

  add(certs, "stab.involution_member",
      "the signature involution preserves every generating form",
      yn(stabilizes(model.involution, model.generators)), "true");

  TorsionReport tr = torsion_report(model.algebra);
  add(certs, "torsion.h0", "dimension of the degree-one Spencer cokernel of the stabilizer",
      std::to_string(tr.dim_h0), std::to_string(h0));
  add(certs, "torsion.prolongation", "first prolongation of the stabilizer vanishes",
      std::to_string(tr.dim_prolongation), "0");

  QuotientDimCheck q = subgroup_quotient_dim_check(model.algebra);
  add(certs, "torsion.quotient_identity",
      "Spencer cokernel dimension equals n * (dim so(n) - dim g)", std::to_string(q.computed_h0),
      std::to_string(q.expected_h0));
}

void flag_certificates(std::vector<Certificate>& certs, const GroupModel& model,
                       const FlagReport& fr, const std::string& want_chars,
                       const std::string& want_cartan) {
  std::vector<int> chars;
  for (int k = 0; k < model.n; ++k) chars.push_back(fr.levels[k].codim);
  add(certs, "flags.characters", "polar codimensions along the coordinate flag, levels 0..n-1",
      seq_str(chars), want_chars);

  add(certs, "flags.cartan_test",
      "character sum equals the number of independent first-order conditions",
      "sum=" + std::to_string(fr.cartan_sum) + " rank=" + std::to_string(fr.ideal_rank),
      want_cartan);

  std::vector<MatrixSubspace> hs;
  for (int k = 0; k <= model.n; ++k) hs.push_back(compute_hk(model, k));
  bool nested = true;
  for (int k = 0; k < model.n; ++k) nested = nested && hs[k].contains(hs[k + 1]);
  add(certs, "flags.nested", "flag stabilizers decrease along the coordinate flag", yn(nested),
      "true");
  add(certs, "flags.top_level_algebra",
      "level-n flag stabilizer is exactly the form stabilizer",
      yn(hs[static_cast<std::size_t>(model.n)] == model.algebra), "true");
}

void wchain_certificates(std::vector<Certificate>& certs, const GroupModel& model,
                         const std::string& want_dims, const std::string& want_thicken) {
  WChainResult res = search_w_chain(model, true);
  std::string dims;
  if (res.found) {
    std::vector<int> d;
    for (const auto& lvl : res.chain.levels) d.push_back(lvl.dim);
    dims = "found dims=" + seq_str(d);
  } else {
    dims = "failed deepest=" + std::to_string(res.deepest_completed);
  }
  add(certs, "wchain.found", "nested invariant complements exist at every flag level", dims,
      "found dims=" + want_dims);

  int verified = 0;
  int total = static_cast<int>(res.chain.levels.size());
  for (const auto& lvl : res.chain.levels)
    if (verify_transversal(model, lvl.space, lvl.s).pass) ++verified;
  add(certs, "wchain.verified",
      "every chain member re-verifies as an invariant complement of its flag stabilizer",
      std::to_string(verified) + "/" + std::to_string(total), "4/4");

  if (res.found) {
    ThickeningReport th = thickening_check(model, res.chain);
    add(certs, "wchain.thickening",
        "thickened cells meet each polar space in the expected dimension and jointly span",
        thicken_str(th), want_thicken);
  } else {
    add(certs, "wchain.thickening",
        "thickened cells meet each polar space in the expected dimension and jointly span",
        "no chain", want_thicken);
  }

  WChainResult rerun = search_w_chain(model, true);
  add(certs, "wchain.deterministic", "a second search reproduces the chain byte for byte",
      yn(res.found == rerun.found && wchain_to_json(res.chain) == wchain_to_json(rerun.chain)),
      "true");
}

void g2_certificates(std::vector<Certificate>& certs) {
  const CalibrationCatalog& cat = catalog();
  const GroupModel& model = group_model(Group::G2);
  const int n = 7;

  add(certs, "catalog.hodge_pair", "the hodge star exchanges the two generating forms",
      yn(hodge(cat.phi) == cat.star_phi && hodge(cat.star_phi) == cat.phi), "true");

  int chi_good = 0;
  for (int j = 0; j < n; ++j) {
    AlternatingForm want = interior(basis_vector(n, j), cat.star_phi);
    want *= Rational(-1);
    if (cat.chi.comps[static_cast<std::size_t>(j)] == want) ++chi_good;
  }
  add(certs, "catalog.chi_contraction",
      "each component of chi equals minus the coordinate contraction of the 4-form",
      std::to_string(chi_good) + "/7", "7/7");
  add(certs, "catalog.chi_independent", "the seven components of chi are linearly independent",
      yn(independent_components(cat.chi)), "true");

  add(certs, "cross.e0_e3", "two-fold cross product of the first and fourth basis vectors",
      vec_str(cross2(basis_vector(n, 0), basis_vector(n, 3))), vec_str(basis_vector(n, 4)));

  MatrixSubspace stab_phi = stabilizer({cat.phi}, n);
  add(certs, "stab.dim", "stabilizer algebra dimension of the 3-form",
      std::to_string(stab_phi.dim()), "14");
  add(certs, "stab.determines_dual", "the 3-form and its hodge dual have the same stabilizer",
      yn(stab_phi == model.algebra), "true");

  TorsionReport so7 = torsion_report(so_subspace(n));
  add(certs, "torsion.so_h0", "degree-one Spencer cokernel of so(7) vanishes",
      std::to_string(so7.dim_h0), "0");
  add(certs, "torsion.so_prolongation", "first prolongation of so(7) vanishes",
      std::to_string(so7.dim_prolongation), "0");

  algebra_certificates(certs, model, 14, 49);

  ConstraintSystem sys_phi = ideal_constraint_system({cat.phi}, n);
  add(certs, "rank.d_3form", "independent first-order conditions from the 3-form alone",
      std::to_string(sys_phi.total_rank), "35");

  ConstraintSystem sys = ideal_constraint_system({cat.phi, cat.star_phi}, n);
  add(certs, "rank.full_ideal",
      "independent first-order conditions from both generators, with per-generator gains",
      std::to_string(sys.total_rank) + " increments " + seq_str(sys.generator_rank_increments),
      "49 increments (35, 14)");

  ConstraintSystem rev = ideal_constraint_system({cat.star_phi, cat.phi}, n);
  add(certs, "rank.order_independent", "the stacked rank does not depend on generator order",
      std::to_string(rev.total_rank), "49");

  AdmissibilityCertificate adm = strong_admissibility_check(sys, 49);
  add(certs, "ideal.strongly_admissible",
      "first-order condition count matches the Spencer cokernel dimension",
      std::to_string(adm.constraint_rank), std::to_string(adm.h0_dim));

  std::vector<int> tangential;
  for (int j = 0; j < n; ++j) {
    tangential.push_back(sys.vars.index(j, 0, 1));
    tangential.push_back(sys.vars.index(j, 0, 2));
    tangential.push_back(sys.vars.index(j, 1, 2));
  }
  add(certs, "freedom.tangential",
      "plane coefficients along the calibrated 3-plane stay free on the solution variety",
      yn(coordinate_freedom(sys, tangential)), "true");
  std::vector<int> everything;
  for (int i = 0; i < sys.vars.count(); ++i) everything.push_back(i);
  add(certs, "freedom.not_universal", "the full coefficient set is constrained",
      yn(coordinate_freedom(sys, everything)), "false");

  FlagReport fr = character_sequence(model);
  flag_certificates(certs, model, fr, "(0, 0, 0, 1, 5, 15, 28)", "sum=49 rank=49");

  std::string pe;
  for (int k = 3; k <= 6; ++k) {
    if (k > 3) pe += " ";
    const FlagLevel& lvl = fr.levels[static_cast<std::size_t>(k)];
    pe += "(" + std::to_string(lvl.polar_dim) + "," + std::to_string(lvl.ext_rank) + ")";
  }
  add(certs, "flags.polar_extension", "polar and extension dimensions at levels 3..6",
      pe, "(41,37) (37,32) (27,21) (14,7)");
  add(certs, "flags.model_dim", "dimension of the thickened model space",
      std::to_string(fr.dim_s), "42");

  VectorSubspace ps = polar_space(cat.chi, {basis_vector(n, 0), basis_vector(n, 1)});
  RatMatrix want_polar = RatMatrix::from_rows(
      {basis_vector(n, 0), basis_vector(n, 1), basis_vector(n, 2)});
  add(certs, "polar.chi_plane", "polar space of the coordinate 2-plane under chi",
      mat_rows_str(ps.basis()), mat_rows_str(want_polar));

  int equi = 0;
  for (const auto& x : model.algebra.basis_matrices()) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      AlternatingForm rhs(n, 3);
      for (int k = 0; k < n; ++k) {
        AlternatingForm t = cat.chi.comps[static_cast<std::size_t>(k)];
        t *= x.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        rhs += t;
      }
      ok = gl_act(x, cat.chi.comps[static_cast<std::size_t>(j)]) == rhs;
    }
    if (ok) ++equi;
  }
  add(certs, "equivariance.chi",
      "the stabilizer acts on the components of chi by its own matrix entries",
      std::to_string(equi) + "/14", "14/14");

  std::vector<WChainLevel> seeds = seed_levels(model);
  add(certs, "transversal.w1", "hand-picked level-3 complement verifies",
      tcert_str(verify_transversal(model, seeds[0].space, seeds[0].s)),
      "s=3 dim=1 codim=1 complement=true involution=true su2=true");
  add(certs, "transversal.w5", "hand-picked level-4 complement verifies",
      tcert_str(verify_transversal(model, seeds[1].space, seeds[1].s)),
      "s=4 dim=5 codim=5 complement=true involution=true su2=true");
  add(certs, "transversal.nested_seeds", "the level-3 complement sits inside the level-4 one",
      yn(seeds[1].space.contains(seeds[0].space)), "true");

  WChain seed_chain{model.name, seeds};
  add(certs, "thicken.seeds",
      "thickened cells over the hand-picked complements meet each polar space correctly",
      thicken_str(thickening_check(model, seed_chain)), "z=(5, 10) cap=(4, 5) spans=true");

  wchain_certificates(certs, model, "(1, 5, 15, 28)",
                      "z=(5, 10, 21, 35) cap=(4, 5, 6, 7) spans=true");

  WChainResult res = search_w_chain(model, true);
  bool keeps_seeds = res.found && res.chain.levels.size() >= 2 &&
                     res.chain.levels[0].space == seeds[0].space &&
                     res.chain.levels[1].space == seeds[1].space;
  add(certs, "wchain.extends_seeds", "the found chain starts from the hand-picked complements",
      yn(keeps_seeds), "true");
}

void spin7_certificates(std::vector<Certificate>& certs) {
  const CalibrationCatalog& cat = catalog();
  const GroupModel& model = group_model(Group::Spin7);
  const int n = 8;

  AlternatingForm phi8 = shift_embed(cat.phi, 1, n);
  AlternatingForm assembled = wedge(basis_form(n, {0}), phi8) + shift_embed(cat.star_phi, 1, n);
  add(certs, "catalog.psi_assembly",
      "the 4-form splits as dx0 wedge 3-form plus the dual 4-form", yn(cat.psi == assembled),
      "true");

  AlternatingForm dvol4 = basis_form(4, {0, 1, 2, 3});
  bool wedges_ok = true;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j; k < 3; ++k) {
      AlternatingForm prod = wedge(cat.sd_triple[j], cat.sd_triple[k]);
      AlternatingForm want(4, 4);
      if (j == k) {
        want = dvol4;
        want *= Rational(2);
      }
      wedges_ok = wedges_ok && prod == want;
    }
  add(certs, "catalog.sd_wedge", "the self-dual triple is wedge-orthonormal", yn(wedges_ok),
      "true");

  add(certs, "catalog.sd_assembly", "the 4-form rebuilds from the self-dual triple",
      yn(build_spin7_from_sd_triple(cat.sd_triple) == cat.psi), "true");

  std::string reject;
  try {
    build_spin7_from_sd_triple({cat.sd_triple[0], cat.sd_triple[0], cat.sd_triple[2]});
    reject = "accepted";
  } catch (const std::invalid_argument&) {
    reject = "rejected";
  }
  add(certs, "catalog.sd_reject", "a repeated 2-form is rejected by the assembly check", reject,
      "rejected");

  add(certs, "cross.e0_e1_e2", "triple cross product of the first three basis vectors",
      vec_str(triple_cross(basis_vector(n, 0), basis_vector(n, 1), basis_vector(n, 2))),
      vec_str(basis_vector(n, 3)));
  add(certs, "cross.e4_e5_e6", "triple cross product of the last block's first three vectors",
      vec_str(triple_cross(basis_vector(n, 4), basis_vector(n, 5), basis_vector(n, 6))),
      vec_str(basis_vector(n, 7)));

  {
    SeededTuples rng(7);
    Rational comp_max(0), triple_max(0);
    for (int t = 0; t < 50; ++t) {
      Vec a = rng.vector(n), b = rng.vector(n);
      Rational na(0), nb(0), nab(0);
      Vec ab = octonion_product(a, b);
      for (int i = 0; i < n; ++i) {
        na += a[i] * a[i];
        nb += b[i] * b[i];
        nab += ab[i] * ab[i];
      }
      Rational res(abs(Rational(nab - na * nb)));
      if (res > comp_max) comp_max = res;

      Vec u = rng.vector(n), v = rng.vector(n), w = rng.vector(n), z = rng.vector(n);
      Vec ub = octonion_conjugate(v);
      Vec lhs = octonion_product(octonion_product(w, ub), u);
      Vec rhs = octonion_product(octonion_product(u, ub), w);
      Rational pairing(0);
      for (int i = 0; i < n; ++i) pairing += Rational(lhs[i] - rhs[i]) / 2 * z[i];
      Rational res2(abs(Rational(pairing - evaluate(cat.psi, {u, v, w, z}))));
      if (res2 > triple_max) triple_max = res2;
    }
    add(certs, "octonion.composition",
        "max |(ab)(ab) - aa bb| of the octonion product over 50 seeded rational pairs (seed 7)",
        to_string(comp_max), "0");
    add(certs, "octonion.triple_form",
        "max |<u x v x w, z> - 4-form(u,v,w,z)| over 50 seeded rational tuples (seed 7)",
        to_string(triple_max), "0");
  }

  {
    int match = 0;
    const std::vector<IndexMask> masks = all_masks(n, 4);
    for (IndexMask m : masks) {
      std::vector<int> idx = mask_indices(m);
      Vec f = fourfold_cross_imaginary(basis_vector(n, idx[0]), basis_vector(n, idx[1]),
                                       basis_vector(n, idx[2]), basis_vector(n, idx[3]));
      bool ok = true;
      for (int k = 0; k < 7; ++k) ok = ok && f[static_cast<std::size_t>(k)] == cat.tau.comps[static_cast<std::size_t>(k)].coeff(m);
      if (ok) ++match;
    }
    add(certs, "catalog.tau_fourfold",
        "tau coefficients equal the imaginary fourfold cross product on every coordinate 4-plane",
        std::to_string(match) + "/" + std::to_string(masks.size()), "70/70");
  }

  add(certs, "stab.dim", "stabilizer algebra dimension of the 4-form",
      std::to_string(model.algebra.dim()), "21");

  MatrixSubspace sd_stab =
      stabilizer({cat.sd_triple[0], cat.sd_triple[1], cat.sd_triple[2]}, 4);
  add(certs, "stab.sd_triple_dim", "joint stabilizer dimension of the self-dual triple",
      std::to_string(sd_stab.dim()), "3");

  add(certs, "stab.su2_inside",
      "the block-diagonal su(2) from the self-dual triple sits inside the stabilizer",
      "dim=" + std::to_string(model.su2.dim()) + " contained=" +
          yn(model.algebra.contains(model.su2)),
      "dim=3 contained=true");

  const GroupModel& g2 = group_model(Group::G2);
  add(certs, "stab.g2_inside",
      "the 3-form stabilizer embeds block-diagonally into the 4-form stabilizer",
      yn(model.algebra.contains(embed_trailing_block(g2.algebra, n))), "true");

  algebra_certificates(certs, model, 21, 56);

  ConstraintSystem sys = ideal_constraint_system({cat.psi}, n);
  add(certs, "rank.d_4form", "independent first-order conditions from the 4-form",
      std::to_string(sys.total_rank), "56");

  AdmissibilityCertificate adm = strong_admissibility_check(sys, 56);
  add(certs, "ideal.strongly_admissible",
      "first-order condition count matches the Spencer cokernel dimension",
      std::to_string(adm.constraint_rank), std::to_string(adm.h0_dim));

  FlagReport fr = character_sequence(model);
  flag_certificates(certs, model, fr, "(0, 0, 0, 0, 1, 5, 15, 35)", "sum=56 rank=56");
  add(certs, "flags.top_codim", "codimension of the stabilizer at the top flag level",
      std::to_string(fr.levels[static_cast<std::size_t>(n)].codim), "43");
  add(certs, "flags.model_dim", "dimension of the thickened model space",
      std::to_string(fr.dim_s), "51");

  VectorSubspace ps =
      polar_space(cat.tau, {basis_vector(n, 0), basis_vector(n, 1), basis_vector(n, 2)});
  RatMatrix want_polar = RatMatrix::from_rows({basis_vector(n, 0), basis_vector(n, 1),
                                               basis_vector(n, 2), basis_vector(n, 3)});
  add(certs, "polar.tau_plane", "polar space of the coordinate 3-plane under tau",
      mat_rows_str(ps.basis()), mat_rows_str(want_polar));

  add(certs, "equivariance.tau_independent", "the seven components of tau span independently",
      yn(independent_components(cat.tau)), "true");

  std::vector<RatMatrix> basis = model.algebra.basis_matrices();
  std::vector<RatMatrix> reps;
  int skew_ok = 0;
  for (const auto& x : basis) {
    auto t = intertwiner(x, cat.tau);
    if (!t) continue;
    reps.push_back(*t);
    if ((*t + t->transpose()).is_zero()) ++skew_ok;
  }
  add(certs, "equivariance.tau_intertwiner",
      "each stabilizer element acts on the span of tau through a skew matrix",
      std::to_string(reps.size()) + " solved, " + std::to_string(skew_ok) + " skew",
      "21 solved, 21 skew");

  int hom_ok = 0, hom_total = 0;
  if (reps.size() == basis.size()) {
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        ++hom_total;
        auto t = intertwiner(commutator(basis[a], basis[b]), cat.tau);
        if (t && *t == commutator(reps[a], reps[b])) ++hom_ok;
      }
  }
  add(certs, "equivariance.tau_hom", "the tau action respects every basis bracket",
      std::to_string(hom_ok) + "/" + std::to_string(hom_total), "210/210");

  int restrict_ok = 0;
  for (const auto& x : g2.algebra.basis_matrices()) {
    auto t = intertwiner(embed_matrix(x, n), cat.tau);
    if (t && *t == x) ++restrict_ok;
  }
  add(certs, "equivariance.tau_restricts",
      "on the embedded 3-form stabilizer the tau action is the defining representation",
      std::to_string(restrict_ok) + "/14", "14/14");

  wchain_certificates(certs, model, "(1, 5, 15, 35)",
                      "z=(6, 11, 22, 43) cap=(5, 6, 7, 8) spans=true");
}

void su3_certificates(std::vector<Certificate>& certs) {
  const CalibrationCatalog& cat = catalog();
  std::vector<AlternatingForm> forms = {cat.su3_alpha, cat.su3_omega, cat.su3_upsilon_re,
                                        cat.su3_upsilon_im};
  MatrixSubspace stab = stabilizer(forms, 7);
  add(certs, "stab.dim", "joint stabilizer dimension of the unitary structure forms",
      std::to_string(stab.dim()), "8");
  add(certs, "stab.inside_g2", "the joint stabilizer sits inside the 3-form stabilizer",
      yn(group_model(Group::G2).algebra.contains(stab)), "true");
  add(certs, "catalog.phi_decomposition",
      "the 3-form splits as omega wedge alpha plus the real volume part",
      yn(catalog().phi == wedge(cat.su3_omega, cat.su3_alpha) + cat.su3_upsilon_re), "true");
}

}  // namespace

RunReport run_verify_suite(const std::string& which) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Certificate> certs;
  if (which == "g2") {
    g2_certificates(certs);
  } else if (which == "spin7") {
    spin7_certificates(certs);
  } else if (which == "su3") {
    su3_certificates(certs);
  } else {
    throw std::invalid_argument("unknown suite: " + which);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  return make_report(which, std::move(certs), ms);
}

RunReport run_identity_suite(const IdentityOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("samples must be positive");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Certificate> certs;
  std::string tag = " over " + std::to_string(opt.samples) + " seeded rational tuples (seed " +
                    std::to_string(opt.seed) + ")";
  if (opt.run_n7) {
    SeededTuples st(opt.seed);
    Rational worst(0);
    for (int i = 0; i < opt.samples; ++i) {
      Vec u = st.vector(7), v = st.vector(7), w = st.vector(7);
      Rational r = assoc_residual(u, v, w);
      Rational a(abs(r));
      if (a > worst) worst = a;
    }
    add(certs, "identity.associative",
        "max |phi^2 + |chi|^2 - vol^2|" + tag, to_string(worst), "0");
  }
  if (opt.run_n8) {
    SeededTuples st(opt.seed);
    Rational worst(0);
    for (int i = 0; i < opt.samples; ++i) {
      Vec u = st.vector(8), v = st.vector(8), w = st.vector(8), z = st.vector(8);
      Rational r = cayley_residual(u, v, w, z);
      Rational a(abs(r));
      if (a > worst) worst = a;
    }
    add(certs, "identity.cayley",
        "max |psi^2 + |tau|^2 - vol^2|" + tag, to_string(worst), "0");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  return make_report("identity", std::move(certs), ms);
}

}  // namespace calib
