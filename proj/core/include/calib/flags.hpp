#ifndef CALIB_FLAGS_HPP
#define CALIB_FLAGS_HPP

#include <string>
#include <vector>

#include "calib/forms.hpp"
#include "calib/integral.hpp"
#include "calib/subspace.hpp"

namespace calib {

enum class Group { G2, Spin7 };

// Everything the flag computations need about one of the two holonomy models:
// the generating invariant forms, the stabilizer algebra, the distinguished
// involution R normalizing the coordinate flag, and (for the 8-dimensional
// model) the su(2) acting on the trailing block.
struct GroupModel {
  Group group = Group::G2;
  std::string name;
  int n = 0;
  std::vector<AlternatingForm> generators;
  RatMatrix involution;
  MatrixSubspace algebra;
  MatrixSubspace su2;  // dim 3 for the 8-dimensional model, dim 0 otherwise
};

const GroupModel& group_model(Group g);  // built once, cached

// h_k = { x in gl(n) : gl_act(x, a) restricted to the first k coordinates
// vanishes for every generator a }.
MatrixSubspace compute_hk(const GroupModel& model, int k);

struct FlagLevel {
  int k = 0;
  int dim_hk = 0;
  int codim = 0;      // n^2 - dim_hk, the Cartan character at this level
  int increment = 0;  // codim - previous codim
  int polar_dim = 0;  // n + dim_hk - dim_g, polar dimension in the thickened model
  int ext_rank = 0;   // polar_dim - (k+1)
};

struct FlagReport {
  std::string group;
  int n = 0;
  int dim_g = 0;
  int dim_s = 0;  // n + n^2 - dim_g
  std::vector<FlagLevel> levels;
  int cartan_sum = 0;  // sum of codims over k = 0..n-1
  int ideal_rank = 0;  // rank of the ideal constraint system
  bool regular = false;  // Cartan's test: cartan_sum == ideal_rank
};

FlagReport character_sequence(const GroupModel& model);

// (polar dimension, extension rank) at level k, from the computed h_k.
std::pair<int, int> flag_dims(const GroupModel& model, int k);

struct TransversalCertificate {
  int s = 0;
  int dim_w = 0;
  int codim_hs = 0;
  bool dim_matches_codim = false;
  bool transversal = false;           // W intersect h_s = 0
  bool involution_invariant = false;  // R W R^{-1} = W
  bool su2_invariant = true;          // [su2, W] inside W; vacuous without su2
  bool pass = false;
};

TransversalCertificate verify_transversal(const GroupModel& model, const MatrixSubspace& w, int s);

struct WChainLevel {
  int dim = 0;
  int s = 0;
  MatrixSubspace space;
  bool operator==(const WChainLevel&) const = default;
};

struct WChain {
  std::string group;
  std::vector<WChainLevel> levels;
  bool operator==(const WChain&) const = default;
};

struct WChainResult {
  bool found = false;
  int deepest_completed = -1;  // last level index reached before failure
  WChain chain;
};

// Hand-constructed transversals seeding the 7-dimensional search (empty for
// the 8-dimensional model, which searches from scratch).
std::vector<WChainLevel> seed_levels(const GroupModel& model);

// Invariant building blocks for the search: one-dimensional coordinate lines
// where the symmetry allows, su(2)-isotypic blocks on the trailing quadrant
// otherwise. Sorted by dimension, then lexicographically by canonical basis.
std::vector<MatrixSubspace> invariant_blocks(const GroupModel& model);

// Smallest invariant subspace containing v: the span closure of v under
// bracketing with the model's su(2). Dimension 1 without an su(2); otherwise
// at most 4 per isotypic constituent of v.
MatrixSubspace bracket_orbit(const GroupModel& model, const RatMatrix& v);

// Candidate modules for the chain search: the invariant blocks themselves,
// followed by bracket orbits of pairwise sums and differences of block basis
// vectors. The pair orbits supply the graph-type submodules that mix
// isomorphic blocks diagonally; without them no transversal chain exists for
// the 8-dimensional model. Every candidate is involution- and su(2)-invariant,
// and the order is deterministic.
std::vector<MatrixSubspace> candidate_modules(const GroupModel& model);

// Backtracking search for a nested chain of invariant transversals with the
// model's target dimensions. Deterministic: fixed candidate order, first
// solution.
WChainResult search_w_chain(const GroupModel& model, bool use_seed = true);

// Exact check of the thickening bookkeeping for a chain: at each level the
// polar space of the model flag meets the thickened cell in dimension s+1,
// and together they span the whole model tangent space.
struct ThickeningLevel {
  int s = 0;
  int dim_w = 0;
  int dim_z = 0;             // (s+1) + dim W
  int dim_intersection = 0;  // dim (H cap TZ); must be s+1
  bool spans = false;        // H + TZ is everything
  bool pass = false;
};

struct ThickeningReport {
  std::string group;
  int dim_s = 0;
  std::vector<ThickeningLevel> levels;
  bool pass = false;
};

ThickeningReport thickening_check(const GroupModel& model, const WChain& chain);

// Deterministic serialization: rationals as ["num","den"] decimal strings,
// two-space indentation, trailing newline. Byte-identical across reruns.
std::string wchain_to_json(const WChain& chain);
WChain wchain_from_json(const std::string& text);

}  // namespace calib

#endif
