#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "calib/flags.hpp"
#include "calib/rational.hpp"
#include "calib/subspace.hpp"

using namespace calib;

namespace {

void check_full_chain(const GroupModel& model, const WChainResult& res,
                      const std::vector<int>& dims) {
  REQUIRE(res.found);
  REQUIRE(res.chain.levels.size() == dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const WChainLevel& lvl = res.chain.levels[i];
    CHECK(lvl.dim == dims[i]);
    CHECK(static_cast<int>(lvl.space.dim()) == dims[i]);
    TransversalCertificate cert = verify_transversal(model, lvl.space, lvl.s);
    CHECK(cert.pass);
    if (i > 0) CHECK(lvl.space.contains(res.chain.levels[i - 1].space));
  }
  CHECK(thickening_check(model, res.chain).pass);
}

}  // namespace

TEST_CASE("seven-dimensional model chain search completes from its seeds") {
  const GroupModel& model = group_model(Group::G2);
  WChainResult res = search_w_chain(model);
  check_full_chain(model, res, {1, 5, 15, 28});

  std::vector<WChainLevel> seeds = seed_levels(model);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CHECK(res.chain.levels[i].space == seeds[i].space);
    CHECK(res.chain.levels[i].s == seeds[i].s);
  }

  // Deterministic: an independent search run lands on the identical chain.
  WChainResult again = search_w_chain(model);
  CHECK(res.chain == again.chain);
}

TEST_CASE("eight-dimensional model chain search succeeds without seeds") {
  const GroupModel& model = group_model(Group::Spin7);
  WChainResult res = search_w_chain(model);
  check_full_chain(model, res, {1, 5, 15, 35});

  WChainResult again = search_w_chain(model);
  CHECK(res.chain == again.chain);
  CHECK(wchain_to_json(res.chain) == wchain_to_json(again.chain));
}

TEST_CASE("chain serialization round-trips and is byte-stable") {
  const GroupModel& model = group_model(Group::G2);
  WChain chain{model.name, seed_levels(model)};

  std::string text = wchain_to_json(chain);
  CHECK(text.back() == '\n');
  CHECK(wchain_to_json(chain) == text);

  WChain back = wchain_from_json(text);
  CHECK(back == chain);
  CHECK(wchain_to_json(back) == text);
}

TEST_CASE("chain deserialization rejects malformed input") {
  CHECK_THROWS(wchain_from_json("not json at all"));
  CHECK_THROWS(wchain_from_json("{\"group\": \"x\"}"));
  CHECK_THROWS(wchain_from_json(
      "{\"group\": \"x\", \"matrix_size\": 2, \"levels\": [{\"dim\": 1}]}"));
}
