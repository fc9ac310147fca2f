#include <benchmark/benchmark.h>

#include "calib/catalog.hpp"
#include "calib/flags.hpp"
#include "calib/forms.hpp"
#include "calib/integral.hpp"
#include "calib/matrix.hpp"
#include "calib/stabilizer.hpp"

namespace {

using namespace calib;

void BM_wedge_3_4(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  for (auto _ : state) benchmark::DoNotOptimize(wedge(cat.phi, cat.star_phi));
}
BENCHMARK(BM_wedge_3_4);

void BM_hodge_4form(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  for (auto _ : state) benchmark::DoNotOptimize(hodge(cat.psi));
}
BENCHMARK(BM_hodge_4form);

void BM_evaluate_4form(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  SeededTuples rng(3);
  std::vector<Vec> tuple = {rng.vector(8), rng.vector(8), rng.vector(8), rng.vector(8)};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(cat.psi, tuple));
}
BENCHMARK(BM_evaluate_4form);

void BM_cayley_residual(benchmark::State& state) {
  SeededTuples rng(4);
  Vec u = rng.vector(8), v = rng.vector(8), w = rng.vector(8), z = rng.vector(8);
  for (auto _ : state) benchmark::DoNotOptimize(cayley_residual(u, v, w, z));
}
BENCHMARK(BM_cayley_residual);

void BM_stabilizer_3form(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer({cat.phi}, 7));
}
BENCHMARK(BM_stabilizer_3form)->Unit(benchmark::kMillisecond);

void BM_constraint_rank_7(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_constraint_system({cat.phi, cat.star_phi}, 7).total_rank);
}
BENCHMARK(BM_constraint_rank_7)->Unit(benchmark::kMillisecond);

void BM_constraint_rank_8(benchmark::State& state) {
  const CalibrationCatalog& cat = catalog();
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_constraint_system({cat.psi}, 8).total_rank);
}
BENCHMARK(BM_constraint_rank_8)->Unit(benchmark::kMillisecond);

void BM_partial_stabilizer(benchmark::State& state) {
  const GroupModel& model = group_model(Group::Spin7);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_hk(model, k));
}
BENCHMARK(BM_partial_stabilizer)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_torsion_report(benchmark::State& state) {
  const GroupModel& model = group_model(Group::Spin7);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_report(model.algebra));
}
BENCHMARK(BM_torsion_report)->Unit(benchmark::kMillisecond);

void BM_chain_search_seeded(benchmark::State& state) {
  const GroupModel& model = group_model(Group::G2);
  for (auto _ : state) benchmark::DoNotOptimize(search_w_chain(model));
}
BENCHMARK(BM_chain_search_seeded)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
