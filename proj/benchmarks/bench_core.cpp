#include <benchmark/benchmark.h>

#include "qudit/qudit_state.hpp"
#include "qudit/qutrit.hpp"
#include "qudit/random.hpp"
#include "qudit/sun_basis.hpp"
#include "qudit/sym_poly.hpp"
#include "qudit/two_qudit.hpp"

namespace {

void BM_StructureTensors(benchmark::State& state) {
  const auto basis = qudit::GellMannBasis::generate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qudit::StructureTensors::compute(basis));
}
BENCHMARK(BM_StructureTensors)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_PositivityCheck(benchmark::State& state) {
  qudit::Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto rho = qudit::random_mixed_density(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qudit::positivity_check(rho));
}
BENCHMARK(BM_PositivityCheck)->RangeMultiplier(2)->Range(2, 32);

void BM_Invariants(benchmark::State& state) {
  qudit::Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto& t = qudit::structure_tensors(n);
  const auto s = qudit::QuditState::from_density(qudit::random_mixed_density(n, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qudit::invariants(s, t));
}
BENCHMARK(BM_Invariants)->DenseRange(2, 6);

void BM_QutritRegionScan(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qudit::qutrit::region_scan(res));
}
BENCHMARK(BM_QutritRegionScan)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_QuditPurityResiduals(benchmark::State& state) {
  qudit::Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const auto& t = qudit::structure_tensors(n);
  const auto s = qudit::BipartiteState::from_density(qudit::random_pure_density(n * n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qudit::purity_residuals_qudit(s, t));
}
BENCHMARK(BM_QuditPurityResiduals)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
