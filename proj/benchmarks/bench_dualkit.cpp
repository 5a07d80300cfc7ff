#include <benchmark/benchmark.h>

#include "dualkit/catkit.hpp"
#include "dualkit/contact.hpp"
#include "dualkit/devries.hpp"
#include "dualkit/fixtures.hpp"
#include "dualkit/pipelines.hpp"
#include "dualkit/rc.hpp"

using namespace dualkit;

static void BM_UltrafilterBrute(benchmark::State& state) {
  const FinBoolAlg a("B", static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_ultrafilters(a));
}
BENCHMARK(BM_UltrafilterBrute)->DenseRange(2, 4);

static void BM_AxiomCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rels = all_contact_algs(FinBoolAlg("B", n));
  for (auto _ : state)
    for (const auto& r : rels) benchmark::DoNotOptimize(check_axioms(r));
}
BENCHMARK(BM_AxiomCheck)->DenseRange(2, 4);

static void BM_ClusterScan(benchmark::State& state) {
  const ContactAlg a = ContactAlg::from_partition(
      FinBoolAlg("B", static_cast<int>(state.range(0))),
      std::vector<int>(state.range(0), 0));
  for (auto _ : state) benchmark::DoNotOptimize(clusters(a));
}
BENCHMARK(BM_ClusterScan)->DenseRange(2, 4);

static void BM_DvMorphismEnum(benchmark::State& state) {
  const ContactAlg a =
      ContactAlg::discrete(FinBoolAlg("B", static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(all_dv_morphisms(a, a));
}
BENCHMARK(BM_DvMorphismEnum)->DenseRange(1, 2);

static void BM_RcAlgebra(benchmark::State& state) {
  const auto spaces = all_spaces(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& x : spaces) benchmark::DoNotOptimize(rc_algebra(x));
}
BENCHMARK(BM_RcAlgebra)->DenseRange(2, 3);

static void BM_Survey(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(collapse_survey(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Survey)->DenseRange(2, 4);

static void BM_CoreflectiveLift(benchmark::State& state) {
  const GraphFixture fx = graph_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lift_right_coreflective(fx.corefl_base, fx.coreflection));
}
BENCHMARK(BM_CoreflectiveLift);

static void BM_EquivalenceSuite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(equivalence_suite(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EquivalenceSuite)->DenseRange(1, 2);

BENCHMARK_MAIN();
