#include <benchmark/benchmark.h>

#include "biunary/congruence.hpp"
#include "biunary/esn.hpp"
#include "biunary/fixtures.hpp"
#include "biunary/isomorphism.hpp"
#include "biunary/laws.hpp"
#include "biunary/relations.hpp"
#include "biunary/search.hpp"

namespace {

using namespace biunary;

void BM_EnumeratePrecat(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::size_t models = 0;
  for (auto _ : state) {
    const auto r = enumerate(SearchQuery::make(StructureKind::kSemigroup, order, {"PRECAT"}, {}));
    models = r.models.size();
    benchmark::DoNotOptimize(models);
  }
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_EnumeratePrecat)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateCategories(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::size_t models = 0;
  for (auto _ : state) {
    const auto r = enumerate(SearchQuery::make(StructureKind::kCategory, order, {}, {}));
    models = r.models.size();
    benchmark::DoNotOptimize(models);
  }
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_EnumerateCategories)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const BiunarySemigroup s = full_algebra(2, Composition::kDemonic).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
}
BENCHMARK(BM_CanonicalForm);

void BM_CanonicalFormExhaustive(benchmark::State& state) {
  const BiunarySemigroup s = fixture_semigroup(FixtureId::kEx2_4);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form_exhaustive(s.view()));
}
BENCHMARK(BM_CanonicalFormExhaustive);

void BM_Classify(benchmark::State& state) {
  const BiunarySemigroup s = full_algebra(2, Composition::kDemonic).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify);

void BM_CheckLaw(benchmark::State& state) {
  const BiunarySemigroup s = full_algebra(2, Composition::kAngelic).algebra;
  const auto law = static_cast<LawId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_law(s, law));
  state.SetLabel(std::string(tag(law)));
}
BENCHMARK(BM_CheckLaw)
    ->Arg(static_cast<int>(LawId::kCS6))
    ->Arg(static_cast<int>(LawId::kLCong))
    ->Arg(static_cast<int>(LawId::kSMatch2))
    ->Arg(static_cast<int>(LawId::kBandD));

void BM_SymmetricExtension(benchmark::State& state) {
  const BiactionCategory c = category_of(fixture_semigroup(FixtureId::kEx2_10));
  for (auto _ : state) benchmark::DoNotOptimize(extension(c, PseudoproductKind::kSymmetric));
}
BENCHMARK(BM_SymmetricExtension);

void BM_Congruences(benchmark::State& state) {
  const BiunarySemigroup s = fixture_semigroup(FixtureId::kEx2_4);
  for (auto _ : state) benchmark::DoNotOptimize(congruences(s));
}
BENCHMARK(BM_Congruences);

void BM_FullRelationAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(full_algebra(2, Composition::kDemonic));
}
BENCHMARK(BM_FullRelationAlgebra);

}  // namespace

BENCHMARK_MAIN();
