// Microbenchmarks for the hot paths: bit-parallel neighbourhood expansion,
// the minimum oracle, canonical forms and the enumeration sweeps.

#include <benchmark/benchmark.h>

#include <random>

#include "harperlab/classifier.hpp"
#include "harperlab/constructions.hpp"
#include "harperlab/extremality.hpp"
#include "harperlab/isomorphism.hpp"
#include "harperlab/orders.hpp"

using namespace harperlab;

namespace {

Family random_family(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Family out(n);
  for (std::uint32_t v = 0; v < out.universe_size(); ++v) {
    if (rng() & 1) out.insert(v);
  }
  return out;
}

void BM_Neighborhood(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family a = random_family(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neighborhood(a));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Neighborhood)->Arg(10)->Arg(14)->Arg(17)->Arg(20);

void BM_DistanceTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family a = Family::of(n, {0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_transform(a));
  }
}
BENCHMARK(BM_DistanceTransform)->Arg(10)->Arg(16)->Arg(20);

void BM_SegmentExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t k = (std::uint64_t{1} << n) / 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        neighborhood(initial_segment_simplicial(n, k)).size());
  }
}
BENCHMARK(BM_SegmentExpansion)->Arg(12)->Arg(16)->Arg(20);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family a = random_family(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(a));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6)->Arg(7);

void BM_AreIsomorphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family a = build_B(n, 1);
  const Family b = initial_segment_simplicial(n, a.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(a, b));
  }
}
BENCHMARK(BM_AreIsomorphic)->Arg(6)->Arg(8)->Arg(10);

void BM_SweepT1(benchmark::State& state) {
  const int n = 5;
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_full(n, k, FilterLevel::kT1Forward, 1));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(binomial(32, k)));
}
BENCHMARK(BM_SweepT1)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SandwichEnumerate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_extremal(5, 20, EnumerationMode::kSandwich, false, 1));
  }
}
BENCHMARK(BM_SandwichEnumerate)->Unit(benchmark::kMillisecond);

void BM_ExtremalityReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family a = build_B(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremality_report(a));
  }
}
BENCHMARK(BM_ExtremalityReport)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
