// Wall-clock tracking for the expensive paths: character tables, transition
// matrices, product tables and group classification.  Everything measured
// here is exact arithmetic; regressions usually mean an accidental loss of
// sparsity or a dropped cache, not micro-level slowness.

#include <benchmark/benchmark.h>

#include <hilbcenter/center.hpp>
#include <hilbcenter/hilbert.hpp>
#include <hilbcenter/quotient.hpp>

using namespace hilbcenter;

namespace {

void BM_CharacterTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterTable table = compute_character_table(n);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_SingleCharacterValue(benchmark::State& state) {
  Partition lambda({6, 4, 2});
  Partition mu({3, 3, 2, 2, 1, 1});
  for (auto _ : state) {
    Int value = mn_character(lambda, mu);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_SingleCharacterValue);

void BM_TransitionData(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TableStore tables(12);
  tables.get(n);  // character work out of the loop
  for (auto _ : state) {
    CenterAlgebra algebra(tables);
    benchmark::DoNotOptimize(algebra.degree_data(n));
  }
}
BENCHMARK(BM_TransitionData)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GradedRing(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TableStore tables(12);
  CenterAlgebra algebra(tables);
  algebra.degree_data(n);  // warm the shared caches once
  for (auto _ : state) {
    GradedRing ring = hilbert_graded_ring(algebra, n);
    benchmark::DoNotOptimize(ring);
  }
}
BENCHMARK(BM_GradedRing)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BruteForceConvolution(benchmark::State& state) {
  TableStore tables(8);
  CenterAlgebra algebra(tables);
  CenterElement a = CenterElement::basis_vector(Basis::c, Partition({2, 2, 1, 1}));
  CenterElement b = CenterElement::basis_vector(Basis::c, Partition({3, 2, 1}));
  for (auto _ : state) {
    CenterElement product = algebra.brute_force_convolution(a, b);
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_BruteForceConvolution)->Unit(benchmark::kMillisecond);

void BM_EnumerateSymmetricGroup(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  RunConfig config;
  GroupSpec spec = symmetric_group_spec(m);
  for (auto _ : state) {
    FiniteGroup group = FiniteGroup::enumerate(spec, config);
    benchmark::DoNotOptimize(group);
  }
}
BENCHMARK(BM_EnumerateSymmetricGroup)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_ClassAlgebra(benchmark::State& state) {
  RunConfig config;
  FiniteGroup group = FiniteGroup::enumerate(symmetric_group_spec(5), config);
  for (auto _ : state) {
    GradedRing ring = filtered_class_algebra(group);
    benchmark::DoNotOptimize(ring);
  }
}
BENCHMARK(BM_ClassAlgebra)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
