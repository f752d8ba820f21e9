#include <benchmark/benchmark.h>

#include "grstage/grassmann.hpp"
#include "grstage/ideals.hpp"
#include "grstage/linalg.hpp"
#include "grstage/sampling.hpp"
#include "grstage/symmetry.hpp"

using namespace grstage;

namespace {

void BM_BigCellPoint_3_5(benchmark::State& state) {
  const Field field(FieldSpec::gf(101));
  const Stage stage{3, 5};
  Rng rng(1);
  const AlphaMatrix alpha = random_alpha(rng, stage, field);
  for (auto _ : state) {
    benchmark::DoNotOptimize(big_cell_point(alpha));
  }
}
BENCHMARK(BM_BigCellPoint_3_5);

void BM_PlueckerFromMatrix_3_4(benchmark::State& state) {
  const Field field(FieldSpec::gf(101));
  const Stage stage{3, 4};
  Rng rng(2);
  const ScalarMatrix m = random_matrix(rng, stage, field);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pluecker_from_matrix(m, stage));
  }
}
BENCHMARK(BM_PlueckerFromMatrix_3_4);

void BM_Relations_3_4(benchmark::State& state) {
  const Field field(FieldSpec::gf(2));
  const Stage stage{3, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pluecker_relations(stage, field));
  }
}
BENCHMARK(BM_Relations_3_4);

void BM_QuadricSpanRank_2_4(benchmark::State& state) {
  const Field field(FieldSpec::gf(2));
  const Stage stage{2, 4};
  const auto relations = pluecker_relations(stage, field);
  const Degree2Space space(stage);
  for (auto _ : state) {
    RowReducer reducer(field);
    for (const Polynomial& rel : relations) reducer.add_row(space.row_of(rel));
    benchmark::DoNotOptimize(reducer.rank());
  }
}
BENCHMARK(BM_QuadricSpanRank_2_4);

void BM_Orbit_3_5(benchmark::State& state) {
  const Stage stage{3, 5};
  const Monomial element = antichain_element(3, stage);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(element));
  }
}
BENCHMARK(BM_Orbit_3_5);

void BM_Divisibility_3_5(benchmark::State& state) {
  const Stage stage{3, 5};
  const Monomial a = antichain_element(3, stage);
  const Monomial b = antichain_element(4, stage);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides_mod_group(a, b));
  }
}
BENCHMARK(BM_Divisibility_3_5);

}  // namespace

BENCHMARK_MAIN();
