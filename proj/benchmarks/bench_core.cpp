#include <benchmark/benchmark.h>

#include "demazure/formal_group_algebra.hpp"
#include "demazure/weyl.hpp"

using namespace demazure;

namespace {

RootDatum a2() {
  return RootDatum::root_lattice(CartanMatrix(std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
}

void bm_slice_build(benchmark::State& state) {
  RootDatum d = RootDatum::root_lattice(CartanMatrix(std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  for (auto _ : state) {
    WeylSlice w(d, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(bm_slice_build)->Arg(6)->Arg(10);

void bm_series_mul(benchmark::State& state) {
  RootDatum d = a2();
  FormalGroupAlgebra fga(d, FormalGroupLaw::hyperbolic_symbolic(), static_cast<int>(state.range(0)));
  FormalSeries a = fga.x_of({1, 1});
  FormalSeries b = fga.x_of({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_series_mul)->Arg(8)->Arg(12);

void bm_exact_division(benchmark::State& state) {
  RootDatum d = a2();
  FormalGroupAlgebra fga(d, FormalGroupLaw::hyperbolic_symbolic(), static_cast<int>(state.range(0)));
  FormalSeries num = fga.x_of({1, 1}) * fga.x_of({1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(fga.divide_exact(num, fga.x_of({1, 1})));
}
BENCHMARK(bm_exact_division)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
