#include <benchmark/benchmark.h>

#include "coframes/chain/colimits.hpp"
#include "coframes/chain/generators.hpp"
#include "coframes/chain/reedy.hpp"

using namespace coframes::chain;

namespace {

void BM_Rank(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const Matrix a = random_matrix(rng, 2, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(a.rank());
  state.SetComplexityN(n);
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_Homology(benchmark::State& state) {
  Rng rng(2);
  const ChainComplex x = random_complex(rng, 3, 0, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(x));
}
BENCHMARK(BM_Homology)->Arg(4)->Arg(16)->Arg(32);

void BM_Factorize(benchmark::State& state) {
  Rng rng(3);
  const int dim = static_cast<int>(state.range(0));
  const auto x = share(random_complex(rng, 2, 0, 3, dim));
  const auto y = share(random_complex(rng, 2, 0, 3, dim));
  const ChainMap f = random_chain_map(rng, x, y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(f));
    benchmark::DoNotOptimize(factorize_minimal(f));
  }
}
BENCHMARK(BM_Factorize)->Arg(2)->Arg(8)->Arg(16);

void BM_ReedyColimit(benchmark::State& state) {
  Rng rng(4);
  const auto idx = coframes::fincat::share(random_direct_category(rng, static_cast<int>(state.range(0))));
  const ChainDiagram x = random_reedy_cofibrant(rng, idx, 2, 24);
  state.counters["objects"] = idx->object_count();
  for (auto _ : state) benchmark::DoNotOptimize(reedy_colimit(x));
}
BENCHMARK(BM_ReedyColimit)->Arg(3)->Arg(5)->Arg(8);

}  // namespace
