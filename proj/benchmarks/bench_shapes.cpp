#include <benchmark/benchmark.h>

#include "coframes/chain/generators.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/fincat/localization.hpp"
#include "coframes/frames/frames.hpp"
#include "coframes/sset/rank.hpp"

using namespace coframes;

namespace {

void BM_DSubdivision(benchmark::State& state) {
  const auto c = fincat::share(fincat::ordinal(2));
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dsub::d_subdivision(c, cap));
}
BENCHMARK(BM_DSubdivision)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Localize(benchmark::State& state) {
  const fincat::FinCategory c = fincat::zigzag();
  fincat::MorphismClass w = fincat::MorphismClass::identities(c);
  w.insert(*c.find_morphism("w"));
  for (auto _ : state) benchmark::DoNotOptimize(fincat::localize_bounded(c, w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Localize)->Arg(4)->Arg(8);

void BM_UnitMap(benchmark::State& state) {
  const auto k = sset::share(sset::spine(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) {
    const sset::UnitMap u = sset::unit_map(k);
    for (int n = 1; n <= std::min(3, sset::max_rank(u)); ++n) benchmark::DoNotOptimize(sset::verify_rank_pushout(u, n));
  }
}
BENCHMARK(BM_UnitMap)->DenseRange(1, 4);

void BM_FrameOfMap(benchmark::State& state) {
  const frames::FrameContext ctx(static_cast<int>(state.range(0)), 1);
  chain::Rng rng(5);
  const auto x = chain::share(chain::random_complex(rng, 2, 0, 2, 2));
  const auto y = chain::share(chain::random_complex(rng, 2, 0, 2, 2));
  const chain::ChainMap f = chain::random_chain_map(rng, x, y);
  for (auto _ : state) benchmark::DoNotOptimize(frames::frame_of_map(ctx, f));
}
BENCHMARK(BM_FrameOfMap)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FrameOfTriangle(benchmark::State& state) {
  const frames::FrameContext ctx(static_cast<int>(state.range(0)), 2);
  chain::Rng rng(6);
  const auto x = chain::share(chain::random_complex(rng, 2, 0, 2, 2));
  const auto y = chain::share(chain::random_complex(rng, 2, 0, 2, 2));
  const auto z = chain::share(chain::random_complex(rng, 2, 0, 2, 2));
  const chain::ChainMap f = chain::random_chain_map(rng, x, y), g = chain::random_chain_map(rng, y, z);
  for (auto _ : state) benchmark::DoNotOptimize(frames::frame_of_triangle(ctx, f, g));
}
BENCHMARK(BM_FrameOfTriangle)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
