// Microbenchmarks for the costly paths: configuration enumeration, copycat
// construction, composition, and the full strategy check, on seeded inputs
// of increasing size.

#include <benchmark/benchmark.h>

#include "esgame/gen.hpp"
#include "esgame/strategy_laws.hpp"

using namespace esgame;

namespace {

EspPtr seeded_game(int n) { return gen_esp(2026, n); }

void bm_enumerate(benchmark::State& state) {
  EspPtr g = seeded_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ConfigGraph graph = enumerate_configurations(*g->es);
    benchmark::DoNotOptimize(graph.configs.size());
  }
}

void bm_copycat(benchmark::State& state) {
  EspPtr g = seeded_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PreStrategy cc = copycat(g);
    benchmark::DoNotOptimize(cc.inner->size());
  }
}

void bm_compose(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(7);
  EspPtr a = gen_esp(rng, n), b = gen_esp(rng, n), c = gen_esp(rng, n);
  PreStrategy lo = gen_prestrategy(rng, hom_game(a, b));
  PreStrategy hi = gen_prestrategy(rng, hom_game(b, c));
  for (auto _ : state) {
    Composition comp = compose(lo, hi);
    benchmark::DoNotOptimize(comp.strat.inner->size());
  }
}

void bm_is_strategy(benchmark::State& state) {
  Rng rng(static_cast<std::uint64_t>(state.range(0)));
  PreStrategy s = gen_family(rng, 2);
  for (auto _ : state) {
    StrategyCheck check = is_strategy(s);
    benchmark::DoNotOptimize(check.holds);
  }
}

}  // namespace

BENCHMARK(bm_enumerate)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(bm_copycat)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK(bm_compose)->Arg(2)->Arg(3);
BENCHMARK(bm_is_strategy)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
