#include <benchmark/benchmark.h>

#include "cig/canonical.hpp"
#include "cig/generators.hpp"
#include "cig/solver.hpp"
#include "cig/strategies.hpp"

using namespace cig;

static void BM_SolvePathRaw(benchmark::State& state) {
  Forest p = path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve(GameState::initial(p), Mover::Sweller, {.canon = CanonMode::Raw}).value);
  }
}
BENCHMARK(BM_SolvePathRaw)->Arg(12)->Arg(16)->Arg(20);

static void BM_SolvePathIso(benchmark::State& state) {
  Forest p = path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve(GameState::initial(p), Mover::Sweller, {.canon = CanonMode::Iso}).value);
  }
}
BENCHMARK(BM_SolvePathIso)->Arg(12)->Arg(20)->Arg(28);

static void BM_CanonicalKey(benchmark::State& state) {
  Forest t = random_tree(static_cast<int>(state.range(0)), 1234);
  GameState s = GameState::initial(t);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(s));
}
BENCHMARK(BM_CanonicalKey)->Arg(16)->Arg(64)->Arg(200);

static void BM_GreedyPlay(benchmark::State& state) {
  Forest f = random_forest(static_cast<int>(state.range(0)), 4, 98765);
  GreedySweller greedy;
  LowestIdStrategy lowest;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play_game(f, Mover::Sweller, greedy, lowest).total_moves());
  }
}
BENCHMARK(BM_GreedyPlay)->Arg(30)->Arg(100)->Arg(250);

static void BM_MoveDelta(benchmark::State& state) {
  Forest t = random_tree(200, 42);
  GameState s = GameState::initial(t);
  for (auto _ : state) {
    int total = 0;
    s.alive.for_each([&](int u) { total += move_delta(s, u).m8; });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MoveDelta);

BENCHMARK_MAIN();
