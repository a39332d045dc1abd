#include <doctest.h>

#include "cig/errors.hpp"
#include "cig/generators.hpp"
#include "cig/rng.hpp"
#include "cig/solver.hpp"
#include "cig/strategies.hpp"
#include "support/brute_force.hpp"

using namespace cig;
using cig::testing::brute_force_value;

TEST_CASE("small exact values") {
  Forest p3 = path(3);
  GameState s = GameState::initial(p3);
  CHECK(solve(GameState{&p3, {}}, Mover::Sweller).value == 0);
  CHECK(solve(GameState{&p3, {}}, Mover::Diminisher).value == 0);

  SolveResult sweller = solve(s, Mover::Sweller);
  CHECK(sweller.value == 2);
  CHECK(sweller.optimal_moves == std::vector<int>{0, 2});

  SolveResult diminisher = solve(s, Mover::Diminisher);
  CHECK(diminisher.value == 1);
  CHECK(diminisher.optimal_moves == std::vector<int>{1});
}

TEST_CASE("raw and iso modes agree and match brute force") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(10));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, rng.next());
    GameState s = GameState::initial(f);
    for (Mover m : {Mover::Sweller, Mover::Diminisher}) {
      int oracle = brute_force_value(s, m);
      CHECK(solve(s, m, {.canon = CanonMode::Raw}).value == oracle);
      CHECK(solve(s, m, {.canon = CanonMode::Iso}).value == oracle);
    }
  }
}

TEST_CASE("value is independent of move iteration order") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Forest f = random_tree(12, rng.next());
    GameState s = GameState::initial(f);
    int base = solve(s, Mover::Sweller).value;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      SolveOptions shuffled{.shuffle_moves = true, .shuffle_seed = seed};
      CHECK(solve(s, Mover::Sweller, shuffled).value == base);
    }
  }
}

TEST_CASE("path values follow 3n/7 within a constant") {
  for (int n = 1; n <= 30; ++n) {
    Forest p = path(n);
    int value = solve(GameState::initial(p), Mover::Sweller, {.canon = CanonMode::Iso}).value;
    CHECK(7 * value >= 3 * n - 14);
    CHECK(7 * value <= 3 * n + 14);
    if (n <= 14) {
      CHECK(value == brute_force_value(GameState::initial(p), Mover::Sweller));
    }
  }
}

TEST_CASE("T_1 value") {
  auto [t1, layout] = tree_tk(1);
  GameState s = GameState::initial(t1);
  int value = solve(s, Mover::Sweller, {.canon = CanonMode::Iso}).value;
  CHECK(value <= 5);
  CHECK(value == brute_force_value(s, Mover::Sweller));
}

TEST_CASE("memo limit is a hard error") {
  Forest t = random_tree(20, 3);
  SolveOptions tiny{.memo_limit = 4};
  CHECK_THROWS_AS(solve(GameState::initial(t), Mover::Sweller, tiny), Error);
}

TEST_CASE("solve_vs_fixed") {
  Forest k1 = build_forest(1, {});
  LowestIdStrategy lowest;
  CHECK(solve_vs_fixed(GameState::initial(k1), Mover::Sweller, Mover::Sweller, lowest,
                       Objective::Minimize)
            .value == 1);

  // Fixing one side can only help the optimizing side.
  SplitMix64 rng(21);
  GreedySweller greedy;
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(9));
    Forest f = random_tree(n, rng.next());
    GameState s = GameState::initial(f);
    int exact = solve(s, Mover::Sweller).value;
    int greedy_vs_optimal =
        solve_vs_fixed(s, Mover::Sweller, Mover::Sweller, greedy, Objective::Minimize).value;
    CHECK(greedy_vs_optimal <= exact);
    int optimal_vs_lowest_d =
        solve_vs_fixed(s, Mover::Sweller, Mover::Diminisher, lowest, Objective::Maximize).value;
    CHECK(optimal_vs_lowest_d >= exact);
  }
}
