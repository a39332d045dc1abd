#pragma once

#include <cstdint>
#include <vector>

#include "cig/engine.hpp"
#include "cig/forest.hpp"

namespace cig {

enum class CanonMode { Raw, Iso };

struct SolveStats {
  std::uint64_t visited = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t peak_memo = 0;
};

struct SolveResult {
  int value = 0;
  std::vector<int> optimal_moves;  // ascending
  SolveStats stats;
};

struct SolveOptions {
  CanonMode canon = CanonMode::Raw;
  std::size_t memo_limit = 50'000'000;
  // Shuffles move iteration; the value must not change. Test hook.
  bool shuffle_moves = false;
  std::uint64_t shuffle_seed = 0;
};

// Exact game length under optimal play: empty -> 0, Sweller 1 + max over
// moves, Diminisher 1 + min over moves. Memoized on raw_key or canonical_key
// per options. Throws CapacityExceeded, MemoLimitExceeded.
SolveResult solve(const GameState& state, Mover to_move, const SolveOptions& options = {});

enum class Objective { Maximize, Minimize };

struct FixedSolveResult {
  int value = 0;
  SolveStats stats;
};

// Game length when `fixed_side` always plays `strategy` and the other side
// optimizes `objective` over the whole game tree. Memoization keys include
// the strategy's MemoHint so history-aware strategies stay sound.
FixedSolveResult solve_vs_fixed(const GameState& state, Mover to_move, Mover fixed_side,
                                const Strategy& strategy, Objective objective,
                                const SolveOptions& options = {});

}  // namespace cig
