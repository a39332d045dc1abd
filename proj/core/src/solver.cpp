#include "cig/solver.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cig/canonical.hpp"
#include "cig/errors.hpp"
#include "cig/rng.hpp"

namespace cig {

namespace {

void check_capacity(const GameState& state) {
  if (state.base->order > kMaxVertices) {
    fail(Errc::CapacityExceeded, "state exceeds bit-set capacity");
  }
}

struct SolveCtx {
  const SolveOptions& options;
  std::unordered_map<std::string, int> memo;
  SolveStats stats;

  void check_memo_limit() {
    if (memo.size() >= options.memo_limit) {
      fail(Errc::MemoLimitExceeded, "memo table exceeded " + std::to_string(options.memo_limit) +
                                        " entries");
    }
  }
};

std::string state_key(const GameState& state, Mover to_move, CanonMode canon) {
  std::string key = canon == CanonMode::Raw ? raw_key(state) : canonical_key(state);
  key.push_back(to_move == Mover::Sweller ? 'S' : 'D');
  return key;
}

std::vector<int> move_order(SolveCtx& ctx, const GameState& state) {
  std::vector<int> moves = legal_moves(state);
  if (ctx.options.shuffle_moves) {
    SplitMix64 rng(mix64(ctx.options.shuffle_seed, VertexSetHash{}(state.alive)));
    for (std::size_t i = moves.size(); i > 1; --i) {
      std::swap(moves[i - 1], moves[rng.below(i)]);
    }
  }
  return moves;
}

int game_value(SolveCtx& ctx, const GameState& state, Mover to_move) {
  if (state.empty()) return 0;
  ++ctx.stats.visited;
  std::string key = state_key(state, to_move, ctx.options.canon);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
    ++ctx.stats.memo_hits;
    return it->second;
  }

  int best = -1;
  for (int u : move_order(ctx, state)) {
    auto [next, delta] = apply_move(state, u);
    int value = 1 + game_value(ctx, next, other(to_move));
    if (best < 0) {
      best = value;
    } else {
      best = to_move == Mover::Sweller ? std::max(best, value) : std::min(best, value);
    }
  }
  ctx.check_memo_limit();
  ctx.memo.emplace(std::move(key), best);
  return best;
}

}  // namespace

SolveResult solve(const GameState& state, Mover to_move, const SolveOptions& options) {
  check_capacity(state);
  SolveCtx ctx{options, {}, {}};
  SolveResult result;
  result.value = game_value(ctx, state, to_move);
  state.alive.for_each([&](int u) {
    auto [next, delta] = apply_move(state, u);
    if (1 + game_value(ctx, next, other(to_move)) == result.value) {
      result.optimal_moves.push_back(u);
    }
  });
  result.stats = ctx.stats;
  result.stats.peak_memo = ctx.memo.size();
  return result;
}

namespace {

struct FixedCtx {
  const SolveOptions& options;
  Mover fixed_side;
  const Strategy& strategy;
  Objective objective;
  std::unordered_map<std::string, int> memo;
  SolveStats stats;
  std::vector<PlayedMove> history;
};

int fixed_value(FixedCtx& ctx, const GameState& state, Mover to_move) {
  if (state.empty()) return 0;
  ++ctx.stats.visited;

  if (to_move == ctx.fixed_side) {
    int u = ctx.strategy.choose(state, ctx.history);
    if (!state.alive.test(u)) {
      fail(Errc::IllegalStrategyMove, "fixed strategy returned dead vertex");
    }
    auto [next, delta] = apply_move(state, u);
    ctx.history.push_back({to_move, u});
    int value = 1 + fixed_value(ctx, next, other(to_move));
    ctx.history.pop_back();
    return value;
  }

  Strategy::MemoHint hint = ctx.strategy.memo_hint(state, ctx.history);
  std::string key;
  if (hint.usable) {
    key = hint.colors.empty()
              ? (ctx.options.canon == CanonMode::Raw ? raw_key(state) : canonical_key(state))
              : canonical_key(state, hint.colors);
    key.push_back(to_move == Mover::Sweller ? 'S' : 'D');
    key.append(reinterpret_cast<const char*>(&hint.tag), sizeof(hint.tag));
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
      ++ctx.stats.memo_hits;
      return it->second;
    }
  }

  int best = -1;
  for (int u : legal_moves(state)) {
    auto [next, delta] = apply_move(state, u);
    ctx.history.push_back({to_move, u});
    int value = 1 + fixed_value(ctx, next, other(to_move));
    ctx.history.pop_back();
    if (best < 0) {
      best = value;
    } else {
      best = ctx.objective == Objective::Maximize ? std::max(best, value) : std::min(best, value);
    }
  }

  if (hint.usable) {
    if (ctx.memo.size() >= ctx.options.memo_limit) {
      fail(Errc::MemoLimitExceeded, "memo table exceeded limit");
    }
    ctx.memo.emplace(std::move(key), best);
  }
  return best;
}

}  // namespace

FixedSolveResult solve_vs_fixed(const GameState& state, Mover to_move, Mover fixed_side,
                                const Strategy& strategy, Objective objective,
                                const SolveOptions& options) {
  check_capacity(state);
  FixedCtx ctx{options, fixed_side, strategy, objective, {}, {}, {}};
  FixedSolveResult result;
  result.value = fixed_value(ctx, state, to_move);
  result.stats = ctx.stats;
  result.stats.peak_memo = ctx.memo.size();
  return result;
}

}  // namespace cig
