#include "cig/strategies.hpp"

#include <algorithm>

#include "cig/errors.hpp"
#include "cig/rng.hpp"

namespace cig {

int potential8(const MoveDelta& delta, const StrategyParams& params) {
  return 8 * delta.v - params.alpha_eighths * delta.e + (8 - params.beta_eighths) * delta.k;
}

std::vector<int> greedy_argmin(const GameState& state, const StrategyParams& params) {
  if (state.empty()) fail(Errc::EmptyState, "greedy on empty state");
  std::vector<int> best_set;
  int best = 0;
  state.alive.for_each([&](int u) {
    int score = potential8(move_delta(state, u), params);
    if (best_set.empty() || score < best) {
      best = score;
      best_set.assign(1, u);
    } else if (score == best) {
      best_set.push_back(u);
    }
  });
  return best_set;
}

int GreedySweller::choose(const GameState& state, std::span<const PlayedMove>) const {
  return greedy_argmin(state, params_).front();
}

int TkDiminisher::s2_copy(std::span<const PlayedMove> history) const {
  for (const auto& m : history) {
    if (m.vertex == layout_.centers[0]) return 2;
    if (m.vertex == layout_.centers[1]) return 1;
  }
  return 0;
}

int TkDiminisher::choose(const GameState& state, std::span<const PlayedMove> history) const {
  if (state.base->order != 2 * (3 * layout_.k + 1)) {
    fail(Errc::LayoutMismatch, "state order does not match T_k layout");
  }
  if (state.empty()) fail(Errc::EmptyState, "tk strategy on empty state");
  if (history.empty() || history.back().mover != Mover::Sweller) {
    fail(Errc::NotToMove, "tk strategy plays Diminisher after a Sweller move");
  }

  if (history.size() == 1) {
    int opening = history.front().vertex;
    bool c0 = state.alive.test(layout_.centers[0]);
    bool c1 = state.alive.test(layout_.centers[1]);
    if (c0 && c1) {
      // Prefer the center of the copy Sweller has not touched.
      return layout_.copy_of(opening) == 1 ? layout_.centers[1] : layout_.centers[0];
    }
    if (c0) return layout_.centers[0];
    if (c1) return layout_.centers[1];
    return state.alive.lowest();  // Sweller opened with a center
  }

  int target_copy = s2_copy(history);
  if (target_copy != 0) {
    for (const auto& leg : layout_.legs) {
      if (leg.copy == target_copy && state.alive.test(leg.attach) &&
          state.alive.test(leg.middle) && state.alive.test(leg.tip)) {
        return leg.middle;
      }
    }
  }
  return state.alive.lowest();
}

Strategy::MemoHint TkDiminisher::memo_hint(const GameState& state,
                                           std::span<const PlayedMove> history) const {
  std::size_t diminisher_moves = 0;
  for (const auto& m : history) {
    if (m.mover == Mover::Diminisher) ++diminisher_moves;
  }
  // Positions before Diminisher's first reply are few; no point collapsing
  // them and the target copy is not designated yet.
  if (diminisher_moves == 0) return {.usable = false};

  int s2 = s2_copy(history);
  MemoHint hint;
  hint.tag = static_cast<std::uint64_t>(s2);
  hint.colors.assign(state.base->order, 0);
  for (int v = 0; v < state.base->order; ++v) {
    hint.colors[v] = layout_.copy_of(v) == s2 ? 1 : 0;
  }
  return hint;
}

int LowestIdStrategy::choose(const GameState& state, std::span<const PlayedMove>) const {
  if (state.empty()) fail(Errc::EmptyState, "lowest-id strategy on empty state");
  return state.alive.lowest();
}

int RandomStrategy::choose(const GameState& state, std::span<const PlayedMove> history) const {
  if (state.empty()) fail(Errc::EmptyState, "random strategy on empty state");
  std::vector<int> moves = legal_moves(state);
  SplitMix64 rng(mix64(seed_, history.size() + 1));
  return moves[rng.below(moves.size())];
}

int OptimalStrategy::choose(const GameState& state, std::span<const PlayedMove>) const {
  if (state.empty()) fail(Errc::EmptyState, "optimal strategy on empty state");
  return solve(state, side_, options_).optimal_moves.front();
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, Mover side,
                                        const TkLayout* tk_layout) {
  if (name == "greedy") return std::make_unique<GreedySweller>();
  if (name == "lowest") return std::make_unique<LowestIdStrategy>();
  if (name == "optimal") return std::make_unique<OptimalStrategy>(side);
  if (name == "tk") {
    if (!tk_layout) fail(Errc::LayoutMismatch, "tk strategy requires a T_k layout");
    return std::make_unique<TkDiminisher>(*tk_layout);
  }
  if (name.rfind("random:", 0) == 0) {
    return std::make_unique<RandomStrategy>(std::stoull(name.substr(7)));
  }
  fail(Errc::ParseError, "unknown strategy: " + name);
}

}  // namespace cig
