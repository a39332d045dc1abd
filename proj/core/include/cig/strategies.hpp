#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cig/engine.hpp"
#include "cig/generators.hpp"
#include "cig/solver.hpp"

namespace cig {

struct StrategyParams {
  int alpha_eighths = 3;   // alpha = 3/8
  int beta_eighths = 13;   // beta = 13/8
  enum class TieBreak { LowestId } tie_break = TieBreak::LowestId;
};

// Integer potential of a move under params: 8v - alpha8*e + (8 - beta8)*k.
// Defaults give the stock m8 = 8v - 3e - 5k.
int potential8(const MoveDelta& delta, const StrategyParams& params);

// All alive vertices attaining the minimum potential, ascending.
std::vector<int> greedy_argmin(const GameState& state, const StrategyParams& params);

// Picks a minimizer of the move potential; ties broken by lowest vertex id.
class GreedySweller final : public Strategy {
 public:
  explicit GreedySweller(StrategyParams params = {}) : params_(params) {}
  int choose(const GameState& state, std::span<const PlayedMove> history) const override;
  const StrategyParams& params() const { return params_; }

 private:
  StrategyParams params_;
};

// Diminisher strategy for T_k: answer a non-central opening with a central
// vertex, then keep playing middle vertices of untouched legs in the copy
// whose center was never played; lowest-id legal vertex once those run out.
class TkDiminisher final : public Strategy {
 public:
  explicit TkDiminisher(TkLayout layout) : layout_(std::move(layout)) {}
  int choose(const GameState& state, std::span<const PlayedMove> history) const override;
  MemoHint memo_hint(const GameState& state, std::span<const PlayedMove> history) const override;

 private:
  // 1 or 2 once some center has been played, 0 before that.
  int s2_copy(std::span<const PlayedMove> history) const;

  TkLayout layout_;
};

class LowestIdStrategy final : public Strategy {
 public:
  int choose(const GameState& state, std::span<const PlayedMove> history) const override;
};

// Deterministic in (seed, move number).
class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
  int choose(const GameState& state, std::span<const PlayedMove> history) const override;

 private:
  std::uint64_t seed_;
};

// Wraps the exact solver; plays the lowest-id optimal move for its side.
class OptimalStrategy final : public Strategy {
 public:
  OptimalStrategy(Mover side, SolveOptions options = {}) : side_(side), options_(options) {}
  int choose(const GameState& state, std::span<const PlayedMove> history) const override;

 private:
  Mover side_;
  SolveOptions options_;
};

// Names accepted by the CLI: greedy, tk, lowest, random:<seed>, optimal.
// `side` is the side the strategy will play; `tk_layout` is required for "tk".
std::unique_ptr<Strategy> make_strategy(const std::string& name, Mover side,
                                        const TkLayout* tk_layout = nullptr);

}  // namespace cig
