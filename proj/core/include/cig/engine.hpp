#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cig/forest.hpp"

namespace cig {

enum class Mover { Sweller, Diminisher };

inline Mover other(Mover m) { return m == Mover::Sweller ? Mover::Diminisher : Mover::Sweller; }

const char* mover_name(Mover m);

struct PlayedMove {
  Mover mover;
  int vertex;
};

// Pluggable deterministic move selector. `history` is the full list of moves
// played so far in the current game, in order.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual int choose(const GameState& state, std::span<const PlayedMove> history) const = 0;

  // Memoization support for restricted solves. A strategy whose choices depend
  // on more than the bare state must either declare the relevant history via
  // `tag`/`colors` or mark the position unusable for memoization.
  struct MemoHint {
    bool usable = true;
    std::uint64_t tag = 0;
    std::vector<std::uint8_t> colors;  // empty = uncolored
  };
  virtual MemoHint memo_hint(const GameState&, std::span<const PlayedMove>) const { return {}; }
};

struct MoveRecord {
  Mover mover;
  int vertex;
  MoveDelta delta;
  int player_index;  // 1-based index among this player's own moves
  int move_number;   // 1-based global move number
};

struct GameTrace {
  Forest initial;
  Mover first_mover;
  std::vector<MoveRecord> moves;

  int total_moves() const { return static_cast<int>(moves.size()); }  // N
  int round_count() const { return total_moves() / 2; }               // r
};

// Every alive vertex is a legal move.
std::vector<int> legal_moves(const GameState& state);

// Plays a full game. Verifies post-hoc that the chosen vertices form a
// maximal independent set of f. Throws IllegalStrategyMove if a strategy
// returns a dead vertex.
GameTrace play_game(const Forest& f, Mover first, const Strategy& sweller,
                    const Strategy& diminisher);

struct ConservationReport {
  bool ok = true;
  int vertex_sum = 0, vertex_expected = 0;
  int edge_sum = 0, edge_expected = 0;
  int iso_sum = 0, iso_expected = 0;
  std::string violation;  // empty when ok
};

// Sum(v) = n, Sum(e) = n - C, Sum(k) = -K(initial).
ConservationReport check_trace_conservation(const GameTrace& trace);

bool chosen_set_is_maximal_independent(const GameTrace& trace);

// Trace export: {n, C, first_mover, moves:[{mover, vertex, v, e, k, m8}], N}.
std::string trace_json(const GameTrace& trace);

}  // namespace cig
