#include "cig/engine.hpp"

#include <nlohmann/json.hpp>

#include "cig/errors.hpp"

namespace cig {

const char* mover_name(Mover m) { return m == Mover::Sweller ? "sweller" : "diminisher"; }

std::vector<int> legal_moves(const GameState& state) {
  std::vector<int> moves;
  moves.reserve(state.alive_count());
  state.alive.for_each([&](int v) { moves.push_back(v); });
  return moves;
}

GameTrace play_game(const Forest& f, Mover first, const Strategy& sweller,
                    const Strategy& diminisher) {
  GameTrace trace{f, first, {}};
  std::vector<PlayedMove> history;
  GameState state = GameState::initial(trace.initial);
  Mover mover = first;
  int counts[2] = {0, 0};
  while (!state.empty()) {
    const Strategy& strat = mover == Mover::Sweller ? sweller : diminisher;
    int u = strat.choose(state, history);
    if (u < 0 || u >= f.order || !state.alive.test(u)) {
      fail(Errc::IllegalStrategyMove,
           std::string(mover_name(mover)) + " strategy returned dead vertex " + std::to_string(u));
    }
    auto [next, delta] = apply_move(state, u);
    int idx = ++counts[mover == Mover::Sweller ? 0 : 1];
    trace.moves.push_back({mover, u, delta, idx, static_cast<int>(trace.moves.size()) + 1});
    history.push_back({mover, u});
    state = next;
    mover = other(mover);
  }
  if (!chosen_set_is_maximal_independent(trace)) {
    fail(Errc::IllegalStrategyMove, "played vertices do not form a maximal independent set");
  }
  return trace;
}

ConservationReport check_trace_conservation(const GameTrace& trace) {
  ConservationReport r;
  const Forest& f = trace.initial;
  for (const auto& m : trace.moves) {
    r.vertex_sum += m.delta.v;
    r.edge_sum += m.delta.e;
    r.iso_sum += m.delta.k;
  }
  r.vertex_expected = f.order;
  r.edge_expected = f.order - f.component_count;
  r.iso_expected = -isolated_count(GameState::initial(f));
  if (r.vertex_sum != r.vertex_expected) {
    r.ok = false;
    r.violation = "vertex sum " + std::to_string(r.vertex_sum) + " != " +
                  std::to_string(r.vertex_expected);
  } else if (r.edge_sum != r.edge_expected) {
    r.ok = false;
    r.violation =
        "edge sum " + std::to_string(r.edge_sum) + " != " + std::to_string(r.edge_expected);
  } else if (r.iso_sum != r.iso_expected) {
    r.ok = false;
    r.violation = "isolated-vertex sum " + std::to_string(r.iso_sum) + " != " +
                  std::to_string(r.iso_expected);
  }
  return r;
}

bool chosen_set_is_maximal_independent(const GameTrace& trace) {
  const Forest& f = trace.initial;
  VertexSet chosen;
  for (const auto& m : trace.moves) chosen.set(m.vertex);
  VertexSet dominated;  // union of closed neighbourhoods
  bool independent = true;
  chosen.for_each([&](int v) {
    if (f.open_mask[v].intersects(chosen)) independent = false;
    dominated = dominated | f.closed_mask[v];
  });
  return independent && dominated == VertexSet::full(f.order);
}

std::string trace_json(const GameTrace& trace) {
  nlohmann::ordered_json j;
  j["n"] = trace.initial.order;
  j["C"] = trace.initial.component_count;
  j["first_mover"] = mover_name(trace.first_mover);
  j["moves"] = nlohmann::ordered_json::array();
  for (const auto& m : trace.moves) {
    j["moves"].push_back({{"mover", mover_name(m.mover)},
                          {"vertex", m.vertex},
                          {"v", m.delta.v},
                          {"e", m.delta.e},
                          {"k", m.delta.k},
                          {"m8", m.delta.m8}});
  }
  j["N"] = trace.total_moves();
  return j.dump(2);
}

}  // namespace cig
