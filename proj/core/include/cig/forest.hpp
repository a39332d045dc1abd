#pragma once

#include <utility>
#include <vector>

#include "cig/bitset.hpp"

namespace cig {

// Immutable simple acyclic undirected graph with dense vertex ids 0..n-1.
// Edge count is always order - component_count.
struct Forest {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;
  std::vector<VertexSet> open_mask;    // N(v)
  std::vector<VertexSet> closed_mask;  // N[v]
  int component_count = 0;
};

// Validates and builds a Forest. Throws CycleDetected, InvalidVertexId,
// DuplicateEdge, CapacityExceeded.
Forest build_forest(int n, std::vector<std::pair<int, int>> edges);

// Per-move metrics in the residual formulation.
// m8 is the integer-scaled potential 8v - 3e - 5k; all score comparisons
// happen in eighths so there are no floating-point ties anywhere.
struct MoveDelta {
  int v = 0;   // vertices removed
  int e = 0;   // edges removed
  int k = 0;   // change in isolated-vertex count
  int m8 = 0;  // 8v - 3e - 5k

  bool operator==(const MoveDelta&) const = default;
};

// Residual position: the subgraph of `base` induced on `alive`.
struct GameState {
  const Forest* base = nullptr;
  VertexSet alive;

  static GameState initial(const Forest& f) { return {&f, VertexSet::full(f.order)}; }

  bool empty() const { return alive.empty(); }
  int alive_count() const { return alive.count(); }
};

int isolated_count(const GameState& state);

// Metrics of playing u (alive) without mutating the state. Throws DeadVertex.
MoveDelta move_delta(const GameState& state, int u);

// Plays u: removes N[u] from the alive set. Throws DeadVertex.
std::pair<GameState, MoveDelta> apply_move(const GameState& state, int u);

int residual_edge_count(const GameState& state);
int residual_component_count(const GameState& state);
bool residual_is_acyclic(const GameState& state);

}  // namespace cig
